#pragma once

#include <stdexcept>
#include <string>

namespace torgr {

enum class ErrorKind { invalid_parameter, precondition, resource_exceeded, parse, schema };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error(ErrorKind::invalid_parameter, what) {}
};

struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

struct ResourceExceeded : Error {
    explicit ResourceExceeded(const std::string& what) : Error(ErrorKind::resource_exceeded, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

struct SchemaMismatch : Error {
    explicit SchemaMismatch(const std::string& what) : Error(ErrorKind::schema, what) {}
};

} // namespace torgr
