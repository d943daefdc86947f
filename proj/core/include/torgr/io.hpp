#pragma once

// Structured-text documents (schema 1) and computer-algebra exports.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "torgr/kernels.hpp"

namespace torgr {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const json& j);
json to_json(const std::vector<Polynomial>& fs);
std::vector<Polynomial> polynomials_from_json(const json& j);

json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const json& j);

json to_json(const RationalPoint& p);
RationalPoint point_from_json(const json& j);

json to_json(const MultiProjPoint& y);
MultiProjPoint multiproj_from_json(const json& j);

json to_json(const GroebnerStats& s, bool with_time = false);
GroebnerStats stats_from_json(const json& j);

json to_json(const KernelReport& r);
KernelReport kernel_report_from_json(const json& j);

json to_json(const ConjectureReport& r);

/// Wraps `data` as {"schema": 1, "kind": kind, "data": data}.
json document(const std::string& kind, json data);
/// Checks schema and kind, returns the payload. Throws SchemaMismatch or ParseError.
json open_document(const json& doc, const std::string& kind);
json parse_document_text(const std::string& text);

/// Polynomial in export syntax, e.g. "p_1_2*p_3_4 - p_1_3*p_2_4 + 3/2*z_1_2^2".
Polynomial parse_polynomial(const std::string& text);

enum class CasDialect { singular, sage };
CasDialect parse_dialect(const std::string& s); // cas-a (Singular) or cas-b (Sage)
/// Ring declaration and ideal generators. `ring` lists the variables; when empty
/// the variables of the ideal are used, which must then come from one namespace.
std::string export_cas(const std::vector<Polynomial>& ideal, const std::vector<VarId>& ring, CasDialect dialect);

} // namespace torgr
