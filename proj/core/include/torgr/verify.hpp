#pragma once

// Check battery with a machine-readable verdict per check.

#include <cstdint>
#include <string>
#include <vector>

#include "torgr/io.hpp"

namespace torgr {

enum class CheckStatus { pass, fail, skipped, resource_exceeded };
std::string status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::skipped;
    json details;          // instance parameters on pass, witness on fail
    double elapsed = 0;    // seconds, never serialized into reports
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    BuchbergerOptions engine;   // per-check caps; max_seconds applies to each check
    unsigned parallelism = 1;   // checks run concurrently
};

/// Stable check ids in report order.
const std::vector<std::string>& check_ids();

/// Runs the selected checks; results come back in selection order.
std::vector<CheckResult> run_suite(const std::vector<std::string>& selection, const SuiteOptions& opts = {});
CheckResult run_check(const std::string& id, const SuiteOptions& opts = {});

json to_json(const CheckResult& r);
CheckResult check_result_from_json(const json& j);
json report_document(const std::vector<CheckResult>& results, const SuiteOptions& opts);

} // namespace torgr
