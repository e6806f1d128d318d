#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "halfzeta/report_json.hpp"

namespace halfzeta {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;   ///< what was covered
    std::string witness;  ///< first counterexample on failure
};

struct VerifySuiteResult {
    std::vector<CheckRecord> checks;

    bool passed() const;
    /// 0 when nothing failed, 1 otherwise.
    int exit_code() const { return passed() ? 0 : 1; }
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint32_t p = 3;
    int f = 1;
    int genus = 2;
    int count = 20;
    std::uint64_t seed = 7;
    int workers = 1;
    /// Names of checks whose input is deliberately perturbed (soundness probes).
    std::set<std::string> inject;
};

/// Every check in run order.
const std::vector<std::string>& verify_check_names();
/// Checks of a suite: curve, motive, padic or all. Throws input_error otherwise.
std::vector<std::string> suite_checks(const std::string& suite);

/// Throws input_error for a bad suite, unknown injection target or bad order.
VerifySuiteResult run_verify(const VerifyOptions& opts);

ojson verify_json(const VerifySuiteResult& r, const VerifyOptions& opts);

}  // namespace halfzeta
