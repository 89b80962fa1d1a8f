#pragma once

// Exhaustive property suites over small parameter grids, run by `shibij verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shibij {

struct PropertyResult {
    std::string name;
    bool passed = true;
    /// Reported for information only; never fails the suite.
    bool informational = false;
    std::uint64_t cases = 0;
    std::string counterexample;
    std::string note;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

struct VerifyOptions {
    unsigned jobs = 0;
};

/// counts, affine, tableaux, minimality, bj1, bj2, fkt, appendix-b, diagram
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts = {});

/// One line per property: "PASS suite/name (cases)" or "FAIL ...: counterexample".
std::string format_report(const SuiteReport& report);

}  // namespace shibij
