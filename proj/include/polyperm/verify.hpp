#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyperm/carlitz.hpp"

namespace polyperm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    std::int64_t millis = 0;
};

struct SuiteResult {
    std::string suite;
    bool pass = false;
    std::vector<CheckResult> checks;
};

/// Known suites: counting, rivest, p2-structure, fractal, reductions, all.
bool is_known_suite(const std::string& name);

/// Runs the named invariant suite. Throws Error for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t jet_gate = kDefaultEnumerationGate);

}  // namespace polyperm
