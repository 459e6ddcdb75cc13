#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckec/weyl.hpp"

namespace heckec {

/// Outcome of one verification suite run. Deterministic for fixed
/// (suite, family, n, seed, budget).
struct SuiteReport {
    std::string suite;
    WeylType type{Family::A, 1};
    uint64_t seed = 0;
    size_t checks = 0;

    struct Failure {
        std::string what;
        std::string inputs;
        std::string expected;
        std::string got;
    };
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
    std::string text() const;
    std::string jsonStr() const;
};

/// Names of all registered suites.
std::vector<std::string> suiteNames();

/// Paper items each suite certifies, and the full list the harness demands.
std::vector<std::string> suiteCoverage(const std::string& name);
const std::vector<std::string>& requiredCoverageTags();
/// True when the union of all suite coverage equals the required tag list.
bool coverageComplete(std::vector<std::string>* missing = nullptr);

/// Runs one named suite. budget >= 1 scales the random-case counts.
SuiteReport runSuite(const std::string& name, const WeylType& t, uint64_t seed,
                     int budget = 1, bool allowSmallD = false);

}  // namespace heckec
