#pragma once

// Named invariant suites run by the `verify` subcommand.

#include <cstdint>
#include <string>
#include <vector>

namespace dhj {

struct PropertyTally {
    std::string property;
    int passed = 0;
    int failed = 0;
    int skipped = 0;  ///< inputs where the procedure reported an unmet hypothesis
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyTally> tallies;

    bool ok() const;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 1);

} // namespace dhj
