#pragma once

/**
 * @file cli.hpp
 * @brief The tentspec command line.
 *
 * Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace tentspec {

struct CheckResult {
    std::string name;
    unsigned n;
    bool pass;
};

/// Every exact identity for n = 1..n_max, in a fixed order.
std::vector<CheckResult> run_verification(unsigned n_max);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tentspec
