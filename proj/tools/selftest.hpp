#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "btinv/types.hpp"

namespace btinv::cli {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariant suite at desk scale; instance orders stay at or below max_n.
std::vector<CheckResult> run_selftest(std::size_t max_n, const Tolerance& tolerance);

}  // namespace btinv::cli
