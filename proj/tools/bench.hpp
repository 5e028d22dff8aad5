#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace btinv::cli {

struct BenchRecord {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::uint64_t op_counter = 0;
    double wall_time = 0.0;
    double predicted_opcount = 0.0;
    double residual = 0.0;
};

/// One record per (n1, n2) pair, sorted by (n1, n2).
std::vector<BenchRecord> run_bench(std::span<const std::size_t> n1_values, std::span<const std::size_t> n2_values,
                                   std::uint64_t seed);

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Least-squares slope of log(y) against log(x); nullopt with fewer than two
/// distinct x.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace btinv::cli
