#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "btinv/block_toeplitz_engine.hpp"
#include "btinv/factorization.hpp"
#include "generate.hpp"
#include "io.hpp"

namespace btinv::cli {

std::vector<BenchRecord> run_bench(std::span<const std::size_t> n1_values, std::span<const std::size_t> n2_values,
                                   std::uint64_t seed) {
    std::vector<std::size_t> n1s(n1_values.begin(), n1_values.end());
    std::vector<std::size_t> n2s(n2_values.begin(), n2_values.end());
    std::sort(n1s.begin(), n1s.end());
    n1s.erase(std::unique(n1s.begin(), n1s.end()), n1s.end());
    std::sort(n2s.begin(), n2s.end());
    n2s.erase(std::unique(n2s.begin(), n2s.end()), n2s.end());

    StepOptions options;
    options.check_identity = false;
    AssembleOptions assemble_options;
    assemble_options.verify = false;

    std::vector<BenchRecord> records;
    for (const std::size_t n1 : n1s) {
        for (const std::size_t n2 : n2s) {
            const BlockToeplitzMatrix m = gen::block_toeplitz(n1, n2, seed);
            const auto start = std::chrono::steady_clock::now();
            const FastState state = run_block_toeplitz(m, options);
            const auto stop = std::chrono::steady_clock::now();

            const InverseFactorization f = assemble(state, m, assemble_options);
            std::mt19937_64 rng(seed);
            const std::vector<Complex> b = gen::vector(m.order(), rng);
            const std::vector<Complex> x = solve(f, b);
            const std::vector<Complex> mx = m.multiply(x);
            double bmax = 0.0;
            for (const Complex& z : b) {
                bmax = std::max(bmax, std::abs(z));
            }

            BenchRecord r;
            r.n1 = n1;
            r.n2 = n2;
            r.op_counter = state.stats.op_count;
            r.wall_time = std::chrono::duration<double>(stop - start).count();
            r.predicted_opcount = predicted_opcount(n1, n2, 4.0);
            r.residual = max_abs_difference(mx, b) / bmax;
            records.push_back(r);
        }
    }
    return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << "n1,n2,op_counter,wall_time,predicted_opcount,residual\n";
    for (const BenchRecord& r : records) {
        out << r.n1 << ',' << r.n2 << ',' << r.op_counter << ',' << io::format_double(r.wall_time) << ','
            << io::format_double(r.predicted_opcount) << ',' << io::format_double(r.residual) << '\n';
    }
}

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        return std::nullopt;
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

}  // namespace btinv::cli
