#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "btinv/types.hpp"

namespace btinv::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNotPositiveDefinite = 2,
    kIoError = 3,
    kInternalError = 4,
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    Tolerance tolerance;
};

struct FactorArgs {
    std::string input;
    std::optional<std::string> dump;
    bool check = false;
};

struct SolveArgs {
    std::string input;
    std::string rhs;
    std::optional<std::string> out;
};

struct InvertArgs {
    std::string input;
    std::string out;
    std::string method = "triangular";
};

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct SelftestArgs {
    std::size_t max_n = 64;
};

struct BenchArgs {
    std::vector<std::size_t> n1;
    std::vector<std::size_t> n2;
    std::string csv;
    std::uint64_t seed = 1;
};

int cmd_factor(const FactorArgs& args, Context& ctx);
int cmd_solve(const SolveArgs& args, Context& ctx);
int cmd_invert(const InvertArgs& args, Context& ctx);
int cmd_gen(const GenArgs& args, Context& ctx);
int cmd_selftest(const SelftestArgs& args, Context& ctx);
int cmd_bench(const BenchArgs& args, Context& ctx);

/// Parses the command line, runs the subcommand and maps exceptions to
/// exit codes. Reads BTINV_TOL from the environment.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace btinv::cli
