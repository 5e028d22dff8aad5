#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "btinv/btinv.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "selftest.hpp"

namespace btinv::cli {

namespace {

using io::format_double;

// Factorization of either matrix kind plus what the summary reports.
struct Factored {
    InverseFactorization f;
    std::uint64_t op_count = 0;
};

Factored factor(const io::AnyMatrix& any, const Tolerance& tolerance) {
    StepOptions options;
    options.tolerance = tolerance;
    AssembleOptions assemble_options;
    assemble_options.tolerance = tolerance;
    if (const auto* bt = std::get_if<BlockToeplitzMatrix>(&any)) {
        const FastState state = run_block_toeplitz(*bt, options);
        return {assemble(state, *bt, assemble_options), state.stats.op_count};
    }
    const auto& dense = std::get<DenseHermitianMatrix>(any);
    StreamingResult r = run_dense_streaming(dense, options);
    return {assemble(r.terminal, dense, assemble_options), r.stats.op_count};
}

std::size_t order(const io::AnyMatrix& any) {
    return std::visit([](const auto& m) { return m.order(); }, any);
}

double max_abs(const io::AnyMatrix& any) {
    return std::visit([](const auto& m) { return m.max_abs(); }, any);
}

std::vector<Complex> multiply(const io::AnyMatrix& any, std::span<const Complex> x) {
    if (const auto* bt = std::get_if<BlockToeplitzMatrix>(&any)) {
        return bt->multiply(x);
    }
    return std::get<DenseHermitianMatrix>(any).entries() * x;
}

DenseHermitianMatrix to_dense(const io::AnyMatrix& any) {
    if (const auto* bt = std::get_if<BlockToeplitzMatrix>(&any)) {
        return bt->to_dense();
    }
    return std::get<DenseHermitianMatrix>(any);
}

void print_values(std::ostream& out, const char* name, std::span<const double> values) {
    out << name;
    for (const double v : values) {
        out << ' ' << format_double(v);
    }
    out << '\n';
}

void dump_factor(std::ostream& out, const InverseFactorization& f) {
    out << "FACTOR 1\n" << "n " << f.n << '\n';
    print_values(out, "DP", f.dp);
    print_values(out, "DQ", f.dq);
    out << "RP\n";
    io::write_general(out, f.rp);
    out << "RQ\n";
    io::write_general(out, f.rq);
}

}  // namespace

int cmd_factor(const FactorArgs& args, Context& ctx) {
    const io::AnyMatrix m = io::read_matrix(args.input);
    const Factored r = factor(m, ctx.tolerance);
    const InverseFactorization& f = r.f;

    ctx.out << "kind " << (std::holds_alternative<BlockToeplitzMatrix>(m) ? "BTHM" : "DHM") << '\n';
    ctx.out << "n " << f.n << '\n';
    if (const auto* bt = std::get_if<BlockToeplitzMatrix>(&m)) {
        ctx.out << "n1 " << bt->block_order() << '\n' << "n2 " << bt->block_count() << '\n';
    }
    ctx.out << "op_count " << r.op_count << '\n';
    print_values(ctx.out, "DP", f.dp);
    print_values(ctx.out, "DQ", f.dq);
    ctx.out << "diagonality_residual_p " << format_double(f.diagonality_residual_p) << '\n';
    ctx.out << "diagonality_residual_q " << format_double(f.diagonality_residual_q) << '\n';

    int code = kOk;
    if (args.check) {
        const DenseHermitianMatrix dense = to_dense(m);
        const ComplexMatrix ip = invert(f, FactorSide::P);
        const double oracle = max_abs_difference(ip, oracle_inverse(dense));
        const double sides = max_abs_difference(ip, invert(f, FactorSide::Q));
        const double tol = ctx.tolerance.for_matrix(dense.max_abs(), f.n);
        ctx.out << "oracle_residual " << format_double(oracle) << '\n';
        ctx.out << "two_sided_agreement " << format_double(sides) << '\n';
        ctx.out << "tolerance " << format_double(tol) << '\n';
        if (!(oracle <= tol) || !(sides <= tol)) {
            ctx.err << "check failed: inverse residual exceeds tolerance\n";
            code = kInternalError;
        }
    }
    if (args.dump) {
        io::write_file(*args.dump, [&](std::ostream& out) { dump_factor(out, f); });
    }
    return code;
}

int cmd_solve(const SolveArgs& args, Context& ctx) {
    const io::AnyMatrix m = io::read_matrix(args.input);
    const std::vector<Complex> b = io::read_vector(args.rhs);
    if (b.size() != order(m)) {
        throw io::ParseError(args.rhs, 0,
                             "right-hand side has length " + std::to_string(b.size()) + ", matrix order is " +
                                 std::to_string(order(m)));
    }
    const Factored r = factor(m, ctx.tolerance);
    const std::vector<Complex> x = solve(r.f, b);
    const std::vector<Complex> mx = multiply(m, x);
    const double residual = max_abs_difference(mx, b);

    std::ostream& report = args.out ? ctx.out : ctx.err;
    report << "residual " << format_double(residual) << '\n';
    if (args.out) {
        io::write_file(*args.out, [&](std::ostream& out) { io::write_vector(out, x); });
    } else {
        io::write_vector(ctx.out, x);
    }
    double bmax = 0.0;
    for (const Complex& z : b) {
        bmax = std::max(bmax, std::abs(z));
    }
    if (!(residual <= ctx.tolerance.for_matrix(max_abs(m), order(m)) * std::max(1.0, bmax))) {
        ctx.err << "solve: residual exceeds tolerance\n";
        return kInternalError;
    }
    return kOk;
}

int cmd_invert(const InvertArgs& args, Context& ctx) {
    const io::AnyMatrix m = io::read_matrix(args.input);
    ComplexMatrix inverse;
    if (args.method == "gh") {
        const auto* bt = std::get_if<BlockToeplitzMatrix>(&m);
        if (bt == nullptr) {
            ctx.err << "invert: --method gh requires a BTHM input\n";
            return kUsage;
        }
        StepOptions options;
        options.tolerance = ctx.tolerance;
        const FastState state = run_block_toeplitz(*bt, options);
        inverse = gh_invert(gohberg_heinig(state, *bt, ctx.tolerance));
    } else {
        inverse = invert(factor(m, ctx.tolerance).f);
    }
    io::write_file(args.out, [&](std::ostream& out) { io::write_general(out, inverse); });
    return kOk;
}

int cmd_gen(const GenArgs& args, Context& ctx) {
    if (args.kind == "dense") {
        if (args.n == 0) {
            ctx.err << "gen: --kind dense needs --n\n";
            return kUsage;
        }
        const DenseHermitianMatrix m = gen::dense(args.n, args.seed);
        io::write_file(args.out, [&](std::ostream& out) { io::write_matrix(out, m); });
        return kOk;
    }
    if (args.n1 == 0 || args.n2 == 0) {
        ctx.err << "gen: --kind bt needs --n1 and --n2\n";
        return kUsage;
    }
    const BlockToeplitzMatrix m = gen::block_toeplitz(args.n1, args.n2, args.seed);
    io::write_file(args.out, [&](std::ostream& out) { io::write_matrix(out, m); });
    return kOk;
}

int cmd_selftest(const SelftestArgs& args, Context& ctx) {
    const std::vector<CheckResult> results = run_selftest(args.max_n, ctx.tolerance);
    bool ok = true;
    for (const CheckResult& r : results) {
        ctx.out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        ok = ok && r.passed;
    }
    ctx.out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
    return ok ? kOk : kInternalError;
}

int cmd_bench(const BenchArgs& args, Context& ctx) {
    const std::vector<BenchRecord> records = run_bench(args.n1, args.n2, args.seed);
    io::write_file(args.csv, [&](std::ostream& out) { write_csv(out, records); });
    write_csv(ctx.out, records);

    auto fit = [&](bool by_n2) {
        std::vector<std::size_t> fixed;
        for (const BenchRecord& r : records) {
            fixed.push_back(by_n2 ? r.n1 : r.n2);
        }
        std::sort(fixed.begin(), fixed.end());
        fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
        for (const std::size_t f : fixed) {
            std::vector<double> x;
            std::vector<double> y;
            for (const BenchRecord& r : records) {
                if ((by_n2 ? r.n1 : r.n2) == f && r.op_counter > 0) {
                    x.push_back(static_cast<double>(by_n2 ? r.n2 : r.n1));
                    y.push_back(static_cast<double>(r.op_counter));
                }
            }
            if (const auto slope = loglog_slope(x, y)) {
                ctx.out << "slope op_counter vs " << (by_n2 ? "n2 at n1=" : "n1 at n2=") << f << ": "
                        << format_double(*slope) << '\n';
            }
        }
    };
    fit(true);
    fit(false);
    return kOk;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Context ctx{out, err, {}};
    if (const char* env = std::getenv("BTINV_TOL")) {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(value > 0.0)) {
            err << "BTINV_TOL must be a positive number, got '" << env << "'\n";
            return kUsage;
        }
        ctx.tolerance.absolute_override = value;
    }

    CLI::App app{"Generalized reflection coefficients and structured inverses of Hermitian block-Toeplitz matrices",
                 "btinv"};
    app.require_subcommand(1);

    FactorArgs factor_args;
    auto* factor_cmd = app.add_subcommand("factor", "Compute both triangular inverse factorizations");
    factor_cmd->add_option("--input", factor_args.input, "DHM or BTHM matrix file")->required();
    factor_cmd->add_option("--dump", factor_args.dump, "Write the full factors to this file");
    factor_cmd->add_flag("--check", factor_args.check, "Compare against the Cholesky oracle");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve R x = b");
    solve_cmd->add_option("--input", solve_args.input, "DHM or BTHM matrix file")->required();
    solve_cmd->add_option("--rhs", solve_args.rhs, "VEC right-hand side")->required();
    solve_cmd->add_option("--out", solve_args.out, "VEC output (stdout if omitted)");

    InvertArgs invert_args;
    auto* invert_cmd = app.add_subcommand("invert", "Write the dense inverse (DCM)");
    invert_cmd->add_option("--input", invert_args.input, "DHM or BTHM matrix file")->required();
    invert_cmd->add_option("--out", invert_args.out, "DCM output")->required();
    invert_cmd->add_option("--method", invert_args.method, "triangular or gh")
        ->check(CLI::IsMember({"triangular", "gh"}));

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded positive definite instance");
    gen_cmd->add_option("--kind", gen_args.kind, "dense or bt")->required()->check(CLI::IsMember({"dense", "bt"}));
    gen_cmd->add_option("--n", gen_args.n, "Order (dense)");
    gen_cmd->add_option("--n1", gen_args.n1, "Block order (bt)");
    gen_cmd->add_option("--n2", gen_args.n2, "Number of blocks (bt)");
    gen_cmd->add_option("--seed", gen_args.seed, "Random seed");
    gen_cmd->add_option("--out", gen_args.out, "Output file")->required();

    SelftestArgs selftest_args;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");
    selftest_cmd->add_option("--max-n", selftest_args.max_n, "Largest instance order")->capture_default_str();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Sweep (n1, n2) and record operation counts");
    bench_cmd->add_option("--n1", bench_args.n1, "Comma-separated block orders")->required()->delimiter(',');
    bench_cmd->add_option("--n2", bench_args.n2, "Comma-separated block counts")->required()->delimiter(',');
    bench_cmd->add_option("--csv", bench_args.csv, "CSV output")->required();
    bench_cmd->add_option("--seed", bench_args.seed, "Random seed")->capture_default_str();

    std::vector<std::string> reversed(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*factor_cmd) return cmd_factor(factor_args, ctx);
        if (*solve_cmd) return cmd_solve(solve_args, ctx);
        if (*invert_cmd) return cmd_invert(invert_args, ctx);
        if (*gen_cmd) return cmd_gen(gen_args, ctx);
        if (*selftest_cmd) return cmd_selftest(selftest_args, ctx);
        if (*bench_cmd) return cmd_bench(bench_args, ctx);
    } catch (const NotPositiveDefinite& e) {
        err << "error: " << e.what() << '\n';
        return kNotPositiveDefinite;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsage;
}

}  // namespace btinv::cli
