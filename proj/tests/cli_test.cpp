#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "btinv/oracle.hpp"
#include "commands.hpp"
#include "io.hpp"

using namespace btinv;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome btinv_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "btinv");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("btinv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
    }

    std::string read(const std::string& name) const {
        std::ifstream in(dir_ / name);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenIsDeterministic) {
    ASSERT_EQ(btinv_cli({"gen", "--kind", "bt", "--n1", "2", "--n2", "3", "--seed", "5", "--out", path("a")}).code, 0);
    ASSERT_EQ(btinv_cli({"gen", "--kind", "bt", "--n1", "2", "--n2", "3", "--seed", "5", "--out", path("b")}).code, 0);
    ASSERT_EQ(btinv_cli({"gen", "--kind", "bt", "--n1", "2", "--n2", "3", "--seed", "6", "--out", path("c")}).code, 0);
    EXPECT_EQ(read("a"), read("b"));
    EXPECT_NE(read("a"), read("c"));
    ASSERT_EQ(btinv_cli({"gen", "--kind", "dense", "--n", "4", "--out", path("d")}).code, 0);
    EXPECT_TRUE(std::holds_alternative<DenseHermitianMatrix>(io::read_matrix(path("d"))));
}

TEST_F(CliTest, GenRequiresSizes) {
    EXPECT_EQ(btinv_cli({"gen", "--kind", "bt", "--n1", "2", "--out", path("a")}).code, cli::kUsage);
    EXPECT_EQ(btinv_cli({"gen", "--kind", "other", "--out", path("a")}).code, cli::kUsage);
}

TEST_F(CliTest, FactorReportsOpCount) {
    ASSERT_EQ(btinv_cli({"gen", "--kind", "bt", "--n1", "2", "--n2", "3", "--out", path("m")}).code, 0);
    const Outcome r = btinv_cli({"factor", "--input", path("m"), "--check", "--dump", path("f")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("op_count 100\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("oracle_residual"), std::string::npos);
    EXPECT_EQ(read("f").rfind("FACTOR 1\n", 0), 0u);
}

TEST_F(CliTest, SolveIdentityBlockToeplitz) {
    write("m", "BTHM 1\nn1 2\nn2 2\n1 0 0 0\n0 0 1 0\n\n0 0 0 0\n0 0 0 0\n");
    write("b", "VEC 1\nn 4\n1 0\n2 0\n0 3\n-4 0\n");
    const Outcome r = btinv_cli({"solve", "--input", path("m"), "--rhs", path("b"), "--out", path("x")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::read_vector(path("x")), io::read_vector(path("b")));
}

TEST_F(CliTest, SolveToStdout) {
    write("m", "DHM 1\nn 2\n1 0 0.5 0\n0.5 0 1 0\n");
    write("b", "VEC 1\nn 2\n1 0\n0 0\n");
    const Outcome r = btinv_cli({"solve", "--input", path("m"), "--rhs", path("b")});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const std::vector<Complex> x = io::parse_vector(in);
    EXPECT_NEAR(x[0].real(), 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(x[1].real(), -2.0 / 3.0, 1e-15);
}

TEST_F(CliTest, SolveLengthMismatchIsParseError) {
    write("m", "DHM 1\nn 2\n1 0 0 0\n0 0 1 0\n");
    write("b", "VEC 1\nn 3\n1 0\n0 0\n0 0\n");
    EXPECT_EQ(btinv_cli({"solve", "--input", path("m"), "--rhs", path("b")}).code, cli::kIoError);
}

TEST_F(CliTest, InvertBothMethods) {
    write("m", "BTHM 1\nn1 1\nn2 2\n1 0\n0.5 0\n");
    ComplexMatrix expected(2, 2);
    expected(0, 0) = expected(1, 1) = 4.0 / 3.0;
    expected(0, 1) = expected(1, 0) = -2.0 / 3.0;
    for (const std::string method : {"triangular", "gh"}) {
        const Outcome r = btinv_cli({"invert", "--input", path("m"), "--out", path("inv"), "--method", method});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_LE(max_abs_difference(io::read_general(path("inv")), expected), 1e-15) << method;
    }
}

TEST_F(CliTest, InvertGhNeedsBlockToeplitz) {
    write("m", "DHM 1\nn 1\n2 0\n");
    EXPECT_EQ(btinv_cli({"invert", "--input", path("m"), "--out", path("inv"), "--method", "gh"}).code, cli::kUsage);
}

TEST_F(CliTest, SelftestPasses) {
    const Outcome r = btinv_cli({"selftest", "--max-n", "32"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST_F(CliTest, IndefiniteExitsWithNotPositiveDefinite) {
    write("m", "DHM 1\nn 2\n1 0 2 0\n2 0 1 0\n");
    const Outcome r = btinv_cli({"factor", "--input", path("m")});
    EXPECT_EQ(r.code, cli::kNotPositiveDefinite);
    EXPECT_NE(r.err.find("(0,1)"), std::string::npos) << r.err;
    write("bt", "BTHM 1\nn1 1\nn2 2\n1 0\n1.5 0\n");
    EXPECT_EQ(btinv_cli({"factor", "--input", path("bt")}).code, cli::kNotPositiveDefinite);
}

TEST_F(CliTest, BadInputExitsWithIoError) {
    write("m", "DHM 1\nn 2\n1 0 1 1\n1 1 1 0\n");
    const Outcome r = btinv_cli({"factor", "--input", path("m")});
    EXPECT_EQ(r.code, cli::kIoError);
    EXPECT_NE(r.err.find(":4:"), std::string::npos) << r.err;
    EXPECT_EQ(btinv_cli({"factor", "--input", path("missing")}).code, cli::kIoError);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(btinv_cli({}).code, cli::kUsage);
    EXPECT_EQ(btinv_cli({"factor"}).code, cli::kUsage);
    EXPECT_EQ(btinv_cli({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(btinv_cli({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, BenchWritesCsvWithQuadraticGrowth) {
    const Outcome r = btinv_cli({"bench", "--n1", "2", "--n2", "8,16", "--csv", path("b.csv")});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream csv(read("b.csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "n1,n2,op_counter,wall_time,predicted_opcount,residual");
    std::vector<double> ops;
    while (std::getline(csv, line)) {
        std::istringstream fields(line);
        std::string f;
        std::vector<std::string> cols;
        while (std::getline(fields, f, ',')) {
            cols.push_back(f);
        }
        ASSERT_EQ(cols.size(), 6u);
        EXPECT_EQ(std::stod(cols[2]), std::stod(cols[4]));
        EXPECT_LE(std::stod(cols[5]), 1e-10);
        ops.push_back(std::stod(cols[2]));
    }
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_NEAR(ops[1] / ops[0], 4.0, 0.3);
}

TEST_F(CliTest, ToleranceOverrideMustBePositive) {
    ::setenv("BTINV_TOL", "-1", 1);
    const int code = btinv_cli({"selftest", "--max-n", "4"}).code;
    ::unsetenv("BTINV_TOL");
    EXPECT_EQ(code, cli::kUsage);
}
