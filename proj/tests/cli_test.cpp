#include "vest/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using vest::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int const code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / ("vest_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }

    void TearDown() override { fs::remove_all(dir_); }

    std::string write(std::string const& name, std::string const& contents)
    {
        auto const path = dir_ / name;
        std::ofstream(path, std::ios::binary) << contents;
        return path.string();
    }

    std::string path(std::string const& name) const { return (dir_ / name).string(); }

    static std::string slurp(std::string const& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path dir_;
};

constexpr char const* k3_edgelist = "3\n0 1\n1 2\n0 2\n";
constexpr char const* k4_dimacs = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

} // namespace

TEST_F(CliTest, ReduceWritesInstanceAndSummary)
{
    auto const graph = write("k3.txt", k3_edgelist);
    auto const r = invoke({"reduce", "--graph", graph, "--k", "3", "--out", path("k3.vest")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "d 16\nm 6\nh 9\ns 6\n");
    EXPECT_EQ(slurp(path("k3.vest")).rfind("VEST 1\nd 16\n", 0), 0u);
    EXPECT_TRUE(fs::exists(path("k3.vest.layout")));
}

TEST_F(CliTest, ReduceSingleVertexAndBadK)
{
    auto const graph = write("one.txt", "1\n");
    auto const ok = invoke({"reduce", "--graph", graph, "--k", "1", "--out", path("one.vest")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out.rfind("d 4\n", 0), 0u);
    EXPECT_EQ(invoke({"reduce", "--graph", graph, "--k", "0", "--out", path("x.vest")}).code, 1);
}

TEST_F(CliTest, EvalMethodsAndBudget)
{
    auto const graph = write("k3.txt", k3_edgelist);
    ASSERT_EQ(invoke({"reduce", "--graph", graph, "--k", "3", "--out", path("k3.vest")}).code, 0);
    for (auto const* method : {"naive", "dedup", "distinct-fast"}) {
        auto const r = invoke({"eval", "--instance", path("k3.vest"), "--k", "6", "--method", method});
        EXPECT_EQ(r.code, 0) << method << ": " << r.err;
        EXPECT_EQ(r.out, "720\n") << method;
    }
    auto const over = invoke({"eval", "--instance", path("k3.vest"), "--k", "6", "--method", "naive", "--budget", "1000"});
    EXPECT_EQ(over.code, 4);

    auto const p3 = write("p3.txt", "3\n0 1\n1 2\n");
    ASSERT_EQ(invoke({"reduce", "--graph", p3, "--k", "3", "--out", path("p3.vest")}).code, 0);
    auto const r = invoke({"eval", "--instance", path("p3.vest"), "--k", "6", "--method", "dedup"});
    EXPECT_EQ(r.out, "0\n");
}

TEST_F(CliTest, EvalInputErrors)
{
    auto const corrupt = write("bad.vest", "VEST 1\nd 1\nm 1\nh 1\nv\n1/0\nT 0\nEND\nS\nEND\n");
    EXPECT_EQ(invoke({"eval", "--instance", corrupt, "--k", "2"}).code, 2);
    EXPECT_EQ(invoke({"eval", "--instance", path("missing.vest"), "--k", "2"}).code, 2);
    EXPECT_EQ(invoke({"eval", "--instance", corrupt}).code, 1);
    EXPECT_EQ(invoke({"eval", "--instance", corrupt, "--k", "2", "--method", "fast"}).code, 1);

    // distinct-fast without a sidecar is a usage error; with a foreign sidecar the instance is rejected
    auto const plain = write("plain.vest", "VEST 1\nd 1\nm 1\nh 1\nv\n0\nT 0\n0 0 2\nEND\nS\n0 0 1\nEND\n");
    EXPECT_EQ(invoke({"eval", "--instance", plain, "--k", "2", "--method", "distinct-fast"}).code, 1);
    write("plain.vest.layout", "VEST-LAYOUT 1\nn 1\nk 1\n");
    EXPECT_EQ(invoke({"eval", "--instance", plain, "--k", "2", "--method", "distinct-fast"}).code, 2);
}

TEST_F(CliTest, MSeq)
{
    auto const graph = write("k3.txt", k3_edgelist);
    ASSERT_EQ(invoke({"reduce", "--graph", graph, "--k", "3", "--out", path("k3.vest")}).code, 0);
    auto const r = invoke({"mseq", "--instance", path("k3.vest"), "--upto", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "0\n0\n0\n0\n0\n720\n");

    auto const zero = write("zero.vest", "VEST 1\nd 1\nm 1\nh 1\nv\n0\nT 0\n0 0 2\nEND\nS\n0 0 1\nEND\n");
    EXPECT_EQ(invoke({"mseq", "--instance", zero, "--upto", "3", "--method", "naive"}).out, "1\n1\n1\n");
    EXPECT_EQ(invoke({"mseq", "--instance", zero, "--upto", "0"}).code, 1);
}

TEST_F(CliTest, Cliques)
{
    auto const k4 = write("k4.col", k4_dimacs);
    EXPECT_EQ(invoke({"cliques", "--graph", k4, "--k", "3"}).out, "4\n");
    EXPECT_EQ(invoke({"cliques", "--graph", k4, "--k", "1"}).out, "4\n");
    auto const as_text = write("k4.dimacs", k4_dimacs);
    EXPECT_EQ(invoke({"cliques", "--graph", as_text, "--format", "dimacs", "--k", "2"}).out, "6\n");
    EXPECT_EQ(invoke({"cliques", "--graph", as_text, "--k", "2"}).code, 2); // inferred as edge list
    auto const loop = write("loop.col", "p edge 2 1\ne 1 1\n");
    EXPECT_EQ(invoke({"cliques", "--graph", loop, "--k", "1"}).code, 2);
}

TEST_F(CliTest, VerifyReportAndExitCodes)
{
    auto const k3 = write("k3.txt", k3_edgelist);
    auto const r = invoke({"verify", "--graph", k3, "--k", "3", "--method", "naive"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "k 3\ns 6\nC_k 1\nexpected 720\ncomputed 720\nmethod naive\nresult PASS\n");

    auto const k4 = write("k4.col", k4_dimacs);
    auto const fast = invoke({"verify", "--graph", k4, "--k", "2", "--method", "distinct-fast"});
    EXPECT_EQ(fast.code, 0);
    EXPECT_NE(fast.out.find("expected 36\n"), std::string::npos);

    EXPECT_EQ(invoke({"verify", "--graph", k4, "--k", "3", "--method", "naive", "--budget", "10"}).code, 4);
    EXPECT_EQ(invoke({"verify", "--graph", path("nope.txt"), "--k", "3"}).code, 2);
}

TEST_F(CliTest, OutputIsDeterministic)
{
    auto const graph = write("k3.txt", k3_edgelist);
    ASSERT_EQ(invoke({"reduce", "--graph", graph, "--k", "3", "--out", path("a.vest")}).code, 0);
    ASSERT_EQ(invoke({"reduce", "--graph", graph, "--k", "3", "--out", path("b.vest")}).code, 0);
    EXPECT_EQ(slurp(path("a.vest")), slurp(path("b.vest")));
    auto const first = invoke({"mseq", "--instance", path("a.vest"), "--upto", "6"});
    auto const second = invoke({"mseq", "--instance", path("a.vest"), "--upto", "6"});
    EXPECT_EQ(first.out, second.out);
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
    EXPECT_EQ(invoke({"cliques", "--k", "2"}).code, 1);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, BinaryExitCodes)
{
    auto const graph = write("k3.txt", k3_edgelist);
    std::string const exe = VEST_CLI_PATH;
    auto status = [](std::string const& cmd) {
        int const raw = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status(exe + " verify --graph " + graph + " --k 3 --method naive"), 0);
    EXPECT_EQ(status(exe + " reduce --graph " + graph + " --k 0 --out " + path("x.vest")), 1);
    EXPECT_EQ(status(exe + " eval --instance " + path("none.vest") + " --k 2"), 2);
}
