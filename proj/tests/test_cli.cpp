#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "fdomlab/bad_family.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/graph_io.hpp"
#include "fdomlab/json_io.hpp"

using namespace fdom;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FDOMLAB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fdomlab_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string graph(const std::string& name, const Graph& g) { return write(name, format_graph(g)); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, FdomOfSevenCycle) {
  auto r = run("fdom --in " + graph("c7.graph", cycle_graph(7)));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 4), "7/3\n");
  auto j = parse_json(r.out.substr(4));
  EXPECT_EQ(rational_from_json(j["value"]), Rational(7, 3));
  EXPECT_EQ(j["primal"]["type"], "primal");
}

TEST_F(Cli, Construct52OnExceptionalGraph) {
  auto r = run("construct52 --in " + graph("c7.graph", cycle_graph(7)));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("bad-family:C7"), std::string::npos);
}

TEST_F(Cli, Construct52Distribution) {
  auto in = graph("c5.graph", cycle_graph(5));
  auto r = run("construct52 --in " + in + " --out " + (dir_ / "d.json").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run("verify --in " + in + " --distribution " + (dir_ / "d.json").string()).code, 0);
}

TEST_F(Cli, VerifyDual) {
  auto in = graph("c7.graph", cycle_graph(7));
  std::string w = R"({"weights":[["1","3"],["1","3"],["1","3"],["1","3"],["1","3"],["1","3"],["1","3"]]})";
  EXPECT_EQ(run("verify --in " + in + " --dual " + write("good.json", w)).code, 0);
  std::string bad = R"({"weights":[["1","4"],["1","4"],["1","4"],["1","4"],["1","4"],["1","4"],["1","4"]]})";
  EXPECT_EQ(run("verify --in " + in + " --dual " + write("bad.json", bad)).code, 1);
}

TEST_F(Cli, VerifyCertificatesFromFdom) {
  auto in = graph("p.graph", petersen_graph());
  auto primal = (dir_ / "primal.json").string(), dual = (dir_ / "dual.json").string();
  EXPECT_EQ(run("fdom --in " + in + " --primal-out " + primal + " --dual-out " + dual).code, 0);
  EXPECT_EQ(run("verify --in " + in + " --primal " + primal).code, 0);
  EXPECT_EQ(run("verify --in " + in + " --dual " + dual).code, 0);
  EXPECT_EQ(run("verify --in " + in + " --primal " + primal + " --dual " + dual).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("fdom --in " + (dir_ / "missing.graph").string()).code, 2);
  EXPECT_EQ(run("verify --in " + graph("c5.graph", cycle_graph(5)) + " --dual " + write("x.json", "{oops")).code,
            2);
  EXPECT_EQ(run("gen cycle").code, 2);
  EXPECT_EQ(run("--caps nonsense=3 gen cycle 5").code, 2);
}

TEST_F(Cli, CapExceeded) {
  auto in = graph("c30.graph", cycle_graph(30));
  EXPECT_EQ(run("--caps domatic=10 domatic --in " + in).code, 3);
  EXPECT_EQ(run("intersecting-family --a 20 --b 10").code, 3);
}

TEST_F(Cli, GenAndGraph6) {
  auto r = run("gen petersen --graph6");
  EXPECT_EQ(r.code, 0);
  Graph g = parse_graph6(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  auto g6 = write("k4.g6", to_graph6(complete_graph(4)) + "\n");
  EXPECT_EQ(run("gamma --in " + g6).out, "1\n0\n");
}

TEST_F(Cli, Subcommands) {
  auto c5 = graph("c5.graph", cycle_graph(5));
  auto c6 = graph("c6.graph", cycle_graph(6));
  EXPECT_EQ(run("domatic --in " + c6).out.substr(0, 2), "3\n");
  EXPECT_EQ(run("chi --in " + c5).out, "3\n");
  EXPECT_EQ(run("chif --in " + c5).out.substr(0, 4), "5/2\n");
  auto full = run("fullness --direct --in " + c6);
  EXPECT_EQ(full.code, 0);
  EXPECT_NE(full.out.find("dom-full yes"), std::string::npos);
  EXPECT_EQ(run("reduce-s --check --in " + c5).code, 0);
  EXPECT_EQ(run("reduce-s --in " + c5).out.substr(0, 7), "p 10 20");
  EXPECT_EQ(run("sample-lnbound --trials 20000 --in " + graph("c9.graph", cycle_graph(9))).code, 0);
  EXPECT_EQ(run("intersecting-family --a 1 --b 1").code, 0);
  EXPECT_EQ(run("planar-construct --in " + graph("t.graph", theta_graph(8, 8, 8))).code, 0);
  EXPECT_EQ(run("planar-construct --in " + graph("c15.graph", cycle_graph(15))).code, 2);
}

TEST_F(Cli, FamilyCertificates) {
  for (const std::string args : {"kmn 4 3", "kmn 3 4", "hnd 2 1", "girth6 2", "coxeter", "kneser 7 3"}) {
    auto r = run("family-cert " + args);
    EXPECT_EQ(r.code, 0) << args << "\n" << r.out;
  }
  auto in = graph("t.graph", theta_graph(2, 3, 4));
  EXPECT_EQ(run("family-cert hammock --in " + in).code, 0);
  EXPECT_EQ(run("family-cert neighbourhood --vertex 1 --in " + in).code, 0);
  EXPECT_EQ(run("family-cert uniform --in " + in).code, 0);
}

TEST_F(Cli, CorpusRun) {
  auto empty = dir_ / "empty";
  fs::create_directories(empty);
  auto r = run("--format json corpus-run " + empty.string() + " --check fdom");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["graphs"], 0);

  auto bad = dir_ / "bad";
  fs::create_directories(bad);
  for (int i = 1; i <= kBadFamilySize; ++i)
    std::ofstream(bad / (bad_family_name(i) + ".graph")) << format_graph(bad_family_graph(i));
  r = run("--format json corpus-run " + bad.string() + " --check bad-family --jobs 3");
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = parse_json(r.out);
  EXPECT_EQ(j["passed"], kBadFamilySize);
  ASSERT_EQ(j["files"].size(), static_cast<std::size_t>(kBadFamilySize));
  for (std::size_t i = 1; i < j["files"].size(); ++i)
    EXPECT_LT(j["files"][i - 1]["file"].get<std::string>(), j["files"][i]["file"].get<std::string>());

  auto good = dir_ / "good";
  fs::create_directories(good);
  std::ofstream(good / "some.g6") << to_graph6(cycle_graph(5)) << "\n"
                                  << to_graph6(petersen_graph()) << "\n"
                                  << to_graph6(cycle_graph(7)) << "\n";
  r = run("corpus-run " + good.string() + " --check construct52");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("total 2/3"), std::string::npos);
}
