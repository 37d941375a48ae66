#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RECOLOUR_CLI
#error "RECOLOUR_CLI must name the command line binary"
#endif

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("recolour_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    std::string cmd = std::string(RECOLOUR_CLI) + " " + args + " >" + path("stdout") + " 2>" + path("stderr");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  void make_instance() {
    ASSERT_EQ(run("gen --family apollonian --params 40 --seed 3 --out " + path("g.col")), 0);
    ASSERT_EQ(run("gen --family colouring --graph " + path("g.col") + " --colours 7 --seed 1 --out " +
                  path("a.clr")),
              0);
    ASSERT_EQ(run("gen --family colouring --graph " + path("g.col") + " --colours 7 --seed 2 --out " +
                  path("b.clr")),
              0);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, PipelineVerifiesAndIsDeterministic) {
  make_instance();
  std::string base = "pipeline --graph " + path("g.col") + " --from " + path("a.clr") + " --to " + path("b.clr");
  ASSERT_EQ(run(base + " --out " + path("s1.txt") + " --stats-json " + path("st.json")), 0);
  ASSERT_EQ(run(base + " --out " + path("s2.txt")), 0);
  EXPECT_EQ(slurp("s1.txt"), slurp("s2.txt"));
  EXPECT_NE(slurp("st.json").find("\"fitted_exponent\""), std::string::npos);

  EXPECT_EQ(run("verify --graph " + path("g.col") + " --from " + path("a.clr") + " --to " + path("b.clr") +
                " --colours 7 --seq " + path("s1.txt")),
            0);
}

TEST_F(Cli, VerifyReportsFailingMove) {
  make_instance();
  ASSERT_EQ(run("pipeline --graph " + path("g.col") + " --from " + path("a.clr") + " --to " + path("b.clr") +
                " --out " + path("s.txt")),
            0);
  // Wrong target: the replay ends elsewhere.
  EXPECT_EQ(run("verify --graph " + path("g.col") + " --from " + path("a.clr") + " --to " + path("a.clr") +
                " --colours 7 --seq " + path("s.txt")),
            2);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("gen --family hypercube --params 3"), 1);
  write("bad.col", "p edge 3 1\ne 1 1\n");
  EXPECT_EQ(run("partition --graph " + path("bad.col")), 1);
  EXPECT_NE(slurp("stderr").find("line 2"), std::string::npos);
  EXPECT_EQ(run("pipeline --graph " + path("missing.col")), 1);
}

TEST_F(Cli, OracleAndConnect) {
  write("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
  write("a.clr", "1 1\n2 2\n3 1\n");
  write("b.clr", "1 2\n2 1\n3 2\n");
  std::string ends = " --graph " + path("p3.col") + " --from " + path("a.clr") + " --to " + path("b.clr");
  ASSERT_EQ(run("oracle" + ends + " --colours 3 --out " + path("o.txt")), 0);
  EXPECT_EQ(slurp("o.txt").substr(0, 8), "s 3 3 4\n");
  ASSERT_EQ(run("connect" + ends + " --colours 3 --out " + path("c.txt")), 0);
  EXPECT_EQ(run("verify" + ends + " --colours 3 --seq " + path("c.txt")), 0);
}

TEST_F(Cli, PartitionCertifiesSupplied) {
  ASSERT_EQ(run("gen --family icosahedron --out " + path("ico.col")), 0);
  ASSERT_EQ(run("partition --graph " + path("ico.col") + " --kind corollary --out " + path("p.txt")), 0);
  EXPECT_EQ(run("partition --graph " + path("ico.col") + " --partition " + path("p.txt")), 0);
  write("bad.txt", "1 1\n1 2\n2 3\n2 4\n2 5\n2 6\n2 7\n2 8\n2 9\n2 10\n2 11\n2 12\n");
  EXPECT_EQ(run("partition --graph " + path("ico.col") + " --partition " + path("bad.txt")), 2);
}
