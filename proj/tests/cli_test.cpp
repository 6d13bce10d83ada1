#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ABELAUT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, AutAndRatio) {
  EXPECT_EQ(run("aut Z2xZ3xZ9").out, "108\n");
  EXPECT_EQ(run("ratio Z2xZ5xZ25").out, "8\n");
  EXPECT_EQ(run("ratio Z2xZ2").out, "3/2\n");
  EXPECT_EQ(run("ratio Z1").out, "1\n");
}

TEST(Cli, JsonFields) {
  const auto r = run("--format json ratio 'Z2 x Z3 x Z9'");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], "54");
  EXPECT_EQ(j["group"], "Z2 x Z3 x Z9");
  EXPECT_EQ(j["aut_order"], "108");
  EXPECT_EQ(j["ratio_num"], "2");
  EXPECT_EQ(j["ratio_den"], "1");
  EXPECT_EQ(j["class"], "2:Cyclic;3:ZpTimesHigher(2)");
}

TEST(Cli, Classify) {
  const auto r = run("classify Z2xZ3xZ9xZ2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("2: Z2 x Z2  ElementaryRank2  ratio 3/2"), std::string::npos);
  EXPECT_NE(r.out.find("3: Z3 x Z9  ZpTimesHigher(2)  ratio 4"), std::string::npos);
}

TEST(Cli, Valuation) {
  EXPECT_EQ(run("valuation Z2xZ4xZ8 -p 2").out, "n=3 d=4 c=4 total=11\n");
  EXPECT_EQ(run("valuation Z2xZ4 -p 3").exit_code, 1);
  const auto j = nlohmann::json::parse(run("valuation Z2xZ4xZ8 -p 2 --format json").out);
  EXPECT_EQ(j["total"], 11);
  EXPECT_EQ(j["d"], 4);
  EXPECT_EQ(run("valuation Z2xZ4 -p 4").exit_code, 1);
}

TEST(Cli, EnumerateCsv) {
  const auto r = run("--format csv enumerate --max-order 4");
  EXPECT_EQ(r.out,
            "order,group,aut_order,ratio_num,ratio_den,class\n"
            "1,Z1,1,1,1,Trivial\n"
            "2,Z2,1,1,2,2:Cyclic\n"
            "3,Z3,2,2,3,3:Cyclic\n"
            "4,Z4,2,1,2,2:Cyclic\n"
            "4,Z2 x Z2,6,3,2,2:ElementaryRank2\n");
}

TEST(Cli, Search) {
  EXPECT_EQ(run("search 3 --max-order 100").out, "Unrealizable(OddPrimeTarget)\n");
  EXPECT_EQ(run("search 1/4").out, "Unrealizable(NonSquarefreeDenominator)\n");
  EXPECT_EQ(run("search 1/2").out, "Witness Z2 (order 2)\n");
  EXPECT_EQ(run("search 3/2").out, "Witness Z2 x Z2 (order 4)\n");
  const auto j = nlohmann::json::parse(run("--format json search 2 --max-order 54").out);
  EXPECT_EQ(j["verdict"], "Witness");
  EXPECT_EQ(j["target"], "2");
  EXPECT_EQ(run("search 1000000/1 --max-order 10").out, "NotFoundWithinBounds(10)\n");
}

TEST(Cli, Atlas) {
  EXPECT_EQ(run("atlas --max-order 4").out,
            "1/2\t2\tZ2\n2/3\t3\tZ3\n1\t1\tZ1\n3/2\t4\tZ2 x Z2\n");
}

TEST(Cli, Verify) {
  const auto r = run("verify --max-order 48 --budget 1000000");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("ok:", 0), 0u) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("ratio Q5").exit_code, 1);
  EXPECT_EQ(run("search 0").exit_code, 1);
  EXPECT_EQ(run("search -3").exit_code, 1);
  EXPECT_EQ(run("bogus").exit_code, 1);
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("ratio Z1000000000039").exit_code, 2);
  EXPECT_EQ(run("--format xml ratio Z2").exit_code, 1);
}

}  // namespace
