#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AFFCORE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto e = s.find('\n', pos);
    out.push_back(nlohmann::json::parse(s.substr(pos, e - pos)));
    pos = e + 1;
  }
  return out;
}

}  // namespace

TEST(Cli, EnumerateSmall) {
  const auto r = run("cores enumerate --family C~1 --rank 2 --charge 1 --max-height 2");
  ASSERT_EQ(r.code, 0);
  const auto js = lines(r.out);
  ASSERT_EQ(js.size(), 4u);
  EXPECT_EQ(js[0]["partition"].size(), 0u);
  EXPECT_EQ(js[1]["partition"], nlohmann::json::parse("[1]"));
}

TEST(Cli, EnumerateHeightZero) {
  const auto r = run("cores enumerate --family B~1 --rank 3 --charge 3 --max-height 0");
  ASSERT_EQ(r.code, 0);
  const auto js = lines(r.out);
  ASSERT_EQ(js.size(), 1u);
  EXPECT_EQ(js[0]["base"], 4);
  EXPECT_EQ(js[0]["beads"].size(), 0u);
}

TEST(Cli, EnumerateContainsExample) {
  const auto r = run("cores enumerate --family D~2 --rank 2 --charge 1 --max-height 11");
  ASSERT_EQ(r.code, 0);
  bool found = false;
  for (auto& j : lines(r.out))
    if (j["partition"] == nlohmann::json::parse("[4,2,1,1,1,1,1]")) {
      found = true;
      EXPECT_EQ(j["u"], nlohmann::json::parse("[-2,1]"));
    }
  EXPECT_TRUE(found);
}

TEST(Cli, InspectCore) {
  const auto r = run("cores inspect --family D~2 --rank 2 --charge 1 --partition 4,2,1,1,1,1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["isCore"]);
  for (auto& [k, v] : j["heights"].items())
    if (k != "perNode") EXPECT_EQ(v, 11) << k;
}

TEST(Cli, InspectNonCore) {
  const auto r = run("cores inspect --family C~1 --rank 2 --charge 0 --partition 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["isCore"]);
  EXPECT_FALSE(j["elementaryOps"].empty());
}

TEST(Cli, InspectEmpty) {
  for (auto fam : {"C~1 --rank 2 --charge 0", "B~1 --rank 3 --charge 0", "D~1 --rank 4 --charge 4"}) {
    const auto r = run(std::string("cores inspect --family ") + fam);
    ASSERT_EQ(r.code, 0) << fam;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["isCore"]);
    EXPECT_EQ(j["heights"]["tally"], 0);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("cores enumerate --family Q~1 --rank 2").code, 2);
  EXPECT_EQ(run("cores enumerate --family D~1 --rank 2").code, 2);
  EXPECT_EQ(run("cores inspect --family C~1 --rank 2 --partition 1,x").code, 2);
  EXPECT_EQ(run("cores inspect --family C~1 --rank 2 --partition 1,2").code, 2);
  EXPECT_EQ(run("cores enumerate --family C~1 --rank 2 --format xml").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("verify --only no-such-check").code, 2);
  EXPECT_EQ(run("cores alcoves --family C~1 --rank 3").code, 2);
}

TEST(Cli, WordCommand) {
  const auto r = run("cores word --family D~2 --rank 2 --charge 1 --partition 4,2,1,1,1,1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["translation"], nlohmann::json::parse("[\"-sqrt2\",0]"));
  EXPECT_EQ(j["finiteWord"], "s1");
  EXPECT_EQ(j["atomicLength"], 11);
}

TEST(Cli, Alcoves) {
  const auto r = run("cores alcoves --family C~1 --rank 2 --charge 1 --max-height 6");
  ASSERT_EQ(r.code, 0);
  for (auto& j : lines(r.out)) {
    EXPECT_EQ(j["vertices"].size(), 3u);
    EXPECT_TRUE(j["insideCone"]);
  }
}

TEST(Cli, DiophCommands) {
  auto r = run("dioph solve --family C~1 --rank 2 --charge 1 --N 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 8u);
  r = run("dioph count --family C~1 --rank 2 --charge 1 --max-N 20");
  EXPECT_EQ(r.code, 0);
  r = run("dioph verify-complete --family C~1 --rank 2 --charge 1 --max-N 30");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["failures"].empty());
  r = run("dioph orbits --family C~1 --rank 3 --charge 0 --N 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, VerifySingleCheck) {
  auto r = run("verify --only form-exceptions --max-n 500");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"]);
  ASSERT_EQ(j["checks"].size(), 1u);
}
