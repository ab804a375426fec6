// One line per acceptance criterion; exit status 0 iff all pass.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iomanip>
#include <iostream>

#include "affcore/suite.hpp"

using namespace affcore;

namespace {

std::string capture(const std::string& args) {
  const std::string cmd = std::string(AFFCORE_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  std::array<char, 1 << 15> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

CheckResult cliDeterminism() {
  return runCheck("cli-determinism", "cores enumerate output identical for 1, 4 and 8 workers", [](CheckResult& r) {
    const std::vector<std::string> targets{
        "--family C~1 --rank 2 --charge 1 --max-height 40",  "--family D~2 --rank 2 --charge 0 --max-height 40",
        "--family B~1 --rank 3 --charge 0 --max-height 20",  "--family A2l-1~2 --rank 3 --charge 3 --max-height 20",
        "--family D~1 --rank 4 --charge 2 --max-height 12",  "--family A2l~2 --rank 3 --charge 1 --max-height 20",
        "--family C~1 --rank 3 --charge 0 --max-height 30 --format csv",
    };
    for (const auto& t : targets) {
      const auto one = capture("cores enumerate " + t + " --workers 1");
      r.expect(!one.empty() && one.find("<exit") == std::string::npos, "run failed: " + t);
      for (unsigned w : {4u, 8u}) {
        ++r.cases;
        r.expect(capture("cores enumerate " + t + " --workers " + std::to_string(w)) == one,
                 "output differs at " + std::to_string(w) + " workers: " + t);
      }
      r.expect(capture("cores enumerate " + t + " --workers 1") == one, "output differs between runs: " + t);
    }
  });
}

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked examples", {"worked-examples"}},
      {2, "three core criteria agree on reachable abaci", {"core-criteria"}},
      {3, "four height computations agree", {"height-agreement"}},
      {4, "realization compatibility and naturality", {"realization-compat"}},
      {5, "complete parametrization of the nine equations", {"complete-parametrization"}},
      {6, "two-square core counts", {"two-square-counts", "orbit-parametrized-counts"}},
      {7, "three- and four-square core counts", {"three-four-square-counts", "all-heights-attained"}},
      {8, "C3 charge-0 height set", {"c3-height-set", "form-exceptions"}},
      {9, "type A comparisons", {"type-a-comparison"}},
      {10, "conjugation and multiplicativity", {"conjugation-multiplicativity"}},
      {11, "determinism across worker counts", {"determinism", "cli-determinism"}},
  };
  SuiteBounds b;
  b.workers = 4;
  bool all = true;
  for (const auto& c : criteria) {
    bool ok = true;
    double secs = 0;
    std::int64_t cases = 0;
    std::vector<std::string> why;
    for (const auto& id : c.checks) {
      CheckResult r;
      if (id == "cli-determinism") {
        r = cliDeterminism();
      } else {
        const auto& es = suiteEntries();
        auto it = std::find_if(es.begin(), es.end(), [&](const SuiteEntry& e) { return e.id == id; });
        r = it->run(b);
      }
      ok = ok && r.passed;
      secs += r.seconds;
      cases += r.cases;
      for (auto& f : r.failures) why.push_back(id + ": " + f);
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << "  " << c.title << "  ("
              << cases << " cases, " << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (auto& w : why) std::cout << "        " << w << "\n";
    std::cout.flush();
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << "\n";
  return all ? 0 : 1;
}
