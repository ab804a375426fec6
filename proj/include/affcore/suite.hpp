#pragma once

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "affcore/io.hpp"

namespace affcore {

struct SuiteBounds {
  int maxDepth = 8;                         // move depth for reachable abaci
  std::optional<std::int64_t> maxHeight;    // overrides per-check core heights
  std::optional<std::int64_t> maxN;         // overrides per-check N bounds
  unsigned workers = 1;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::int64_t cases = 0;
  std::vector<std::string> failures;
  Json stats = Json::object();
  double seconds = 0;

  void fail(const std::string& what) {
    passed = false;
    if (failures.size() < 25) failures.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
  Json toJson() const {
    Json j;
    j["id"] = id;
    j["title"] = title;
    j["passed"] = passed;
    j["cases"] = cases;
    j["seconds"] = seconds;
    j["stats"] = stats;
    j["failures"] = failures;
    return j;
  }
};

inline std::vector<AffineKind> kindsWithRanks(std::initializer_list<int> ranks) {
  std::vector<AffineKind> out;
  for (Family f : kAllFamilies)
    for (int l : ranks)
      if (l >= minimumRank(f)) out.push_back({f, l});
  return out;
}

struct Reached {
  Abacus abacus;
  RootCoords beta;
};

// Abaci within `depth` single f-moves of the weight abacus, with their tallies.
// A second path to the same abacus with a different tally is reported.
inline std::vector<Reached> reachableAbaci(AffineKind kind, int j, int depth, std::vector<std::string>* clashes = nullptr) {
  const int l = kind.l;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Reached> all{{weightAbacus(kind, j), RootCoords{std::vector<std::int64_t>(l + 1, 0)}}};
  index.emplace(all[0].abacus.key(), 0);
  std::vector<std::size_t> frontier{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const Reached cur = all[idx];
      for (int i = 0; i <= l; ++i)
        for (const Move& mv : availableMoves(cur.abacus, i, Direction::F)) {
          Reached r{applyMove(cur.abacus, mv, Direction::F), cur.beta};
          r.beta.k[i] += mv.weight;
          auto key = r.abacus.key();
          auto it = index.find(key);
          if (it != index.end()) {
            if (clashes && !(all[it->second].beta == r.beta)) clashes->push_back(key);
            continue;
          }
          index.emplace(key, all.size());
          next.push_back(all.size());
          all.push_back(std::move(r));
        }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Reached& a, const Reached& b) { return a.abacus < b.abacus; });
  return all;
}

inline std::int64_t heightBound(const SuiteBounds& b, int l, std::int64_t small, std::int64_t large) {
  if (b.maxHeight) return *b.maxHeight;
  return l <= 3 ? small : large;
}

template <class F>
CheckResult runCheck(std::string id, std::string title, F body) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---- worked examples ---------------------------------------------------

inline const char* kExampleUglovDisplay =
    "      0 1 2 3 \n"
    "   -2   ● ●   \n"
    "   -1   ○ ●   \n"
    "    0   ● ●   \n"
    "     ---------\n"
    "    1   ○ ● ○ \n"
    "    2 ○ ○ ○ ○ \n"
    "    3 ● ○ ○ ○ \n"
    "    4 ○ ○ ○ ○ \n";

inline CheckResult checkWorkedExamples(const SuiteBounds&) {
  return runCheck("worked-examples", "worked examples reproduce exactly", [](CheckResult& r) {
    const AffineKind c2{Family::C1, 2}, d2{Family::D2, 2};
    const auto& dctx = *contextFor(d2);

    const auto ex = fromPartition(c2, Partition{7, 5, 4, 1, 1}, 0);
    r.expect(renderBeads(ex, -9, 11) == "●●●●○●●○○|○●○●○○●○○○○○", "bead display of ((7,5,4,1,1),0)");
    std::vector<std::int64_t> beads;
    for (std::int64_t x = -9; x <= 12; ++x)
      if (ex.hasBead(x)) beads.push_back(x);
    r.expect(beads == std::vector<std::int64_t>{-9, -8, -7, -6, -4, -3, 1, 3, 6}, "bead positions of ((7,5,4,1,1),0)");

    std::vector<int> labels;
    for (std::int64_t x = -7; x <= 6; ++x) labels.push_back(lIndex(dctx, x).label);
    r.expect(labels == std::vector<int>{0, 1, 2, 3, -2, -1, 0, 1, 2, 3, -2, -1, 0, 1}, "l-index label row for D~2 l=2");
    const auto ex2 = fromPartition(d2, Partition{5, 2, 1, 1, 1, 1, 1}, 1);
    r.expect(renderBeads(ex2, -7, 6) == "●○●●●●●|○●○○○●○", "bead row of ((5,2,1,1,1,1,1),1)");

    const auto disp = uglovMap(ex2);
    r.expect(renderUglov(disp) == kExampleUglovDisplay, "Uglov display of ((5,2,1,1,1,1,1),1)");
    r.expect(runnerCharges(disp) == std::vector<std::int64_t>{-1, 1}, "runner charges of ((5,2,1,1,1,1,1),1)");

    const auto core = fromPartition(d2, Partition{4, 2, 1, 1, 1, 1, 1}, 1);
    r.expect(uglovVector(core) == UglovVector{-2, 1}, "u of ((4,2,1,1,1,1,1),1) is (-2,1)");
    const auto beta = betaOf(core);
    r.expect(beta.k == std::vector<std::int64_t>{2, 5, 4}, "node heights (2,5,4)");
    r.expect(beta.height() == 11, "height 11");
    const auto w = grassmannianWord(core);
    const auto R = realizationFor(d2);
    const auto sd = semidirect(w, *R);
    r.expect(sd.q == QVector{-Quad2::sqrt2(), Quad2(0)}, "translation (-sqrt2, 0), got " + str(sd.q));
    r.expect(sd.finiteWord == WeylWord{1}, "finite part s1, got " + wordString(sd.finiteWord));
    r.stats["word"] = wordString(w);
  });
}

// ---- three-way core test on reachable abaci ----------------------------

inline CheckResult checkCoreCriteria(const SuiteBounds& b) {
  return runCheck("core-criteria", "defect zero, no elementary operation and orbit membership agree",
                  [&](CheckResult& r) {
                    std::mt19937_64 rng(b.seed);
                    for (auto kind : kindsWithRanks({2, 3, 4})) {
                      std::int64_t n = 0, cores = 0;
                      for (int j = 0; j <= kind.l; ++j) {
                        std::vector<std::string> clashes;
                        auto reached = reachableAbaci(kind, j, b.maxDepth, &clashes);
                        for (auto& c : clashes) r.fail("tally depends on path at " + c);
                        for (auto& x : reached) {
                          ++n;
                          const auto cert = coreCertificate(x.abacus, x.beta);
                          r.expect(cert.consistent(), "criteria disagree at " + x.abacus.key());
                          r.expect(elementaryOps(x.abacus) == elementaryOpsViaDisplay(x.abacus),
                                   "native and display operations differ at " + x.abacus.key());
                          if (cert.noElementaryOps) {
                            ++cores;
                            const auto rw = randomDescentWord(x.abacus, rng);
                            r.expect(applyWord(weightAbacus(kind, j), rw).tally == x.beta,
                                     "random descent word tally differs at " + x.abacus.key());
                          }
                        }
                      }
                      r.stats[kind.str()] = {{"abaci", n}, {"cores", cores}};
                    }
                  });
}

// ---- heights four ways ---------------------------------------------------

inline CheckResult checkHeightAgreement(const SuiteBounds& b) {
  return runCheck("height-agreement", "tally, atomic length, realization formula and equation inversion agree",
                  [&](CheckResult& r) {
                    for (auto kind : kindsWithRanks({2, 3, 4})) {
                      const auto& ctx = *contextFor(kind);
                      const std::int64_t H = heightBound(b, kind.l, 30, 15);
                      std::int64_t n = 0;
                      for (int j = 0; j <= kind.l; ++j) {
                        const auto spec = equationFor(kind, j);
                        for (auto& c : enumerateCores(kind, j, H, b.workers)) {
                          ++n;
                          const auto h = c.beta.height();
                          const auto key = c.abacus.key();
                          r.expect(atomicLength(ctx, j, c.word) == h, "atomic length differs at " + key);
                          r.expect(heightViaRealization(c.abacus) == h, "realization height differs at " + key);
                          r.expect(nodeHeightsViaRealization(c.abacus) == c.beta, "per-node heights differ at " + key);
                          r.expect(heightFromUglov(spec, uglovVector(c.abacus)) == h, "equation height differs at " + key);
                        }
                      }
                      r.stats[kind.str()] = n;
                    }
                  });
}

// ---- semidirect compatibility and naturality ---------------------------

inline CheckResult checkRealizationCompat(const SuiteBounds& b) {
  return runCheck("realization-compat", "weighted u equals r q + wbar(omega_j); sigma commutes with u",
                  [&](CheckResult& r) {
                    for (auto kind : kindsWithRanks({2, 3, 4})) {
                      const auto& ctx = *contextFor(kind);
                      const std::int64_t H = heightBound(b, kind.l, 30, 15);
                      std::int64_t n = 0;
                      for (int j = 0; j <= kind.l; ++j)
                        for (auto& c : enumerateCores(kind, j, H, b.workers)) {
                          ++n;
                          const auto rep = semidirectCompat(c.abacus);
                          r.expect(rep.holds(), "compatibility fails at " + c.abacus.key() + ": " + str(rep.lhs) +
                                                    " vs " + str(rep.rhs));
                          const auto u = uglovVector(c.abacus);
                          for (int i = 0; i <= kind.l; ++i)
                            r.expect(uglovVector(applySigma(c.abacus, i).abacus) == sigmaOnUglov(u, i, ctx, j),
                                     "naturality fails at " + c.abacus.key() + " node " + std::to_string(i));
                        }
                      r.stats[kind.str()] = n;
                    }
                  });
}

// ---- complete parametrization -----------------------------------------

inline std::int64_t squaresBound(const SuiteBounds& b, int l) {
  if (b.maxN) return *b.maxN;
  return l == 2 ? 50 : l == 3 ? 30 : 20;
}

inline CheckResult checkCompleteParametrization(const SuiteBounds& b) {
  return runCheck("complete-parametrization", "every solution orbit of the nine equations meets a core",
                  [&](CheckResult& r) {
                    for (auto [kind, j] : completelyParametrizedEquations()) {
                      const auto spec = equationFor(kind, j);
                      const auto rep = verifyCompleteness(spec, squaresBound(b, kind.l), b.workers);
                      for (auto& o : rep.orbits) {
                        r.expect(o.parametrized > 0, spec.str() + " N=" + std::to_string(o.N) + " orbit of (" +
                                                         joinInts(o.canonical, ",") + ") has no core");
                      }
                      r.stats[spec.str()] = {{"kind", kind.str()}, {"charge", j}, {"orbits", rep.orbits.size()}};
                    }
                  });
}

// ---- counting -----------------------------------------------------------

inline std::map<std::int64_t, std::int64_t> coreCountsByHeight(AffineKind kind, int j, std::int64_t H, unsigned workers) {
  std::map<std::int64_t, std::int64_t> m;
  for (std::int64_t N = 0; N <= H; ++N) m[N] = 0;
  for (auto& c : enumerateCores(kind, j, H, workers)) ++m[c.beta.height()];
  return m;
}

inline CheckResult checkTwoSquareCounts(const SuiteBounds& b) {
  return runCheck("two-square-counts", "rank-2 core counts match the divisor-sum formula and enumeration",
                  [&](CheckResult& r) {
                    const std::int64_t H = b.maxN.value_or(100);
                    for (Family f : {Family::C1, Family::D2}) {
                      const AffineKind kind{f, 2};
                      for (int j = 0; j <= 2; ++j) {
                        const auto counts = coreCountsByHeight(kind, j, H, b.workers);
                        const auto spec = equationFor(kind, j);
                        for (std::int64_t N = 0; N <= H; ++N) {
                          const auto formula = countCoresByFormula(kind, j, N);
                          const auto n = spec.a * N + spec.b;
                          r.expect(repCount(n, 2, CountMethod::Formula) == repCount(n, 2, CountMethod::BruteForce),
                                   "r2(" + std::to_string(n) + ") formula and brute force differ");
                          r.expect(formula && *formula == counts.at(N),
                                   kind.str() + " j=" + std::to_string(j) + " N=" + std::to_string(N) + ": enumerated " +
                                       std::to_string(counts.at(N)) + ", formula " +
                                       (formula ? std::to_string(*formula) : "none"));
                        }
                      }
                    }
                  });
}

inline CheckResult checkThreeFourSquareCounts(const SuiteBounds& b) {
  return runCheck("three-four-square-counts", "rank-3 and rank-4 core counts match the representation numbers",
                  [&](CheckResult& r) {
                    struct Row {
                      AffineKind kind;
                      int j;
                      std::int64_t maxN;
                      bool oddOnly;
                    };
                    const std::vector<Row> rows{{{Family::D2, 3}, 2, 40, false},
                                                {{Family::B1, 3}, 2, 40, true},
                                                {{Family::B1, 4}, 2, 25, false},
                                                {{Family::D1, 4}, 2, 25, true}};
                    for (auto& row : rows) {
                      const std::int64_t H = b.maxN.value_or(row.maxN);
                      const auto counts = coreCountsByHeight(row.kind, row.j, H, b.workers);
                      const auto spec = equationFor(row.kind, row.j);
                      std::int64_t checked = 0;
                      for (std::int64_t N = 0; N <= H; ++N) {
                        if (row.oddOnly && N % 2 == 0) continue;
                        ++checked;
                        const auto formula = countCoresByFormula(row.kind, row.j, N);
                        r.expect(formula && *formula == counts.at(N),
                                 row.kind.str() + " j=" + std::to_string(row.j) + " N=" + std::to_string(N) +
                                     ": enumerated " + std::to_string(counts.at(N)) + ", formula " +
                                     (formula ? std::to_string(*formula) : "none"));
                        if (row.kind.l == 4) {
                          const auto n = spec.a * N + spec.b;
                          r.expect(repCount(n, 4, CountMethod::Formula) == repCount(n, 4, CountMethod::BruteForce),
                                   "r4(" + std::to_string(n) + ") formula and brute force differ");
                        }
                      }
                      r.stats[row.kind.str() + " j=" + std::to_string(row.j)] = checked;
                    }
                  });
}

// ---- C_3 charge-0 heights ------------------------------------------------

inline CheckResult checkC3HeightSet(const SuiteBounds& b) {
  return runCheck("c3-height-set", "C~1 l=3 charge-0 heights equal the quadratic form image", [&](CheckResult& r) {
    const std::int64_t H = b.maxHeight.value_or(200);
    const auto s = c3SizeSet(H, b.workers);
    const auto miss = missingUpTo(s, H);
    std::vector<std::int64_t> expected;
    for (auto x : {2, 12, 13, 73})
      if (x <= H) expected.push_back(x);
    r.expect(miss == expected, "missing heights are {" + joinInts(miss, ",") + "}");
    r.stats["missing"] = miss;
  });
}

// ---- type A comparisons ---------------------------------------------------

inline CheckResult checkTypeAComparison(const SuiteBounds& b) {
  return runCheck("type-a-comparison", "core tests agree with the type A characterisations", [&](CheckResult& r) {
    for (auto kind : kindsWithRanks({2, 3})) {
      std::int64_t n = 0;
      for (int j : {0, kind.l}) {
        for (auto& x : reachableAbaci(kind, j, b.maxDepth)) {
          TypeAComparison cmp;
          try {
            cmp = compareTypeA(x.abacus);
          } catch (const ScopeError&) {
            continue;
          }
          ++n;
          r.expect(cmp.agree(), cmp.statement + " disagrees at " + x.abacus.key());
        }
      }
      if (n) r.stats[kind.str()] = n;
    }
    const AffineKind b5{Family::B1, 5};
    const auto a = fromPartition(b5, Partition{5, 1, 1}, 2);
    r.expect(isCore(a), "((5,1,1),2) is a core of B~1 l=5");
    r.expect(!isCore(conjugate(a)), "((3,1,1,1,1),3) is not a core of B~1 l=5");
    const auto c = fromPartition(b5, Partition{5, 1}, 2);
    r.expect(isCore(c) && isCore(conjugate(c)), "((5,1),2) and its conjugate are cores of B~1 l=5");
  });
}

// ---- conjugation and multiplicativity -------------------------------------

inline bool conjugationCharge(const AffineContext& ctx, int j) {
  const int l = ctx.l();
  switch (ctx.family()) {
    case Family::C1: return true;
    case Family::D2: return j >= 1 && j <= l - 1;
    case Family::D1: return j >= 2 && j <= l - 2;
    default: return false;
  }
}

inline CheckResult checkConjugationMultiplicativity(const SuiteBounds& b) {
  return runCheck("conjugation-multiplicativity", "conjugate cores reverse u; rank-2 counts multiply",
                  [&](CheckResult& r) {
                    for (auto kind : kindsWithRanks({2, 3, 4})) {
                      const auto& ctx = *contextFor(kind);
                      const int l = kind.l;
                      const std::int64_t H = heightBound(b, l, 30, 15);
                      for (int j = 0; j <= l; ++j) {
                        if (!conjugationCharge(ctx, j)) continue;
                        for (auto& c : enumerateCores(kind, j, H, b.workers)) {
                          const auto u = uglovVector(c.abacus);
                          UglovVector v;
                          for (int i = l - 1; i >= 0; --i) v.push_back(1 - u[i]);
                          const auto conj = conjugate(c.abacus);
                          const auto key = c.abacus.key();
                          r.expect(isCore(conj), "conjugate of " + key + " is not a core");
                          r.expect(uglovVector(conj) == v, "conjugate of " + key + " does not reverse u");
                          const auto back = abacusFromUglov(kind, l - j, v);
                          r.expect(back && *back == conj, "reversed u does not come from the conjugate of " + key);
                        }
                      }
                    }
                    struct Mult {
                      Family f;
                      std::int64_t s;  // N1 N2 coefficient, also the gcd modulus
                    };
                    const std::int64_t M = b.maxN.value_or(12);
                    for (auto m : {Mult{Family::C1, 8}, Mult{Family::D2, 3}}) {
                      const AffineKind kind{m.f, 2};
                      const auto counts = coreCountsByHeight(kind, 1, m.s * M * M + 2 * M, b.workers);
                      std::int64_t pairs = 0;
                      for (std::int64_t n1 = 0; n1 <= M; ++n1)
                        for (std::int64_t n2 = n1; n2 <= M; ++n2) {
                          if (std::gcd(m.s * n1 + 1, m.s * n2 + 1) != 1) continue;
                          ++pairs;
                          const auto n = m.s * n1 * n2 + n1 + n2;
                          r.expect(counts.at(n1) * counts.at(n2) == counts.at(n),
                                   kind.str() + " N1=" + std::to_string(n1) + " N2=" + std::to_string(n2));
                        }
                      r.stats[kind.str()] = pairs;
                    }
                  });
}

// ---- determinism ------------------------------------------------------------

inline std::string enumerateJsonl(AffineKind kind, int j, std::int64_t H, unsigned workers) {
  std::string out;
  for (auto& c : enumerateCores(kind, j, H, workers)) out += coreRecordJson(c).dump() + "\n";
  return out;
}

inline CheckResult checkDeterminism(const SuiteBounds& b) {
  return runCheck("determinism", "enumeration output is identical across worker counts", [&](CheckResult& r) {
    for (auto kind : kindsWithRanks({2, 3})) {
      const std::int64_t H = b.maxHeight.value_or(12);
      for (int j = 0; j <= kind.l; ++j) {
        const auto one = enumerateJsonl(kind, j, H, 1);
        for (unsigned w : {4u, 8u})
          r.expect(enumerateJsonl(kind, j, H, w) == one,
                   kind.str() + " j=" + std::to_string(j) + " differs with " + std::to_string(w) + " workers");
      }
    }
  });
}

// ---- further properties -------------------------------------------------------

inline CheckResult checkAllHeightsAttained(const SuiteBounds& b) {
  return runCheck("all-heights-attained", "every height up to the bound is attained", [&](CheckResult& r) {
    const std::int64_t H = b.maxN.value_or(40);
    const std::vector<std::pair<AffineKind, int>> rows{
        {{Family::C1, 3}, 1}, {{Family::D2, 3}, 1}, {{Family::B1, 4}, 2}, {{Family::D1, 4}, 2}};
    for (auto [kind, j] : rows)
      for (std::int64_t N = 0; N <= H; ++N)
        r.expect(coreOfHeight(kind, j, N).has_value(),
                 kind.str() + " j=" + std::to_string(j) + " has no core of height " + std::to_string(N));
  });
}

inline CheckResult checkOrbitCounts(const SuiteBounds& b) {
  return runCheck("orbit-parametrized-counts", "parametrized members per orbit and per class",
                  [&](CheckResult& r) {
                    const std::int64_t H = b.maxN.value_or(60);
                    for (Family f : {Family::C1, Family::D2})
                      for (int j = 0; j <= 2; ++j) {
                        const auto spec = equationFor({f, 2}, j);
                        for (std::int64_t N = 0; N <= H; ++N)
                          for (auto& o : orbitReportsAt(spec, N)) {
                            const bool eq = o.canonical[0] == o.canonical[1];
                            const std::int64_t want = (j == 1 && !eq) ? 2 : 1;
                            r.expect(o.parametrized == want, spec.str() + " N=" + std::to_string(N) + " orbit (" +
                                                                 joinInts(o.canonical, ",") + ") has " +
                                                                 std::to_string(o.parametrized) + " parametrized");
                          }
                      }
                    // counts by orbit bookkeeping equal core counts; within a class the share
                    // |O^p| / |O| is fixed (equal |O^p| fails once stabilizers differ)
                    std::int64_t unequal = 0;
                    for (auto kind : kindsWithRanks({2, 3, 4}))
                      for (int j = 0; j <= kind.l; ++j) {
                        const std::int64_t bound = b.maxN.value_or(kind.l == 2 ? 60 : kind.l == 3 ? 30 : 20);
                        const auto spec = equationFor(kind, j);
                        const auto counts = coreCountsByHeight(kind, j, bound, b.workers);
                        for (std::int64_t N = 0; N <= bound; ++N) {
                          std::int64_t viaOrbits = 0;
                          std::map<std::vector<std::int64_t>, std::set<Rational>> share;
                          std::map<std::vector<std::int64_t>, std::set<std::int64_t>> raw;
                          for (auto& o : orbitReportsAt(spec, N)) {
                            viaOrbits += o.parametrized;
                            share[o.eqClass].insert(Rational(o.parametrized) / o.members);
                            raw[o.eqClass].insert(o.parametrized);
                          }
                          const auto where = kind.str() + " j=" + std::to_string(j) + " N=" + std::to_string(N);
                          r.expect(viaOrbits == counts.at(N), where + ": cores " + std::to_string(counts.at(N)) +
                                                                  ", parametrized " + std::to_string(viaOrbits));
                          for (auto& [cls, v] : share)
                            r.expect(v.size() == 1, where + " class (" + joinInts(cls, ",") + ") mixes shares");
                          for (auto& [cls, v] : raw) unequal += v.size() > 1;
                        }
                      }
                    r.stats["classes with unequal member counts"] = unequal;
                  });
}

inline CheckResult checkFormExceptions(const SuiteBounds& b) {
  return runCheck("form-exceptions", "values of 6(k1^2+k2^2+k3^2)+3k1+k2+5k3 up to the bound", [&](CheckResult& r) {
    const std::int64_t H = b.maxN.value_or(500);
    const auto miss = missingUpTo(c3FormImage(H), H);
    std::vector<std::int64_t> expected;
    for (auto x : {2, 12, 13, 73})
      if (x <= H) expected.push_back(x);
    r.expect(miss == expected, "form misses {" + joinInts(miss, ",") + "}");
    r.stats["missing"] = miss;
  });
}

struct SuiteEntry {
  std::string id;
  std::function<CheckResult(const SuiteBounds&)> run;
};

inline const std::vector<SuiteEntry>& suiteEntries() {
  static const std::vector<SuiteEntry> entries{
      {"worked-examples", checkWorkedExamples},
      {"core-criteria", checkCoreCriteria},
      {"height-agreement", checkHeightAgreement},
      {"realization-compat", checkRealizationCompat},
      {"complete-parametrization", checkCompleteParametrization},
      {"two-square-counts", checkTwoSquareCounts},
      {"three-four-square-counts", checkThreeFourSquareCounts},
      {"c3-height-set", checkC3HeightSet},
      {"type-a-comparison", checkTypeAComparison},
      {"conjugation-multiplicativity", checkConjugationMultiplicativity},
      {"determinism", checkDeterminism},
      {"all-heights-attained", checkAllHeightsAttained},
      {"orbit-parametrized-counts", checkOrbitCounts},
      {"form-exceptions", checkFormExceptions},
  };
  return entries;
}

}  // namespace affcore
