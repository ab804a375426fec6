#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "affcore/weyl.hpp"

namespace affcore {

// Which parametrization test applies to a (type, charge).
enum class ParamCase { OddCount, Integral, HalfIntegral };

struct EquationSpec {
  AffineKind kind;
  int j = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> c;
  ParamCase pcase = ParamCase::Integral;
  bool halfDomain() const { return pcase == ParamCase::HalfIntegral; }
  std::optional<int> oddCount() const {
    if (pcase == ParamCase::OddCount) return j;
    return std::nullopt;
  }
  std::string str() const {
    std::string s;
    for (int i = 1; i <= kind.l; ++i) s += (i > 1 ? " + x" : "x") + std::to_string(i) + "^2";
    return s + " = " + std::to_string(a) + "N + " + std::to_string(b);
  }
};

namespace detail {

// a N + b = sum (k u_i - c_i)^2, written out per family.
struct Identity {
  std::int64_t a, k, b;
};

inline Identity squareIdentity(Family f, std::int64_t l, std::int64_t j) {
  switch (f) {
    case Family::A2lm1_2: {
      const std::int64_t base = l * (2 * l + 1) * (2 * l - 1) / 3;
      if (j <= 1) return {8 * (2 * l - 1), 2 * (2 * l - 1), base};
      return {4 * (2 * l - 1), 2 * l - 1, base - j * (2 * l - 1) * (2 * l - 2 * j + 1)};
    }
    case Family::A2l_2: {
      const std::int64_t base = l * (2 * l + 1) * (2 * l - 1) / 3;
      if (j == 0) return {8 * (2 * l + 1), 2 * (2 * l + 1), base};
      return {4 * (2 * l + 1), 2 * l + 1, base - j * (2 * l + 1) * (2 * l - 2 * j - 1)};
    }
    case Family::B1: {
      const std::int64_t base = l * (l + 1) * (2 * l + 1) / 6;
      if (j <= 1) return {4 * l, 2 * l, base};
      if (j == l) return {4 * l, 2 * l, base - l * l};
      return {2 * l, l, base - j * l * (l - j + 1)};
    }
    case Family::C1:
      return {8 * l, 2 * l, l * (2 * l + 1) * (2 * l - 1) / 3 - 4 * l * j * (l - j)};
    case Family::D1: {
      const std::int64_t base = (l - 1) * l * (2 * l - 1) / 6;
      if (j <= 1 || j >= l - 1) return {4 * (l - 1), 2 * (l - 1), base};
      return {2 * (l - 1), l - 1, base - j * (l - 1) * (l - j)};
    }
    case Family::D2: {
      const std::int64_t base = l * (l + 1) * (2 * l + 1) / 6;
      if (j == 0 || j == l) return {4 * (l + 1), 2 * (l + 1), base};
      return {2 * (l + 1), l + 1, base - j * (l + 1) * (l - j)};
    }
  }
  throw DomainError("unknown family");
}

// The closed tables for k, a, b.
inline std::int64_t tableK(Family f, std::int64_t l, std::int64_t j) {
  switch (f) {
    case Family::B1: return (j >= 2 && j <= l - 1) ? l : 2 * l;
    case Family::D1: return (j >= 2 && j <= l - 2) ? l - 1 : 2 * l - 2;
    case Family::D2: return (j >= 1 && j <= l - 1) ? l + 1 : 2 * l + 2;
    case Family::C1: return 2 * l;
    case Family::A2lm1_2: return j >= 2 ? 2 * l - 1 : 4 * l - 2;
    case Family::A2l_2: return j != 0 ? 2 * l + 1 : 4 * l + 2;
  }
  throw DomainError("unknown family");
}

inline std::int64_t tableA(Family f, std::int64_t l, std::int64_t j) {
  switch (f) {
    case Family::B1: return (j >= 2 && j <= l - 1) ? 2 * l : 4 * l;
    case Family::D1: return (j >= 2 && j <= l - 2) ? 2 * (l - 1) : 4 * (l - 1);
    // the table's lower end reads 2 <= j; j = 1 follows the same row
    case Family::D2: return (j >= 1 && j <= l - 1) ? 2 * (l + 1) : 4 * (l + 1);
    case Family::C1: return 8 * l;
    case Family::A2lm1_2: return j >= 2 ? 8 * l - 4 : 16 * l - 8;
    case Family::A2l_2: return j != 0 ? 8 * l + 4 : 16 * l + 8;
  }
  throw DomainError("unknown family");
}

// Multiplied through by 6 to stay integral.
inline std::int64_t tableB(Family f, std::int64_t l, std::int64_t j) {
  std::int64_t six = 0;
  switch (f) {
    case Family::A2l_2: six = (2 * l + 1) * (2 * l * (2 * l - 1) - 6 * j * (2 * l - 2 * j - 1)); break;
    case Family::A2lm1_2:
      six = j == 1 ? 2 * l * (2 * l + 1) * (2 * l - 1)
                   : (2 * l - 1) * (2 * l * (2 * l + 1) - 6 * j * (2 * l - 2 * j + 1));
      break;
    case Family::C1: six = 2 * l * (2 * l + 1) * (2 * l - 1) - 24 * l * j * (l - j); break;
    case Family::B1:
      six = j == 1 ? l * (l + 1) * (2 * l + 1) : l * (l + 1) * (2 * l + 1) - 6 * j * l * (l - j + 1);
      break;
    case Family::D1:
      six = (j == 1 || j == l - 1) ? (l - 1) * l * (2 * l - 1)
                                   : (l - 1) * (l * (2 * l - 1) - 6 * j * (l - j));
      break;
    case Family::D2: six = (l + 1) * (l * (2 * l + 1) - 6 * j * (l - j)); break;
  }
  if (six % 6 != 0) throw Inconsistency("b table is not integral");
  return six / 6;
}

inline std::vector<std::int64_t> cVector(Family f, std::int64_t l) {
  std::vector<std::int64_t> c;
  for (std::int64_t i = 1; i <= l; ++i) {
    switch (f) {
      case Family::A2lm1_2:
      case Family::A2l_2:
      case Family::C1: c.push_back(2 * (l - i) + 1); break;
      case Family::B1:
      case Family::D2: c.push_back(l - i + 1); break;
      case Family::D1: c.push_back(l - i); break;
    }
  }
  return c;
}

inline ParamCase paramCase(const AffineContext& ctx, int j) {
  const Family f = ctx.family();
  const int l = ctx.l();
  if (f == Family::C1 || ctx.comarkRatio(j) == 2) return ParamCase::OddCount;
  if (f == Family::D1 && j >= l - 1) return ParamCase::HalfIntegral;
  if ((f == Family::B1 || f == Family::D2) && j == l) return ParamCase::HalfIntegral;
  return ParamCase::Integral;
}

// Charges sharing one equation and one parametrization test.
inline std::vector<int> siblingCharges(const AffineContext& ctx, int j) {
  const Family f = ctx.family();
  const int l = ctx.l();
  const bool pairAtZero = f == Family::B1 || f == Family::A2lm1_2 || f == Family::D1;
  if (pairAtZero && j <= 1 && paramCase(ctx, j) == ParamCase::Integral) return {0, 1};
  if (f == Family::D1 && j >= l - 1) return {l - 1, l};
  return {j};
}

}  // namespace detail

inline EquationSpec equationFor(AffineKind kind, int j) {
  const auto ctx = contextFor(kind);
  const std::int64_t l = ctx->l();
  if (j < 0 || j > l) throw DomainError("charge out of range 0..l");
  const auto id = detail::squareIdentity(kind.family, l, j);
  EquationSpec s{kind, j, detail::tableA(kind.family, l, j), detail::tableB(kind.family, l, j),
                 detail::tableK(kind.family, l, j), detail::cVector(kind.family, l),
                 detail::paramCase(*ctx, j)};
  if (id.a != s.a || id.k != s.k || id.b != s.b)
    throw Inconsistency("coefficient tables disagree for " + kind.str() + " j=" + std::to_string(j) +
                        ": identity (" + std::to_string(id.a) + "," + std::to_string(id.k) + "," +
                        std::to_string(id.b) + ") vs tables (" + std::to_string(s.a) + "," +
                        std::to_string(s.k) + "," + std::to_string(s.b) + ")");
  return s;
}

inline bool inDomain(const EquationSpec& spec, const UglovVector& u) {
  for (auto& x : u) {
    const Rational y = spec.halfDomain() ? x + rat(1, 2) : x;
    if (!isInteger(y)) return false;
  }
  return true;
}

inline std::vector<std::int64_t> applyF(const EquationSpec& spec, const UglovVector& u) {
  if (u.size() != spec.c.size()) throw DimensionError("Uglov vector length");
  if (!inDomain(spec, u)) throw DomainError("u is outside the domain of " + spec.kind.str() + " j=" + std::to_string(spec.j));
  std::vector<std::int64_t> t;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto v = toInt64(Rational(spec.k) * u[i] - Rational(spec.c[i]));
    if (!v) throw DomainError("F(u) is not integral");
    t.push_back(*v);
  }
  return t;
}

inline std::int64_t sumSquares(const std::vector<std::int64_t>& t) {
  std::int64_t s = 0;
  for (auto x : t) s = checkedAdd(s, checkedMul(x, x));
  return s;
}

// N with |t|^2 = aN + b, if any.
inline std::optional<std::int64_t> heightOfSolution(const EquationSpec& spec, const std::vector<std::int64_t>& t) {
  const std::int64_t r = sumSquares(t) - spec.b;
  if (r < 0 || r % spec.a != 0) return std::nullopt;
  return r / spec.a;
}

inline std::int64_t heightFromUglov(const EquationSpec& spec, const UglovVector& u) {
  const auto t = applyF(spec, u);
  auto n = heightOfSolution(spec, t);
  if (!n) throw Inconsistency("|F(u)|^2 - b is not a non-negative multiple of a");
  return *n;
}

struct Solution {
  std::vector<std::int64_t> t;
  std::int64_t N = 0;
  friend auto operator<=>(const Solution&, const Solution&) = default;
};

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// All integer vectors of length len with sum of squares n, lexicographic.
inline std::vector<std::vector<std::int64_t>> representations(std::int64_t n, int len) {
  std::vector<std::vector<std::int64_t>> out;
  if (n < 0) return out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t rest, int left) -> void {
    if (left == 0) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    const std::int64_t m = isqrt(rest);
    for (std::int64_t x = -m; x <= m; ++x) {
      cur.push_back(x);
      self(self, rest - x * x, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, len);
  return out;
}

inline std::vector<Solution> solve(const EquationSpec& spec, std::int64_t N) {
  std::vector<Solution> out;
  const std::int64_t n = checkedAdd(checkedMul(spec.a, N), spec.b);
  for (auto& t : representations(n, spec.kind.l)) out.push_back({t, N});
  return out;
}

struct SolutionOrbit {
  Solution canonical;  // non-negative, sorted by |t_i| descending
  std::vector<std::vector<std::int64_t>> members;
  std::int64_t parametrizedMembers = 0;
};

inline std::vector<std::int64_t> orbitCanonical(std::vector<std::int64_t> t) {
  for (auto& x : t) x = std::abs(x);
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

// Signed-permutation closure of t.
inline std::vector<std::vector<std::int64_t>> signedPermClosure(const std::vector<std::int64_t>& t) {
  std::set<std::vector<std::int64_t>> seen{t};
  std::vector<std::vector<std::int64_t>> stack{t};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto w = v;
      w[i] = -w[i];
      if (seen.insert(w).second) stack.push_back(w);
      if (i + 1 < v.size()) {
        w = v;
        std::swap(w[i], w[i + 1]);
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<SolutionOrbit> orbitsOf(const std::vector<Solution>& sols) {
  std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, SolutionOrbit> byKey;
  std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> present;
  for (auto& s : sols) present.insert({s.N, s.t});
  for (auto& s : sols) {
    auto key = std::make_pair(s.N, orbitCanonical(s.t));
    if (byKey.count(key)) continue;
    SolutionOrbit o;
    o.canonical = {key.second, s.N};
    o.members = signedPermClosure(s.t);
    for (auto& m : o.members)
      if (!present.count({s.N, m})) throw Inconsistency("orbit member missing from the solution list");
    byKey.emplace(key, std::move(o));
  }
  std::vector<SolutionOrbit> out;
  for (auto& [k, o] : byKey) out.push_back(std::move(o));
  return out;
}

// Does t pass the divisibility/parity test for this spec?
inline std::optional<UglovVector> parametrizationCandidate(const EquationSpec& spec, const std::vector<std::int64_t>& t) {
  UglovVector u;
  int odd = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational q = Rational(t[i] + spec.c[i]) / spec.k;
    if (spec.halfDomain()) {
      if (!isInteger(q + rat(1, 2))) return std::nullopt;
    } else {
      if (!isInteger(q)) return std::nullopt;
      if (numerator(q) % 2 != 0) ++odd;
    }
    u.push_back(q);
  }
  if (spec.oddCount() && odd != *spec.oddCount()) return std::nullopt;
  return u;
}

// The core at the spec's charge whose F(u) is t.
inline std::optional<Abacus> isParametrized(const EquationSpec& spec, const std::vector<std::int64_t>& t) {
  auto N = heightOfSolution(spec, t);
  if (!N) throw DomainError("t does not solve " + spec.str());
  auto u = parametrizationCandidate(spec, t);
  if (!u) return std::nullopt;
  const auto ctx = contextFor(spec.kind);
  std::optional<Abacus> core;
  bool sibling = false;
  for (int j : detail::siblingCharges(*ctx, spec.j)) {
    auto a = abacusFromUglov(spec.kind, j, *u);
    if (!a) continue;
    if (j == spec.j) core = a;
    else sibling = true;
  }
  if (!core) {
    if (sibling) return std::nullopt;
    throw Inconsistency("criterion passes for t but no core carries u=" + str(*u));
  }
  if (!isCore(*core)) throw Inconsistency("reconstructed abacus is not a core");
  if (betaOf(*core).height() != *N) throw Inconsistency("reconstructed core has the wrong height");
  return core;
}

inline std::vector<std::int64_t> equivClass(const std::vector<std::int64_t>& t, std::int64_t modulus) {
  if (modulus <= 0) throw DomainError("modulus must be positive");
  std::vector<std::int64_t> r;
  for (auto x : t) {
    const std::int64_t m = floorMod(x, modulus);
    r.push_back(std::min(m, modulus - m));
  }
  std::sort(r.begin(), r.end());
  return r;
}

enum class CountMethod { BruteForce, Formula };

inline std::int64_t chi4(std::int64_t d) {
  switch (floorMod(d, 4)) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

inline std::int64_t repCount(std::int64_t n, int k, CountMethod method) {
  if (n < 0) return 0;
  if (method == CountMethod::BruteForce) return static_cast<std::int64_t>(representations(n, k).size());
  if (n == 0) throw ScopeError("closed formulas need n >= 1");
  if (k == 2) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) s += chi4(d);
    return 4 * s;
  }
  if (k == 4) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; d += 2)
      if (n % d == 0) s += d;
    return 8 * (n % 2 == 0 ? 3 : 1) * s;
  }
  throw ScopeError("no closed formula for r_" + std::to_string(k));
}

// Closed-form core counts where one is known.
inline std::optional<std::int64_t> countCoresByFormula(AffineKind kind, int j, std::int64_t N) {
  auto exact = [](std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw Inconsistency("count formula is not integral");
    return num / den;
  };
  const auto f = kind.family;
  const int l = kind.l;
  const bool odd = N % 2 != 0;
  if (l == 2 && (f == Family::C1 || f == Family::D2)) {
    const std::int64_t a = f == Family::C1 ? 16 : 12, b = f == Family::C1 ? 10 : 5;
    if (j == 0 || j == 2) return exact(repCount(a * N + b, 2, CountMethod::Formula), 8);
    const std::int64_t a1 = f == Family::C1 ? 16 : 6;
    return exact(repCount(a1 * N + 2, 2, CountMethod::Formula), 4);
  }
  if (l == 3 && f == Family::D2 && j == 2)
    return exact(repCount(8 * N + 6, 3, CountMethod::BruteForce), odd ? 48 : 24);
  if (l == 3 && f == Family::B1 && j == 2 && odd)
    return exact(repCount(6 * N + 2, 3, CountMethod::BruteForce), 12);
  if (l == 4 && f == Family::B1 && j == 2)
    return exact(repCount(8 * N + 6, 4, CountMethod::Formula), odd ? 192 : 96);
  if (l == 4 && f == Family::D1 && j == 2 && odd)
    return exact(repCount(6 * N + 2, 4, CountMethod::Formula), 24);
  return std::nullopt;
}

struct OrbitReport {
  std::int64_t N = 0;
  std::vector<std::int64_t> canonical;
  std::vector<std::int64_t> eqClass;
  std::int64_t members = 0;
  std::int64_t parametrized = 0;
};

struct CompletenessReport {
  EquationSpec spec;
  std::int64_t maxN = 0;
  std::vector<OrbitReport> orbits;
  std::vector<OrbitReport> failures() const {
    std::vector<OrbitReport> f;
    for (auto& o : orbits)
      if (o.parametrized == 0) f.push_back(o);
    return f;
  }
  std::int64_t parametrizedAt(std::int64_t N) const {
    std::int64_t s = 0;
    for (auto& o : orbits)
      if (o.N == N) s += o.parametrized;
    return s;
  }
};

inline std::vector<OrbitReport> orbitReportsAt(const EquationSpec& spec, std::int64_t N) {
  std::vector<OrbitReport> out;
  for (auto& o : orbitsOf(solve(spec, N))) {
    OrbitReport r{N, o.canonical.t, equivClass(o.canonical.t, 2 * spec.k),
                  static_cast<std::int64_t>(o.members.size()), 0};
    for (auto& m : o.members)
      if (isParametrized(spec, m)) ++r.parametrized;
    out.push_back(std::move(r));
  }
  return out;
}

inline CompletenessReport verifyCompleteness(const EquationSpec& spec, std::int64_t maxN, unsigned workers = 1) {
  CompletenessReport rep{spec, maxN, {}};
  std::vector<std::vector<OrbitReport>> perN(maxN + 1);
  workers = std::max(1u, workers);
  std::atomic<std::int64_t> next{0};
  std::exception_ptr err;
  std::mutex errMu;
  auto run = [&] {
    for (std::int64_t N; (N = next++) <= maxN;) {
      try {
        perN[N] = orbitReportsAt(spec, N);
      } catch (...) {
        std::lock_guard lk(errMu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  for (auto& v : perN)
    for (auto& o : v) rep.orbits.push_back(std::move(o));
  return rep;
}

// The nine equations shown to be completely parametrized, as (type, charge).
inline std::vector<std::pair<AffineKind, int>> completelyParametrizedEquations() {
  return {{{Family::C1, 2}, 0}, {{Family::C1, 2}, 1}, {{Family::C1, 3}, 1},
          {{Family::B1, 3}, 2}, {{Family::B1, 4}, 2}, {{Family::D2, 2}, 0},
          {{Family::D2, 2}, 1}, {{Family::D2, 3}, 1}, {{Family::D1, 4}, 2}};
}

inline std::int64_t c3Form(std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  return 6 * (k1 * k1 + k2 * k2 + k3 * k3) + 3 * k1 + k2 + 5 * k3;
}

inline std::set<std::int64_t> c3FormImage(std::int64_t hmax) {
  std::set<std::int64_t> out;
  const std::int64_t r = isqrt(hmax / 6) + 3;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      for (std::int64_t c = -r; c <= r; ++c) {
        const auto v = c3Form(a, b, c);
        if (v >= 0 && v <= hmax) out.insert(v);
      }
  return out;
}

// Heights of 0-cores of C_3^(1) up to hmax, by enumeration and by the form.
inline std::set<std::int64_t> c3SizeSet(std::int64_t hmax, unsigned workers = 1) {
  std::set<std::int64_t> byCores;
  for (auto& r : enumerateCores({Family::C1, 3}, 0, hmax, workers)) byCores.insert(r.beta.height());
  const auto byForm = c3FormImage(hmax);
  if (byCores != byForm) throw Inconsistency("core heights and the quadratic form image differ");
  return byCores;
}

inline std::vector<std::int64_t> missingUpTo(const std::set<std::int64_t>& s, std::int64_t hmax) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= hmax; ++n)
    if (!s.count(n)) out.push_back(n);
  return out;
}

// Some height-N core at (kind, j), found through a parametrized solution.
inline std::optional<Abacus> coreOfHeight(AffineKind kind, int j, std::int64_t N) {
  const auto spec = equationFor(kind, j);
  for (auto& s : solve(spec, N))
    if (auto a = isParametrized(spec, s.t)) return a;
  return std::nullopt;
}

}  // namespace affcore
