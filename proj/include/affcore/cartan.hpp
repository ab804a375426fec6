#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affcore/exactnum.hpp"

namespace affcore {

enum class Family { A2lm1_2, A2l_2, B1, C1, D1, D2 };

inline constexpr Family kAllFamilies[] = {Family::A2lm1_2, Family::A2l_2, Family::B1,
                                          Family::C1,      Family::D1,    Family::D2};

inline std::string_view familyLabel(Family f) {
  switch (f) {
    case Family::A2lm1_2: return "A2l-1~2";
    case Family::A2l_2: return "A2l~2";
    case Family::B1: return "B~1";
    case Family::C1: return "C~1";
    case Family::D1: return "D~1";
    case Family::D2: return "D~2";
  }
  return "?";
}

inline std::optional<Family> parseFamily(std::string_view s) {
  for (Family f : kAllFamilies)
    if (familyLabel(f) == s) return f;
  // a few lenient spellings for the command line
  static const std::map<std::string, Family, std::less<>> aliases = {
      {"A2lm1_2", Family::A2lm1_2}, {"A2l_2", Family::A2l_2}, {"B1", Family::B1},
      {"C1", Family::C1},           {"D1", Family::D1},       {"D2", Family::D2},
      {"B", Family::B1},            {"C", Family::C1}};
  if (auto it = aliases.find(s); it != aliases.end()) return it->second;
  return std::nullopt;
}

inline int minimumRank(Family f) { return f == Family::D1 ? 3 : 2; }

struct AffineKind {
  Family family = Family::C1;
  int l = 2;  // runner rank

  friend bool operator==(const AffineKind&, const AffineKind&) = default;
  friend auto operator<=>(const AffineKind&, const AffineKind&) = default;

  std::string str() const { return std::string(familyLabel(family)) + " l=" + std::to_string(l); }
};

using IntMatrix = std::vector<std::vector<int>>;

struct AffineContext {
  AffineKind kind;
  IntMatrix cartan;              // a_ij = <alpha_j, alpha_i^vee>
  std::vector<int> marks;        // a_i, A * marks = 0
  std::vector<int> comarks;      // a_i^vee, comarks * A = 0
  std::vector<Rational> symmetrizer;
  std::vector<std::vector<Rational>> gram;  // c_ij = d_i a_ij
  int coxeterH = 0;
  std::vector<int> indexAlphabet;  // I_X in iota order
  int period = 0;
  bool hasZeroIndex = false;
  bool hasLPlusOneIndex = false;

  int l() const { return kind.l; }
  int rank() const { return kind.l + 1; }
  Family family() const { return kind.family; }
  // comark ratio a_j^vee / a_0^vee
  Rational comarkRatio(int j) const { return Rational(comarks.at(j)) / comarks.at(0); }
};

namespace detail {

inline std::vector<std::pair<int, int>> edges(Family f, int l) {
  std::vector<std::pair<int, int>> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
  };
  switch (f) {
    case Family::A2lm1_2:
    case Family::B1:
      e = {{0, 2}, {1, 2}};
      chain(2, l);
      break;
    case Family::A2l_2:
    case Family::C1:
    case Family::D2:
      chain(0, l);
      break;
    case Family::D1:
      if (l == 3) {
        e = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
      } else {
        e = {{0, 2}, {1, 2}};
        chain(2, l - 2);
        e.emplace_back(l - 2, l - 1);
        e.emplace_back(l - 2, l);
      }
      break;
  }
  return e;
}

inline std::vector<Rational> symmetrizer(Family f, int l) {
  std::vector<Rational> d(l + 1, Rational(1));
  const Rational half = rat(1, 2);
  switch (f) {
    case Family::A2lm1_2: d[l] = 2; break;
    case Family::A2l_2: d[0] = half; d[l] = 2; break;
    case Family::B1: d[l] = half; break;
    case Family::C1:
      for (int i = 1; i < l; ++i) d[i] = half;
      break;
    case Family::D1: break;
    case Family::D2:
      for (int i = 1; i < l; ++i) d[i] = 2;
      break;
  }
  return d;
}

// Positive integer kernel vector with gcd 1 of a corank-one integer matrix.
inline std::vector<int> positiveKernel(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  // fix x_0 = 1 and solve the remaining rows 1..n-1 over Q
  std::vector<std::vector<Rational>> a(n - 1, std::vector<Rational>(n - 1));
  std::vector<Rational> b(n - 1);
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c < n; ++c) a[r - 1][c - 1] = m[r][c];
    b[r - 1] = -m[r][0];
  }
  std::vector<Rational> x = solveRational(a, b);
  x.insert(x.begin(), Rational(1));
  BigInt lcm = 1;
  for (auto& v : x) {
    const BigInt den = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<int> out;
  BigInt g = 0;
  std::vector<BigInt> ints;
  for (auto& v : x) {
    Rational s = v * Rational(lcm);
    ints.push_back(boost::multiprecision::numerator(s));
    g = boost::multiprecision::gcd(g, ints.back());
  }
  for (auto& v : ints) out.push_back(static_cast<int>(v / g));
  for (int r = 0; r < n; ++r) {
    long long s = 0;
    for (int c = 0; c < n; ++c) s += static_cast<long long>(m[r][c]) * out[c];
    if (s != 0) throw Inconsistency("kernel vector check failed");
  }
  return out;
}

}  // namespace detail

inline AffineContext buildContext(AffineKind kind) {
  const int l = kind.l;
  if (l < minimumRank(kind.family))
    throw InvalidRank("rank " + std::to_string(l) + " below minimum for " +
                      std::string(familyLabel(kind.family)));
  if (l > 64) throw InvalidRank("rank too large");
  AffineContext ctx;
  ctx.kind = kind;
  const int n = l + 1;
  ctx.symmetrizer = detail::symmetrizer(kind.family, l);
  ctx.gram.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) ctx.gram[i][i] = 2 * ctx.symmetrizer[i];
  for (auto [i, j] : detail::edges(kind.family, l)) {
    const Rational c = -std::max(ctx.symmetrizer[i], ctx.symmetrizer[j]);
    ctx.gram[i][j] = c;
    ctx.gram[j][i] = c;
  }
  ctx.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational a = ctx.gram[i][j] / ctx.symmetrizer[i];
      if (!isInteger(a)) throw Inconsistency("non-integral Cartan entry");
      ctx.cartan[i][j] = static_cast<int>(*toInt64(a));
    }
  ctx.marks = detail::positiveKernel(ctx.cartan);
  IntMatrix t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = ctx.cartan[j][i];
  ctx.comarks = detail::positiveKernel(t);
  ctx.coxeterH = std::accumulate(ctx.marks.begin(), ctx.marks.end(), 0);

  const Family f = kind.family;
  ctx.hasZeroIndex = (f == Family::A2l_2 || f == Family::D2);
  ctx.hasLPlusOneIndex = (f == Family::B1 || f == Family::D2);
  ctx.period = 2 * l + (ctx.hasZeroIndex ? 1 : 0) + (ctx.hasLPlusOneIndex ? 1 : 0);
  const int upper = ctx.hasLPlusOneIndex ? l : l - 1;
  for (int r = 0; r < ctx.period; ++r) {
    if (r <= upper) ctx.indexAlphabet.push_back(r + 1);
    else ctx.indexAlphabet.push_back(ctx.hasLPlusOneIndex ? r - 2 * l - 1 : r - 2 * l);
  }
  return ctx;
}

// Shared immutable contexts, one per kind.
inline std::shared_ptr<const AffineContext> contextFor(AffineKind kind) {
  static std::mutex mu;
  static std::map<AffineKind, std::shared_ptr<const AffineContext>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const AffineContext>(buildContext(kind));
  cache.emplace(kind, ctx);
  return ctx;
}

inline int iota(const AffineContext& ctx, int r) {
  if (r < 0 || r >= ctx.period) throw DomainError("iota argument out of range");
  return ctx.indexAlphabet[r];
}

// Inverse of iota on I_X.
inline int iotaInverse(const AffineContext& ctx, int label) {
  const int l = ctx.l();
  int r;
  if (label >= 1) r = label - 1;
  else r = label + 2 * l + (ctx.hasLPlusOneIndex ? 1 : 0);
  if (r < 0 || r >= ctx.period || ctx.indexAlphabet[r] != label)
    throw DomainError("label " + std::to_string(label) + " not in I_X");
  return r;
}

inline std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t floorMod(std::int64_t a, std::int64_t b) { return a - floorDiv(a, b) * b; }

struct LIndex {
  std::int64_t q = 0;
  int label = 0;
  friend bool operator==(const LIndex&, const LIndex&) = default;
};

inline LIndex lIndex(const AffineContext& ctx, std::int64_t x) {
  const std::int64_t qq = floorDiv(x, ctx.period);
  const int r = static_cast<int>(floorMod(x, ctx.period));
  const int label = ctx.indexAlphabet[r];
  return {label == r + 1 ? 2 * qq : 2 * qq + 1, label};
}

inline std::int64_t positionOf(const AffineContext& ctx, LIndex li) {
  const int r = iotaInverse(ctx, li.label);
  const bool even = ctx.indexAlphabet[r] == r + 1;
  if ((floorMod(li.q, 2) == 0) != even) throw DomainError("l-index parity mismatch");
  const std::int64_t qq = even ? li.q / 2 : floorDiv(li.q - 1, 2);
  return qq * ctx.period + r;
}

struct RootCoords {
  std::vector<std::int64_t> k;
  std::int64_t height() const {
    std::int64_t s = 0;
    for (auto v : k) s = checkedAdd(s, v);
    return s;
  }
  bool isNonNegative() const {
    return std::all_of(k.begin(), k.end(), [](auto v) { return v >= 0; });
  }
  friend bool operator==(const RootCoords&, const RootCoords&) = default;
};

struct WeightCoords {
  std::vector<std::int64_t> m;  // coefficients of Lambda_0..Lambda_l
  Rational deltaCoeff{0};
  friend bool operator==(const WeightCoords&, const WeightCoords&) = default;
};

inline WeightCoords fundamentalWeight(const AffineContext& ctx, int j) {
  WeightCoords w;
  w.m.assign(ctx.rank(), 0);
  w.m.at(j) = 1;
  return w;
}

// sigma_i(v) = v - m_i alpha_i, alpha_i = sum_k a_ki Lambda_k + (delta_i0 / a_0) delta.
inline WeightCoords reflectWeight(const AffineContext& ctx, int i, WeightCoords v) {
  const std::int64_t mi = v.m.at(i);
  for (int k = 0; k < ctx.rank(); ++k) v.m[k] = checkedAdd(v.m[k], -checkedMul(mi, ctx.cartan[k][i]));
  if (i == 0) v.deltaCoeff -= Rational(mi) / ctx.marks[0];
  return v;
}

inline Rational defect(const AffineContext& ctx, int j, const RootCoords& beta) {
  if (j < 0 || j > ctx.l()) throw DomainError("charge out of range");
  if (static_cast<int>(beta.k.size()) != ctx.rank()) throw DimensionError("root coordinate length");
  Rational q = 0;
  for (int a = 0; a < ctx.rank(); ++a) {
    if (beta.k[a] == 0) continue;
    for (int b = 0; b < ctx.rank(); ++b)
      if (beta.k[b] != 0) q += Rational(beta.k[a]) * Rational(beta.k[b]) * ctx.gram[a][b];
  }
  return Rational(beta.k[j]) * ctx.symmetrizer[j] - q / 2;
}

// Solves Lambda_j - w = sum k_i alpha_i.
inline RootCoords rootFromWeightDrop(const AffineContext& ctx, int j, const WeightCoords& w) {
  const int n = ctx.rank();
  if (static_cast<int>(w.m.size()) != n) throw DimensionError("weight coordinate length");
  const Rational k0 = -Rational(ctx.marks[0]) * w.deltaCoeff;
  if (!isInteger(k0)) throw LatticeError("delta coefficient not in root lattice");
  const int l = ctx.l();
  std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
  std::vector<Rational> b(l);
  for (int i = 1; i <= l; ++i) {
    for (int k = 1; k <= l; ++k) a[i - 1][k - 1] = ctx.cartan[i][k];
    b[i - 1] = Rational((i == j ? 1 : 0) - w.m[i]) - Rational(ctx.cartan[i][0]) * k0;
  }
  std::vector<Rational> x = solveRational(a, b);
  RootCoords out;
  out.k.push_back(*toInt64(k0));
  for (auto& v : x) {
    auto iv = toInt64(v);
    if (!iv) throw LatticeError("weight drop not in root lattice");
    out.k.push_back(*iv);
  }
  // row 0 must hold as well
  std::int64_t s = 0;
  for (int k = 0; k < n; ++k) s += ctx.cartan[0][k] * out.k[k];
  if (s != (j == 0 ? 1 : 0) - w.m[0]) throw LatticeError("weight drop inconsistent at node 0");
  return out;
}

// Finite part in standard Euclidean coordinates; everything else is solved.
struct FiniteRealization {
  std::vector<QVector> simpleRoots;     // alpha_1..alpha_l (index 0 is alpha_1)
  std::vector<QVector> simpleCoroots;   // 2 alpha / |alpha|^2
  std::vector<QVector> fundWeights;     // omega_1..omega_l
  std::vector<QVector> fundCoweights;   // omega_1^vee..omega_l^vee
  QVector rhoCheck;
  QVector highestRoot;                  // theta = sum_{k>=1} a_k alpha_k
  QVector highestRootCheck;             // 2 theta / |theta|^2
  std::vector<QVector> translationGenerators;
  Quad2 interiorScale;                  // alpha_i = scale (e_i - e_{i+1})
  Quad2 uglovScale;                     // weighted Uglov vector = scale * u

  const QVector& alpha(int i) const { return simpleRoots.at(i - 1); }
  const QVector& omega(int i) const { return fundWeights.at(i - 1); }
  const QVector& omegaCheck(int i) const { return fundCoweights.at(i - 1); }
  // omega_0 = omega_0^vee = 0
  QVector omegaOrZero(int i) const {
    return i == 0 ? zeroVector(simpleRoots.size()) : omega(i);
  }
  QVector omegaCheckOrZero(int i) const {
    return i == 0 ? zeroVector(simpleRoots.size()) : omegaCheck(i);
  }
};

inline FiniteRealization buildRealization(const AffineContext& ctx) {
  const int l = ctx.l();
  const Family f = ctx.family();
  const std::size_t n = static_cast<std::size_t>(l);
  const Quad2 s2 = Quad2::sqrt2();
  const Quad2 halfS2(Rational(0), rat(1, 2));
  FiniteRealization R;
  R.interiorScale = f == Family::C1 ? halfS2 : f == Family::D2 ? s2 : Quad2(1);
  R.uglovScale = f == Family::C1 ? halfS2 : f == Family::D2 ? s2 : Quad2(1);
  for (int i = 1; i < l; ++i) {
    QVector v = zeroVector(n);
    v[i - 1] = R.interiorScale;
    v[i] = -R.interiorScale;
    R.simpleRoots.push_back(v);
  }
  QVector last = zeroVector(n);
  switch (f) {
    case Family::C1:
    case Family::D2: last[n - 1] = s2; break;
    case Family::A2l_2:
    case Family::A2lm1_2: last[n - 1] = Quad2(2); break;
    case Family::B1: last[n - 1] = Quad2(1); break;
    case Family::D1:
      last[n - 2] = Quad2(1);
      last[n - 1] = Quad2(1);
      break;
  }
  R.simpleRoots.push_back(last);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      if (innerProduct(R.alpha(i), R.alpha(j)) != Quad2(ctx.gram[i][j]))
        throw Inconsistency("realization Gram mismatch at " + std::to_string(i) + "," + std::to_string(j));
  for (auto& a : R.simpleRoots) R.simpleCoroots.push_back((Quad2(2) / innerProduct(a, a)) * a);

  // rows of the coroot and root matrices
  QMatrix corootRows(n), rootRows(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) {
      corootRows(k, c) = R.simpleCoroots[k][c];
      rootRows(k, c) = R.simpleRoots[k][c];
    }
  R.rhoCheck = zeroVector(n);
  for (std::size_t i = 0; i < n; ++i) {
    R.fundWeights.push_back(corootRows.solve(unitVector(n, i)));
    R.fundCoweights.push_back(rootRows.solve(unitVector(n, i)));
    R.rhoCheck = R.rhoCheck + R.fundCoweights.back();
  }
  R.highestRoot = zeroVector(n);
  for (int k = 1; k <= l; ++k) R.highestRoot = R.highestRoot + Quad2(ctx.marks[k]) * R.alpha(k);
  R.highestRootCheck = (Quad2(2) / innerProduct(R.highestRoot, R.highestRoot)) * R.highestRoot;

  switch (f) {
    case Family::C1:
    case Family::D2:
      for (std::size_t i = 0; i < n; ++i) R.translationGenerators.push_back(unitVector(n, i, s2));
      break;
    case Family::A2l_2:
      for (std::size_t i = 0; i < n; ++i) R.translationGenerators.push_back(unitVector(n, i));
      break;
    default: {
      QVector v = zeroVector(n);
      v[0] = Quad2(1);
      v[1] = Quad2(1);
      R.translationGenerators.push_back(v);
      v[1] = Quad2(-1);
      R.translationGenerators.push_back(v);
      for (std::size_t i = 1; i + 1 < n; ++i) {
        QVector w = zeroVector(n);
        w[i] = Quad2(1);
        w[i + 1] = Quad2(-1);
        R.translationGenerators.push_back(w);
      }
      break;
    }
  }
  return R;
}

inline std::shared_ptr<const FiniteRealization> realizationFor(AffineKind kind) {
  static std::mutex mu;
  static std::map<AffineKind, std::shared_ptr<const FiniteRealization>> cache;
  auto ctx = contextFor(kind);
  std::lock_guard lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const FiniteRealization>(buildRealization(*ctx));
  cache.emplace(kind, r);
  return r;
}

}  // namespace affcore
