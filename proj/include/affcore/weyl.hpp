#pragma once

#include <string>
#include <vector>

#include "affcore/uglov.hpp"

namespace affcore {

// v -> linear * v + shift
struct AffineIsometry {
  QMatrix linear;
  QVector shift;

  static AffineIsometry identity(std::size_t n) { return {QMatrix::identity(n), zeroVector(n)}; }
  QVector apply(const QVector& v) const { return linear.apply(v) + shift; }
  // (*this) after (inner)
  AffineIsometry after(const AffineIsometry& inner) const {
    return {linear * inner.linear, linear.apply(inner.shift) + shift};
  }
  friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;
};

inline QMatrix reflectionMatrix(const QVector& alpha, const QVector& alphaCheck) {
  const std::size_t n = alpha.size();
  QMatrix m = QMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= alphaCheck[r] * alpha[c];
  return m;
}

inline AffineIsometry generatorIsometry(const FiniteRealization& R, int i) {
  const int l = static_cast<int>(R.simpleRoots.size());
  if (i < 0 || i > l) throw DomainError("node out of range");
  if (i == 0) return {reflectionMatrix(R.highestRoot, R.highestRootCheck), R.highestRootCheck};
  return {reflectionMatrix(R.alpha(i), R.simpleCoroots[i - 1]), zeroVector(l)};
}

inline AffineIsometry wordIsometry(const WeylWord& w, const FiniteRealization& R) {
  AffineIsometry acc = AffineIsometry::identity(R.simpleRoots.size());
  for (int i : w) acc = acc.after(generatorIsometry(R, i));
  return acc;
}

// Applies the letters one at a time, rightmost first.
inline QVector actOnPoint(const WeylWord& w, const FiniteRealization& R, QVector v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = generatorIsometry(R, *it).apply(v);
  return v;
}

// Integer coordinates of q in the translation lattice basis.
inline std::vector<BigInt> latticeCoords(const QVector& q, const FiniteRealization& R) {
  const QMatrix basis = QMatrix::fromColumns(R.translationGenerators);
  const QVector c = basis.solve(q);
  std::vector<BigInt> out;
  for (auto& x : c) {
    auto v = isRationalInteger(x);
    if (!v) throw LatticeError("translation " + str(q) + " is not in the coroot lattice");
    out.push_back(*v);
  }
  return out;
}

struct SemidirectDecomp {
  QVector q;
  QMatrix finitePart;
  WeylWord finiteWord;  // over nodes 1..l
};

inline WeylWord finiteWordOf(QMatrix m, const FiniteRealization& R) {
  const int l = static_cast<int>(R.simpleRoots.size());
  WeylWord rev;
  for (std::size_t guard = 0; !m.isIdentity(); ++guard) {
    if (guard > 100000) throw Inconsistency("finite descent does not terminate");
    int pick = -1;
    for (int i = 1; i <= l && pick < 0; ++i)
      if (innerProduct(m.apply(R.alpha(i)), R.rhoCheck).sign() < 0) pick = i;
    if (pick < 0) throw Inconsistency("linear part is not in the finite Weyl group");
    m = m * generatorIsometry(R, pick).linear;
    rev.push_back(pick);
  }
  return {rev.rbegin(), rev.rend()};
}

inline SemidirectDecomp semidirect(const WeylWord& w, const FiniteRealization& R) {
  const AffineIsometry iso = wordIsometry(w, R);
  SemidirectDecomp d{iso.shift, iso.linear, finiteWordOf(iso.linear, R)};
  latticeCoords(d.q, R);  // throws if the shift left the lattice
  return d;
}

inline std::int64_t atomicLength(const AffineContext& ctx, int j, const WeylWord& w) {
  WeightCoords v = fundamentalWeight(ctx, j);
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflectWeight(ctx, *it, v);
  return rootFromWeightDrop(ctx, j, v).height();
}

struct CompatReport {
  QVector lhs;  // weighted Uglov vector
  QVector rhs;  // r q + wbar(omega_j)
  bool holds() const { return lhs == rhs; }
};

inline CompatReport semidirectCompat(const Abacus& core) {
  const auto& ctx = core.context();
  const auto R = realizationFor(core.kind());
  const WeylWord w = grassmannianWord(core);
  const SemidirectDecomp d = semidirect(w, *R);
  const int j = core.charge();
  CompatReport rep;
  rep.lhs = weightedUglov(core);
  rep.rhs = Quad2(ctx.comarkRatio(j)) * d.q + d.finitePart.apply(R->omegaOrZero(j));
  return rep;
}

inline bool checkSemidirectCompat(const Abacus& core) { return semidirectCompat(core).holds(); }

inline Quad2 heightFormula(const AffineContext& ctx, const FiniteRealization& R, int j, const QVector& u) {
  const Quad2 inv(Rational(ctx.comarks[0]) / ctx.comarks[j]);
  const QVector wj = R.omegaOrZero(j);
  return inv * Quad2(rat(ctx.coxeterH, 2)) * (innerProduct(u, u) - innerProduct(wj, wj)) -
         innerProduct(u - wj, R.rhoCheck);
}

inline Quad2 nodeHeightFormula(const AffineContext& ctx, const FiniteRealization& R, int j, int i,
                               const QVector& u) {
  const Quad2 c = Quad2(Rational(ctx.comarks[0]) / ctx.comarks[j]) * Quad2(rat(ctx.marks[i], 2));
  const QVector wj = R.omegaOrZero(j);
  const QVector wic = R.omegaCheckOrZero(i);
  return innerProduct(c * u - wic, u) - innerProduct(c * wj - wic, wj);
}

inline std::int64_t heightViaRealization(const Abacus& core) {
  const auto& ctx = core.context();
  const auto R = realizationFor(core.kind());
  const Quad2 h = heightFormula(ctx, *R, core.charge(), weightedUglov(core));
  auto v = isRationalInteger(h);
  if (!v) throw Inconsistency("height formula gave " + h.str());
  return static_cast<std::int64_t>(*v);
}

inline RootCoords nodeHeightsViaRealization(const Abacus& core) {
  const auto& ctx = core.context();
  const auto R = realizationFor(core.kind());
  const QVector u = weightedUglov(core);
  RootCoords out;
  for (int i = 0; i <= ctx.l(); ++i) {
    const Quad2 h = nodeHeightFormula(ctx, *R, core.charge(), i, u);
    auto v = isRationalInteger(h);
    if (!v) throw Inconsistency("node height formula gave " + h.str());
    out.k.push_back(static_cast<std::int64_t>(*v));
  }
  return out;
}

struct Alcove {
  std::vector<QVector> vertices;
  QVector interior;  // centroid
};

inline Alcove fundamentalAlcove(const AffineContext& ctx, const FiniteRealization& R) {
  Alcove a;
  const std::size_t n = R.simpleRoots.size();
  a.vertices.push_back(zeroVector(n));
  for (int i = 1; i <= ctx.l(); ++i)
    a.vertices.push_back(Quad2(rat(1, ctx.marks[i])) * R.omegaCheck(i));
  a.interior = zeroVector(n);
  for (auto& v : a.vertices) a.interior = a.interior + v;
  a.interior = Quad2(rat(1, static_cast<std::int64_t>(a.vertices.size()))) * a.interior;
  return a;
}

inline WeylWord inverseWord(WeylWord w) { return {w.rbegin(), w.rend()}; }

// Image of the fundamental alcove under the word.
inline Alcove alcoveOf(const WeylWord& w, const AffineContext& ctx, const FiniteRealization& R) {
  if (ctx.l() != 2) throw ScopeError("alcove coordinates are provided for rank 2 only");
  const AffineIsometry iso = wordIsometry(w, R);
  Alcove a = fundamentalAlcove(ctx, R);
  for (auto& v : a.vertices) v = iso.apply(v);
  a.interior = iso.apply(a.interior);
  return a;
}

// A core's word w lies in W^j; its alcove in the cone C_j is that of w^{-1}.
inline Alcove alcoveCoords(const WeylWord& coreWord, const AffineContext& ctx, const FiniteRealization& R) {
  return alcoveOf(inverseWord(coreWord), ctx, R);
}

inline bool inTitsCone(const QVector& v, int j, const AffineContext& ctx, const FiniteRealization& R) {
  for (int k = 0; k <= ctx.l(); ++k) {
    if (k == j) continue;
    if (k == 0) {
      if (!((innerProduct(v, R.highestRoot) - Quad2(1)).sign() < 0)) return false;
    } else if (!(innerProduct(v, R.alpha(k)).sign() > 0)) {
      return false;
    }
  }
  return true;
}

}  // namespace affcore
