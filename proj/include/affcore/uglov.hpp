#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affcore/action.hpp"

namespace affcore {

// Column c in 0..l+1 (0 and l+1 only when present in I_X), row index rho.
// For half abaci of base l or l+1 the drawn row is rho - 1/2.
struct UglovCell {
  int column = 0;
  std::int64_t rho = 0;
  bool flipped = false;
  friend bool operator==(const UglovCell&, const UglovCell&) = default;
};

inline bool isHalfColumn(const AffineContext& ctx, int c) { return c == 0 || c == ctx.l() + 1; }

inline bool rowsAreHalfShifted(const AffineContext& ctx, const Abacus& a) {
  return !a.isWhole() && (a.half().base == ctx.l() || a.half().base == ctx.l() + 1);
}

// Cell of position x; nullopt when x does not exist (below a half abacus's base).
inline std::optional<UglovCell> uglovCell(const AffineContext& ctx, const Abacus& a, std::int64_t x) {
  const int l = ctx.l();
  const LIndex li = lIndex(ctx, x);
  if (a.isWhole()) {
    if (li.label >= 1 && li.label <= l) return UglovCell{li.label, li.q + 1, false};
    if (li.label < 0) return UglovCell{-li.label, 1 - li.q, true};
    if (li.label == l + 1) return x >= 0 ? UglovCell{l + 1, li.q + 1, false} : UglovCell{l + 1, -li.q, true};
    return x >= 0 ? UglovCell{0, li.q + 2, false} : UglovCell{0, 1 - li.q, true};
  }
  const std::int64_t base = a.half().base;
  if (x < base) return std::nullopt;
  const std::int64_t o = ctx.hasZeroIndex ? -1 : 0;
  const std::int64_t s = floorDiv(x - o, ctx.period);
  const bool upper = base != 0;
  if (li.label >= 1 && li.label <= l) return UglovCell{li.label, s + 1, false};
  if (li.label < 0) return UglovCell{-li.label, upper ? 1 - s : -s, true};
  return UglovCell{li.label, s + 1, false};
}

struct UglovColumn {
  bool twoSided = true;
  std::int64_t lo = 0;  // lowest stored row; two-sided: beads below
  std::vector<char> bits;
  // rows above lo + bits.size() are empty
  bool bead(std::int64_t rho) const {
    if (rho < lo) return twoSided;
    if (rho >= lo + static_cast<std::int64_t>(bits.size())) return false;
    return bits[rho - lo] != 0;
  }
  bool exists(std::int64_t rho) const { return twoSided || rho >= lo; }
  std::int64_t hi() const { return lo + static_cast<std::int64_t>(bits.size()) - 1; }
};

struct UglovDisplay {
  int l = 0;
  bool halfRows = false;
  std::map<int, UglovColumn> columns;
  std::map<std::pair<int, std::int64_t>, std::int64_t> cellToPosition;  // inverse on the built window
};

inline UglovDisplay uglovMap(const Abacus& a) {
  const AffineContext& ctx = a.context();
  const int l = ctx.l();
  UglovDisplay d;
  d.l = l;
  d.halfRows = rowsAreHalfShifted(ctx, a);
  const std::int64_t reach =
      std::max<std::int64_t>({std::abs(a.lowestActive()), std::abs(a.highestBead()), 1}) + 4 * ctx.period;
  const std::int64_t lo = a.isWhole() ? -reach : a.half().base;
  const std::int64_t hi = reach;
  std::map<int, std::map<std::int64_t, char>> raw;
  for (std::int64_t x = lo; x <= hi; ++x) {
    auto cell = uglovCell(ctx, a, x);
    if (!cell) continue;
    const bool shown = a.hasBead(x) != cell->flipped;
    raw[cell->column][cell->rho] = shown ? 1 : 0;
    d.cellToPosition[{cell->column, cell->rho}] = x;
  }
  for (auto& [c, rows] : raw) {
    UglovColumn col;
    col.twoSided = !isHalfColumn(ctx, c);
    std::int64_t start, stop;
    if (col.twoSided) {
      // contiguous block through rows 0 and 1
      start = 0;
      while (rows.count(start - 1)) --start;
      stop = 1;
      while (rows.count(stop + 1)) ++stop;
    } else {
      start = rows.begin()->first;
      stop = start;
      while (rows.count(stop + 1)) ++stop;
    }
    col.lo = start;
    for (std::int64_t r = start; r <= stop; ++r) col.bits.push_back(rows.at(r));
    d.columns[c] = std::move(col);
  }
  return d;
}

// Per-runner charge: beads at rho >= 1 minus gaps at rho <= 0.
inline std::vector<std::int64_t> runnerCharges(const UglovDisplay& d) {
  std::vector<std::int64_t> s;
  for (int c = 1; c <= d.l; ++c) {
    const UglovColumn& col = d.columns.at(c);
    std::int64_t v = 0;
    for (std::int64_t r = col.lo; r <= col.hi(); ++r) {
      if (r >= 1 && col.bead(r)) ++v;
      if (r <= 0 && !col.bead(r)) --v;
    }
    s.push_back(v);
  }
  return s;
}

using UglovVector = std::vector<Rational>;

inline std::string str(const UglovVector& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? ", " : "") + str(u[i]);
  return s + ")";
}

inline UglovVector uglovVector(const Abacus& a) {
  const UglovDisplay d = uglovMap(a);
  UglovVector u;
  for (auto s : runnerCharges(d)) u.push_back(d.halfRows ? Rational(s) - rat(1, 2) : Rational(s));
  return u;
}

inline QVector weightedUglov(const Abacus& a) {
  const auto R = realizationFor(a.kind());
  QVector out;
  for (auto& x : uglovVector(a)) out.push_back(R->uglovScale * Quad2(x));
  return out;
}

enum class ElementaryKind { Fill0AdjointPair, RemoveLAdjointPair, SlideBead, ToggleSingle };

inline std::string_view elementaryKindName(ElementaryKind k) {
  switch (k) {
    case ElementaryKind::Fill0AdjointPair: return "fill0AdjointPair";
    case ElementaryKind::RemoveLAdjointPair: return "removeLAdjointPair";
    case ElementaryKind::SlideBead: return "slideBead";
    case ElementaryKind::ToggleSingle: return "toggleSingle";
  }
  return "?";
}

struct ElementaryOp {
  ElementaryKind kind = ElementaryKind::ToggleSingle;
  std::vector<std::int64_t> positions;  // increasing; all toggled
  std::int64_t step = 0;                // slides: bead goes from positions[1] down by step

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
  friend auto operator<=>(const ElementaryOp&, const ElementaryOp&) = default;
};

// 0-adjoint and l-adjoint sums for the abacus' base (whole abaci count as k = -inf).
struct AdjointSums {
  std::int64_t zero;
  std::int64_t top;
};

inline AdjointSums adjointSums(const AffineContext& ctx, const Abacus& a) {
  const std::int64_t l = ctx.l();
  AdjointSums s{ctx.hasZeroIndex ? -2 : -1, 0};
  const std::int64_t k = a.isWhole() ? 0 : a.half().base;
  if (k == 0) s.top = ctx.hasLPlusOneIndex ? 2 * l : 2 * l - 1;
  else if (!ctx.hasZeroIndex && !ctx.hasLPlusOneIndex) s.top = 4 * l - 1;
  else if (!ctx.hasZeroIndex) s.top = 4 * l + 1;
  else s.top = 4 * l + 2;
  return s;
}

// Elementary operations read off the abacus through adjoint positions and slides.
inline std::vector<ElementaryOp> elementaryOps(const Abacus& a) {
  const AffineContext& ctx = a.context();
  const int l = ctx.l();
  const BeadWindow w(a, 2 * ctx.period + 4);
  const AdjointSums sums = adjointSums(ctx, a);
  const std::int64_t P = ctx.period;
  std::set<ElementaryOp> ops;
  auto exists = [&](std::int64_t x) { return w.exists(x); };
  const std::int64_t lo = std::min<std::int64_t>(w.lo(), sums.zero - w.hi()) - 1;
  const std::int64_t hi = std::max<std::int64_t>(w.hi(), sums.top - w.lo()) + 1;
  for (std::int64_t x = lo; x <= hi; ++x) {
    const std::int64_t y0 = sums.zero - x;
    if (x < y0 && exists(x) && exists(y0) && !w.has(x) && !w.has(y0))
      ops.insert({ElementaryKind::Fill0AdjointPair, {x, y0}, 0});
    const std::int64_t yl = sums.top - x;
    if (x < yl && exists(x) && exists(yl) && w.has(x) && w.has(yl))
      ops.insert({ElementaryKind::RemoveLAdjointPair, {x, yl}, 0});
  }
  if (!a.isWhole()) {
    for (std::int64_t x = w.lo(); x <= w.hi(); ++x)
      if (w.has(x) && exists(x - P) && !w.has(x - P)) ops.insert({ElementaryKind::SlideBead, {x - P, x}, P});
  }
  // second kind: the topmost cell of a half column
  auto halfTop = [&](int label) -> std::optional<std::int64_t> {
    const std::int64_t r = iotaInverse(ctx, label);
    if (a.isWhole()) return label == 0 ? r - P : r;  // -1 and l
    std::int64_t x = r;
    while (x < a.half().base) x += P;
    return x;
  };
  std::vector<int> halfLabels;
  if (ctx.hasZeroIndex) halfLabels.push_back(0);
  if (ctx.hasLPlusOneIndex) halfLabels.push_back(l + 1);
  for (int label : halfLabels) {
    const std::int64_t x = *halfTop(label);
    const bool flippedHere = a.isWhole() && x < 0;
    if (w.has(x) != flippedHere) ops.insert({ElementaryKind::ToggleSingle, {x}, 0});
  }
  return {ops.begin(), ops.end()};
}

// The same list computed on the drawn display and pulled back cell by cell.
inline std::vector<ElementaryOp> elementaryOpsViaDisplay(const Abacus& a) {
  const UglovDisplay d = uglovMap(a);
  std::set<ElementaryOp> ops;
  for (const auto& [c, col] : d.columns) {
    for (std::int64_t r = col.lo; r <= col.hi(); ++r) {
      if (!col.bead(r)) continue;
      if (col.exists(r - 1)) {
        if (col.bead(r - 1)) continue;
        auto px = d.cellToPosition.find({c, r});
        auto py = d.cellToPosition.find({c, r - 1});
        if (px == d.cellToPosition.end() || py == d.cellToPosition.end())
          throw Inconsistency("display move outside the built window");
        const std::int64_t x = px->second, y = py->second;
        const bool bx = a.hasBead(x), by = a.hasBead(y);
        ElementaryOp op;
        op.positions = {std::min(x, y), std::max(x, y)};
        if (!bx && !by) op.kind = ElementaryKind::Fill0AdjointPair;
        else if (bx && by) op.kind = ElementaryKind::RemoveLAdjointPair;
        else {
          op.kind = ElementaryKind::SlideBead;
          op.step = std::abs(x - y);
        }
        ops.insert(op);
      } else if (r == col.lo) {
        ops.insert({ElementaryKind::ToggleSingle, {d.cellToPosition.at({c, r})}, 0});
      }
    }
  }
  return {ops.begin(), ops.end()};
}

struct CoreCertificate {
  bool noElementaryOps = false;          // criterion (3)
  bool descentReachesWeight = false;     // criterion (2)
  std::optional<Rational> defectValue;   // criterion (1), when beta is known
  std::optional<RootCoords> beta;
  std::optional<WeylWord> word;
  bool consistent() const {
    if (noElementaryOps != descentReachesWeight) return false;
    if (defectValue && ((*defectValue == 0) != noElementaryOps)) return false;
    return true;
  }
};

inline CoreCertificate coreCertificate(const Abacus& a, std::optional<RootCoords> knownBeta = std::nullopt) {
  CoreCertificate c;
  c.noElementaryOps = elementaryOps(a).empty();
  try {
    c.word = grassmannianWord(a);
    c.descentReachesWeight = true;
    c.beta = applyWord(weightAbacus(a.kind(), a.charge()), *c.word).tally;
  } catch (const NotACore&) {
    c.descentReachesWeight = false;
  }
  if (knownBeta) c.beta = knownBeta;
  if (c.beta) c.defectValue = defect(a.context(), a.charge(), *c.beta);
  return c;
}

inline bool isCore(const Abacus& a) { return elementaryOps(a).empty(); }

inline UglovVector sigmaOnUglov(UglovVector u, int i, const AffineContext& ctx, int j) {
  const int l = ctx.l();
  if (static_cast<int>(u.size()) != l) throw DimensionError("Uglov vector length");
  if (i < 0 || i > l) throw DomainError("node out of range");
  const Rational r = ctx.comarkRatio(j);
  const Family f = ctx.family();
  if (i > 0 && i < l) {
    std::swap(u[i - 1], u[i]);
  } else if (i == l) {
    if (f == Family::D1) {
      Rational a = -u[l - 1], b = -u[l - 2];
      u[l - 2] = a;
      u[l - 1] = b;
    } else {
      u[l - 1] = -u[l - 1];
    }
  } else {
    switch (f) {
      case Family::B1:
      case Family::A2lm1_2:
      case Family::D1: {
        Rational a = r - u[1], b = r - u[0];
        u[0] = a;
        u[1] = b;
        break;
      }
      case Family::D2:
      case Family::A2l_2: u[0] = r - u[0]; break;
      case Family::C1: u[0] = 2 * r - u[0]; break;
    }
  }
  return u;
}

// Flush placement: runner i filled up to row u_i.  Returns the abacus when
// the placement is a legal abacus of weight index j reachable by descent.
inline std::optional<Abacus> abacusFromUglov(AffineKind kind, int j, const UglovVector& u) {
  const auto ctx = contextFor(kind);
  const int l = ctx->l();
  if (static_cast<int>(u.size()) != l) throw DimensionError("Uglov vector length");
  const bool whole = isWholeCharge(*ctx, j);
  std::optional<HalfAbacus> hw;
  if (!whole) hw = halfWeightData(*ctx, j);
  const bool halfRows = hw && (hw->base == l || hw->base == l + 1);
  std::vector<std::int64_t> s;
  for (auto& x : u) {
    Rational v = halfRows ? x + rat(1, 2) : x;
    auto iv = toInt64(v);
    if (!iv) return std::nullopt;
    s.push_back(*iv);
  }
  std::int64_t m = 1;
  for (auto v : s) m = std::max<std::int64_t>(m, std::abs(v));
  const std::int64_t reach = (m + 4) * ctx->period;
  // a throwaway abacus of the right variant drives uglovCell
  const Abacus probe = weightAbacus(kind, j);
  std::vector<std::int64_t> beads;
  const std::int64_t lo = whole ? -reach : hw->base;
  for (std::int64_t x = lo; x <= reach; ++x) {
    auto cell = uglovCell(*ctx, probe, x);
    if (!cell) continue;
    bool shown;
    if (isHalfColumn(*ctx, cell->column)) shown = false;
    else shown = cell->rho <= s[cell->column - 1];
    if (shown != cell->flipped) beads.push_back(x);
  }
  std::optional<Abacus> out;
  if (whole) {
    WholeAbacus wa = wholeFromBeads(beads, lo);
    if (wa.charge != j) return std::nullopt;
    out = Abacus(kind, j, wa);
  } else {
    out = Abacus(kind, j, HalfAbacus::make(hw->base, beads));
  }
  if (uglovVector(*out) != u) return std::nullopt;
  try {
    grassmannianWord(*out);
  } catch (const NotACore&) {
    return std::nullopt;
  }
  return out;
}

struct TypeAComparison {
  std::string statement;
  bool isCoreHere = false;
  bool typeACondition = false;
  bool agree() const { return isCoreHere == typeACondition; }
};

inline TypeAComparison compareTypeA(const Abacus& a) {
  const AffineContext& ctx = a.context();
  const int l = ctx.l();
  const int j = a.charge();
  TypeAComparison rep;
  rep.isCoreHere = isCore(a);
  auto selfConjCore = [](const Partition& p, std::int64_t e) {
    return p.conjugate() == p && isCoreTypeA(p, e);
  };
  const Family f = ctx.family();
  if (f == Family::C1 && j == 0) {
    rep.statement = "C charge 0: self-conjugate 2l-core";
    rep.typeACondition = selfConjCore(a.whole().lambda, 2 * l);
  } else if (f == Family::A2lm1_2 && j == l) {
    rep.statement = "A2l-1~2 charge l: self-conjugate 2l-core";
    rep.typeACondition = selfConjCore(a.whole().lambda, 2 * l);
  } else if (j == 0 && !a.isWhole()) {
    const Partition dd = doubleDistinct(a.half(), ctx);
    switch (f) {
      case Family::D1:
      case Family::A2lm1_2:
        rep.statement = "charge 0: double-distinct even self-conjugate 2l-core";
        rep.typeACondition = isEven(dd) && selfConjCore(dd, 2 * l);
        break;
      case Family::A2l_2:
        rep.statement = "charge 0: double-distinct (2l+1)-core";
        rep.typeACondition = isCoreTypeA(dd, 2 * l + 1);
        break;
      case Family::B1:
        rep.statement = "charge 0: double-distinct even self-conjugate (2l+1)-core";
        rep.typeACondition = isEven(dd) && selfConjCore(dd, 2 * l + 1);
        break;
      case Family::D2:
        rep.statement = "charge 0: double-distinct (2l+2)-core";
        rep.typeACondition = isCoreTypeA(dd, 2 * l + 2);
        break;
      default: throw ScopeError("no type-A comparison for this family and charge");
    }
  } else {
    throw ScopeError("no type-A comparison for " + ctx.kind.str() + " charge " + std::to_string(j));
  }
  return rep;
}

inline std::string renderUglov(const UglovDisplay& d) {
  // rows between the first gap and the last bead, one spare row each side
  std::int64_t lo = 1, hi = 0;
  for (auto& [c, col] : d.columns) {
    std::int64_t first = col.twoSided ? col.lo : col.lo - 1;
    while (first <= col.hi() && !(col.exists(first) && !col.bead(first))) ++first;
    lo = std::min(lo, first);
    for (std::int64_t r = col.hi(); r >= col.lo; --r)
      if (col.bead(r)) {
        hi = std::max(hi, r);
        break;
      }
  }
  --lo;
  ++hi;
  std::string out = "      ";
  for (auto& [c, col] : d.columns) out += std::to_string(c) + " ";
  out += "\n";
  for (std::int64_t r = lo; r <= hi; ++r) {
    std::string label = d.halfRows ? str(Rational(r) - rat(1, 2)) : std::to_string(r);
    out += std::string(std::max<std::size_t>(0, 5 - std::min<std::size_t>(5, label.size())), ' ') + label + " ";
    for (auto& [c, col] : d.columns) {
      if (!col.exists(r)) out += "  ";
      else out += col.bead(r) ? "● " : "○ ";
    }
    out += "\n";
    if (r == 0) out += "     " + std::string(2 * d.columns.size() + 1, '-') + "\n";
  }
  return out;
}

}  // namespace affcore
