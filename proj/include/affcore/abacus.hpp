#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "affcore/cartan.hpp"

namespace affcore {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}
  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
    }
  }

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  // 1-based, zero past the end
  std::int64_t part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  std::int64_t size() const {
    std::int64_t s = 0;
    for (auto p : parts_) s = checkedAdd(s, p);
    return s;
  }

  Partition conjugate() const {
    std::vector<std::int64_t> c;
    if (parts_.empty()) return {};
    c.reserve(static_cast<std::size_t>(parts_.front()));
    for (std::int64_t col = 1; col <= parts_.front(); ++col) {
      std::int64_t n = 0;
      while (n < static_cast<std::int64_t>(parts_.size()) && parts_[n] >= col) ++n;
      c.push_back(n);
    }
    return Partition(std::move(c));
  }

  std::int64_t diagonalCount() const {
    std::int64_t d = 0;
    while (d < static_cast<std::int64_t>(parts_.size()) && parts_[d] >= d + 1) ++d;
    return d;
  }

  std::string str() const {
    if (parts_.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

// Cells are (row, column), both 1-based.
using Cell = std::pair<std::int64_t, std::int64_t>;

inline Partition partitionFromCells(const std::set<Cell>& cells) {
  std::vector<std::int64_t> rows;
  for (auto [r, c] : cells) {
    if (r < 1 || c < 1) throw ShapeError("cell outside the quadrant");
    if (static_cast<std::int64_t>(rows.size()) < r) rows.resize(static_cast<std::size_t>(r), 0);
    rows[r - 1]++;
  }
  // must be a Young diagram
  for (auto [r, c] : cells)
    if (c > rows[r - 1]) throw ShapeError("cells do not form a Young diagram");
  return Partition(rows);
}

struct WholeAbacus {
  Partition lambda;
  std::int64_t charge = 0;

  bool hasBead(std::int64_t x) const {
    // bead iff x = lambda_i - i + charge for some i
    const std::int64_t n = static_cast<std::int64_t>(lambda.length());
    if (x < charge - n) return true;
    for (std::int64_t i = 1; i <= n; ++i) {
      const std::int64_t b = lambda.part(i) - i + charge;
      if (b == x) return true;
      if (b < x) return false;
    }
    return false;
  }
  // Beads >= lo, decreasing; lo must be <= charge - length so the rest is a full sea.
  std::vector<std::int64_t> beadsFrom(std::int64_t lo) const {
    std::vector<std::int64_t> out;
    const std::int64_t n = static_cast<std::int64_t>(lambda.length());
    for (std::int64_t i = 1;; ++i) {
      const std::int64_t b = (i <= n ? lambda.part(i) : 0) - i + charge;
      if (b < lo) break;
      out.push_back(b);
    }
    return out;
  }
  // Lowest position worth looking at: everything below is a bead.
  std::int64_t seaLevel() const { return charge - static_cast<std::int64_t>(lambda.length()); }

  friend bool operator==(const WholeAbacus&, const WholeAbacus&) = default;
  friend auto operator<=>(const WholeAbacus&, const WholeAbacus&) = default;
};

// Reads (partition, charge) off a set of beads that contains every position below `sea`.
inline WholeAbacus wholeFromBeads(const std::vector<std::int64_t>& beadsAboveSea, std::int64_t sea) {
  std::vector<std::int64_t> b = beadsAboveSea;
  std::sort(b.begin(), b.end(), std::greater<>());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  // count of nonneg beads minus count of negative holes
  std::int64_t charge = std::max<std::int64_t>(sea, 0);  // everything below the sea is a bead
  for (auto x : b)
    if (x >= 0) ++charge;
  for (std::int64_t x = std::min<std::int64_t>(sea, 0); x < 0; ++x)
    if (x >= sea && !std::binary_search(b.begin(), b.end(), x, std::greater<>())) --charge;
  std::vector<std::int64_t> parts;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::int64_t p = b[i] + static_cast<std::int64_t>(i + 1) - charge;
    if (p <= 0) break;
    parts.push_back(p);
  }
  return {Partition(parts), charge};
}

struct HalfAbacus {
  std::int64_t base = 0;
  std::vector<std::int64_t> beads;  // increasing, all >= base

  static HalfAbacus make(std::int64_t base, std::vector<std::int64_t> beads) {
    std::sort(beads.begin(), beads.end());
    if (std::adjacent_find(beads.begin(), beads.end()) != beads.end())
      throw ShapeError("repeated bead");
    if (!beads.empty() && beads.front() < base) throw ShapeError("bead below base");
    return {base, std::move(beads)};
  }
  bool hasBead(std::int64_t x) const { return std::binary_search(beads.begin(), beads.end(), x); }

  friend bool operator==(const HalfAbacus&, const HalfAbacus&) = default;
  friend auto operator<=>(const HalfAbacus&, const HalfAbacus&) = default;
};

// True when the abacus of Lambda_j is a whole abacus.
inline bool isWholeCharge(const AffineContext& ctx, int j) {
  if (j < 0 || j > ctx.l()) return false;
  return ctx.family() == Family::C1 || ctx.comarkRatio(j) == 2;
}

// Half abacus of Lambda_j: (base, beads).
inline std::optional<HalfAbacus> halfWeightData(const AffineContext& ctx, int j) {
  if (isWholeCharge(ctx, j)) return std::nullopt;
  const int l = ctx.l();
  const Family f = ctx.family();
  if (j == 0) return HalfAbacus{0, {}};
  const bool pairAtZero = f == Family::B1 || f == Family::A2lm1_2 || f == Family::D1;
  if (j == 1 && pairAtZero) return HalfAbacus{0, {0}};
  if (f == Family::D1 && j == l - 1) return HalfAbacus{l, {l}};
  if (f == Family::D1 && j == l) return HalfAbacus{l, {}};
  if ((f == Family::B1 || f == Family::D2) && j == l) return HalfAbacus{l + 1, {}};
  throw Inconsistency("no weight abacus for " + ctx.kind.str() + " j=" + std::to_string(j));
}

// Weight index of a half abacus from its base and bead parity.
inline int halfWeightIndex(const AffineContext& ctx, const HalfAbacus& h) {
  const int l = ctx.l();
  const bool odd = h.beads.size() % 2 == 1;
  for (int j = 0; j <= l; ++j) {
    auto w = halfWeightData(ctx, j);
    if (!w || w->base != h.base) continue;
    // only two candidates share a base; they differ in parity
    if ((w->beads.size() % 2 == 1) == odd) return j;
  }
  // bases that host a single weight: parity is not constrained (one-bead specials)
  for (int j = 0; j <= l; ++j) {
    auto w = halfWeightData(ctx, j);
    if (w && w->base == h.base) return j;
  }
  throw ShapeError("base " + std::to_string(h.base) + " is not legal for " + ctx.kind.str());
}

class Abacus {
 public:
  using Shape = std::variant<WholeAbacus, HalfAbacus>;

  Abacus(AffineKind kind, int j, Shape shape) : kind_(kind), j_(j), shape_(std::move(shape)) {
    const auto ctx = contextFor(kind);
    if (j < 0 || j > ctx->l()) throw ShapeError("charge out of range 0..l");
    if (auto* w = std::get_if<WholeAbacus>(&shape_)) {
      if (!isWholeCharge(*ctx, j)) throw ShapeError("charge " + std::to_string(j) + " needs a half abacus");
      if (w->charge != j) throw ShapeError("whole abacus charge mismatch");
    } else {
      const auto& h = std::get<HalfAbacus>(shape_);
      auto wd = halfWeightData(*ctx, j);
      if (!wd) throw ShapeError("charge " + std::to_string(j) + " needs a whole abacus");
      if (wd->base != h.base) throw ShapeError("base does not match weight index");
      if (!h.beads.empty() && h.beads.front() < h.base) throw ShapeError("bead below base");
    }
  }

  AffineKind kind() const { return kind_; }
  const AffineContext& context() const { return *contextFor(kind_); }
  int charge() const { return j_; }
  bool isWhole() const { return std::holds_alternative<WholeAbacus>(shape_); }
  const WholeAbacus& whole() const {
    if (!isWhole()) throw ShapeError("half abacus where a whole one is required");
    return std::get<WholeAbacus>(shape_);
  }
  const HalfAbacus& half() const {
    if (isWhole()) throw ShapeError("whole abacus where a half one is required");
    return std::get<HalfAbacus>(shape_);
  }
  const Shape& shape() const { return shape_; }

  bool hasBead(std::int64_t x) const {
    return std::visit([x](const auto& s) { return s.hasBead(x); }, shape_);
  }
  // Smallest position that may differ from the vacuum display of this variant.
  std::int64_t lowestActive() const {
    if (isWhole()) return whole().seaLevel();
    return half().base;
  }
  std::int64_t highestBead() const {
    if (isWhole()) {
      const auto& w = whole();
      return w.lambda.part(1) - 1 + w.charge;
    }
    const auto& h = half();
    return h.beads.empty() ? h.base - 1 : h.beads.back();
  }

  std::string key() const {
    std::string s = std::string(familyLabel(kind_.family)) + "/" + std::to_string(kind_.l) + "/" +
                    std::to_string(j_) + ":";
    if (isWhole()) return s + "W" + whole().lambda.str();
    s += "H" + std::to_string(half().base) + "{";
    for (auto b : half().beads) s += std::to_string(b) + ",";
    return s + "}";
  }

  friend bool operator==(const Abacus& a, const Abacus& b) {
    return a.kind_ == b.kind_ && a.j_ == b.j_ && a.shape_ == b.shape_;
  }
  friend bool operator<(const Abacus& a, const Abacus& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.j_ != b.j_) return a.j_ < b.j_;
    return a.shape_ < b.shape_;
  }

 private:
  AffineKind kind_;
  int j_;
  Shape shape_;
};

inline Abacus fromPartition(AffineKind kind, const Partition& lambda, int j) {
  return Abacus(kind, j, WholeAbacus{lambda, j});
}

inline std::pair<Partition, std::int64_t> toPartition(const Abacus& a) {
  const auto& w = a.whole();
  return {w.lambda, w.charge};
}

inline Abacus weightAbacus(AffineKind kind, int j) {
  const auto ctx = contextFor(kind);
  if (j < 0 || j > ctx->l()) throw DomainError("charge out of range");
  if (isWholeCharge(*ctx, j)) return Abacus(kind, j, WholeAbacus{{}, j});
  return Abacus(kind, j, *halfWeightData(*ctx, j));
}

inline Abacus conjugate(const Abacus& a) {
  const auto& w = a.whole();
  const int l = a.kind().l;
  return Abacus(a.kind(), l - a.charge(), WholeAbacus{w.lambda.conjugate(), l - a.charge()});
}

enum class AssocCase { First, Second, Third };

inline AssocCase associateCase(const AffineContext& ctx, std::int64_t base) {
  const int l = ctx.l();
  if (base == 0) return ctx.hasZeroIndex ? AssocCase::Second : AssocCase::First;
  if (base == l && !ctx.hasZeroIndex && !ctx.hasLPlusOneIndex) return AssocCase::First;
  if (base == l + 1 && ctx.hasLPlusOneIndex) return AssocCase::Third;
  throw ShapeError("no associated two-sided set for base " + std::to_string(base) + " in " + ctx.kind.str());
}

inline WholeAbacus associateTwoSided(const HalfAbacus& h, const AffineContext& ctx) {
  const AssocCase c = associateCase(ctx, h.base);
  const std::int64_t k = h.base;
  std::set<std::int64_t> removed;
  for (auto x : h.beads) removed.insert(c == AssocCase::First ? 2 * k - 1 - x : 2 * k - 2 - x);
  if (c == AssocCase::Third) removed.insert(ctx.l());
  std::int64_t sea = k;
  if (!removed.empty()) sea = std::min(sea, *removed.begin());
  std::vector<std::int64_t> beads = h.beads;
  for (std::int64_t x = sea; x < k; ++x)
    if (!removed.count(x)) beads.push_back(x);
  return wholeFromBeads(beads, sea);
}

// Built from the shifted Young diagram, independently of the bead picture.
inline Partition doubleDistinct(const HalfAbacus& h, const AffineContext& ctx) {
  const AssocCase c = associateCase(ctx, h.base);
  std::vector<std::int64_t> a(h.beads.rbegin(), h.beads.rend());
  const std::int64_t m = static_cast<std::int64_t>(a.size());
  auto shift = [&](std::int64_t i) -> std::int64_t {
    switch (c) {
      case AssocCase::First: return 2 * (i / 2);
      case AssocCase::Second: return i - 1;
      case AssocCase::Third: return i;
    }
    return 0;
  };
  std::set<Cell> y;
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t len = a[i - 1] - h.base + i + shift(1) - shift(i);
    for (std::int64_t t = 1; t <= len; ++t) y.insert({i, shift(i) + t});
  }
  std::set<Cell> cells = y;
  for (auto [r, col] : y) {
    switch (c) {
      case AssocCase::First: cells.insert({col, r}); break;
      case AssocCase::Second: cells.insert({col + 1, r}); break;
      case AssocCase::Third: cells.insert({col - 1, r}); break;
    }
  }
  if (c == AssocCase::First)
    for (std::int64_t i = 1; i <= m; ++i) cells.insert({i, i});
  return partitionFromCells(cells);
}

inline bool isEven(const Partition& lambda) { return lambda.diagonalCount() % 2 == 0; }

// Bead-count form: beads at nonnegative positions of the charge-0 abacus.
inline bool isEvenByBeads(const Partition& lambda) {
  WholeAbacus w{lambda, 0};
  return w.beadsFrom(0).size() % 2 == 0;
}

inline bool isCoreTypeA(const Partition& lambda, std::int64_t e) {
  if (e < 2) throw DomainError("e must be at least 2");
  WholeAbacus w{lambda, 0};
  const auto beads = w.beadsFrom(w.seaLevel() - e);
  for (auto b : beads)
    if (!w.hasBead(b - e)) return false;
  return true;
}

inline std::vector<std::int64_t> hookLengths(const Partition& lambda) {
  std::vector<std::int64_t> out;
  const Partition c = lambda.conjugate();
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (std::int64_t j = 1; j <= lambda.part(i); ++j)
      out.push_back(lambda.part(i) - j + c.part(static_cast<std::size_t>(j)) - static_cast<std::int64_t>(i) + 1);
  return out;
}

// One row of filled/empty circles with a bar before position 0.
inline std::string renderBeads(const Abacus& a, std::int64_t lo, std::int64_t hi) {
  std::string s;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (x == 0) s += "|";
    if (!a.isWhole() && x < a.half().base) s += " ";
    else s += a.hasBead(x) ? "●" : "○";
  }
  return s;
}

}  // namespace affcore
