#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "affcore/abacus.hpp"

namespace affcore {

enum class Direction { F, E };
enum class MoveKind { Interior, ZeroEnd, LEnd, Special };

struct Move {
  int node = 0;
  MoveKind kind = MoveKind::Interior;
  std::int64_t fromPos = 0;                 // f-direction source (unused for specials)
  std::optional<std::int64_t> toPos;        // f-direction target
  std::vector<std::int64_t> specialPositions;  // Table-2 style creations
  int weight = 1;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveRule {
  int fromLabel;
  int step;
  int weight;
};

inline std::vector<MoveRule> moveRules(const AffineContext& ctx, int i) {
  const int l = ctx.l();
  const Family f = ctx.family();
  if (i < 0 || i > l) throw DomainError("node out of range");
  if (i > 0 && i < l) return {{i, 1, 1}, {-(i + 1), 1, 1}};
  if (i == 0) {
    switch (f) {
      case Family::C1: return {{-1, 1, 1}};
      case Family::A2l_2:
      case Family::D2: return {{-1, 2, 2}};
      default: return {{-1, 2, 1}, {-2, 2, 1}};
    }
  }
  switch (f) {
    case Family::A2lm1_2:
    case Family::A2l_2:
    case Family::C1: return {{l, 1, 1}};
    case Family::B1:
    case Family::D2: return {{l, 2, 2}};
    case Family::D1: return {{l, 2, 1}, {l - 1, 2, 1}};
  }
  return {};
}

// Positions a Table-2 move fills, for a half abacus with the given base.
inline std::optional<std::vector<std::int64_t>> specialFill(const AffineContext& ctx, int i,
                                                            std::int64_t base) {
  const int l = ctx.l();
  const Family f = ctx.family();
  if (i == 0 && base == 0) {
    if (f == Family::A2l_2 || f == Family::D2) return std::vector<std::int64_t>{0};
    if (f == Family::B1 || f == Family::A2lm1_2 || f == Family::D1) return std::vector<std::int64_t>{0, 1};
  }
  if (i == l) {
    if ((f == Family::B1 || f == Family::D2) && base == l + 1) return std::vector<std::int64_t>{l + 1};
    if (f == Family::D1 && base == l) return std::vector<std::int64_t>{l, l + 1};
  }
  return std::nullopt;
}

// Finite window of an abacus; below `lo` everything is a bead (whole) or absent (half).
class BeadWindow {
 public:
  explicit BeadWindow(const Abacus& a, std::int64_t margin = 4) : whole_(a.isWhole()) {
    if (whole_) {
      lo_ = a.whole().seaLevel() - margin;
      base_ = lo_;
    } else {
      lo_ = base_ = a.half().base;
    }
    hi_ = std::max(a.highestBead(), lo_) + margin;
    bits_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), 0);
    for (std::int64_t x = lo_; x <= hi_; ++x) bits_[x - lo_] = a.hasBead(x) ? 1 : 0;
  }

  bool exists(std::int64_t x) const { return whole_ || x >= base_; }
  bool has(std::int64_t x) const {
    if (x < lo_) return whole_;
    if (x > hi_) return false;
    return bits_[x - lo_] != 0;
  }
  void set(std::int64_t x, bool v) {
    if (x < lo_ || x > hi_) throw Inconsistency("bead move left the window");
    bits_[x - lo_] = v ? 1 : 0;
  }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  bool isWhole() const { return whole_; }

  std::vector<std::int64_t> beads() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = lo_; x <= hi_; ++x)
      if (bits_[x - lo_]) out.push_back(x);
    return out;
  }

 private:
  bool whole_;
  std::int64_t lo_ = 0, hi_ = 0, base_ = 0;
  std::vector<char> bits_;
};

inline Abacus rebuild(const Abacus& like, const BeadWindow& w) {
  if (like.isWhole()) {
    WholeAbacus wa = wholeFromBeads(w.beads(), w.lo());
    return Abacus(like.kind(), like.charge(), wa);
  }
  return Abacus(like.kind(), like.charge(), HalfAbacus::make(like.half().base, w.beads()));
}

inline std::vector<Move> availableMoves(const Abacus& a, int i, Direction dir) {
  const AffineContext& ctx = a.context();
  const BeadWindow w(a);
  const int l = ctx.l();
  const MoveKind kind = i == 0 ? MoveKind::ZeroEnd : i == l ? MoveKind::LEnd : MoveKind::Interior;
  std::vector<Move> out;
  for (const MoveRule& rule : moveRules(ctx, i)) {
    const std::int64_t r = iotaInverse(ctx, rule.fromLabel);
    std::int64_t p = w.lo() - floorMod(w.lo() - r, ctx.period);
    for (; p <= w.hi(); p += ctx.period) {
      const std::int64_t t = p + rule.step;
      if (!w.exists(p) || !w.exists(t)) continue;
      const bool ok = dir == Direction::F ? (w.has(p) && !w.has(t)) : (!w.has(p) && w.has(t));
      if (ok) out.push_back(Move{i, kind, p, t, {}, rule.weight});
    }
  }
  if (!a.isWhole()) {
    if (auto fill = specialFill(ctx, i, a.half().base)) {
      const bool want = dir == Direction::E;
      if (std::all_of(fill->begin(), fill->end(), [&](auto x) { return w.has(x) == want; }))
        out.push_back(Move{i, MoveKind::Special, 0, std::nullopt, *fill, 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const Move& x, const Move& y) {
    auto kx = x.toPos ? x.fromPos : x.specialPositions.front();
    auto ky = y.toPos ? y.fromPos : y.specialPositions.front();
    return kx < ky;
  });
  return out;
}

inline void applyMoveTo(BeadWindow& w, const Move& m, Direction dir) {
  if (m.toPos) {
    w.set(m.fromPos, dir == Direction::E);
    w.set(*m.toPos, dir == Direction::F);
  } else {
    for (auto x : m.specialPositions) w.set(x, dir == Direction::F);
  }
}

inline Abacus applyMove(const Abacus& a, const Move& m, Direction dir) {
  BeadWindow w(a);
  applyMoveTo(w, m, dir);
  return rebuild(a, w);
}

struct SigmaResult {
  Abacus abacus;
  std::int64_t m = 0;  // signed multiplicity
};

inline SigmaResult applySigma(const Abacus& a, int i) {
  auto moves = availableMoves(a, i, Direction::F);
  Direction dir = Direction::F;
  if (moves.empty()) {
    moves = availableMoves(a, i, Direction::E);
    dir = Direction::E;
  }
  if (moves.empty()) return {a, 0};
  BeadWindow w(a);
  std::int64_t total = 0;
  for (const Move& mv : moves) {
    applyMoveTo(w, mv, dir);
    total += mv.weight;
  }
  Abacus out = rebuild(a, w);
  return {out, dir == Direction::F ? total : -total};
}

using WeylWord = std::vector<int>;

inline std::string wordString(const WeylWord& w) {
  std::string s;
  for (int x : w) s += "s" + std::to_string(x);
  return s.empty() ? "e" : s;
}

struct ResiduedNode {
  std::int64_t row = 0, column = 0;
  int residue = 0;
  friend bool operator==(const ResiduedNode&, const ResiduedNode&) = default;
};

struct ResidueStep {
  int node = 0;
  std::vector<ResiduedNode> added;
  std::vector<ResiduedNode> removed;
};

struct WordResult {
  Abacus abacus;
  RootCoords tally;
  std::vector<ResidueStep> residues;
};

inline std::set<Cell> cellsOf(const Partition& p) {
  std::set<Cell> s;
  for (std::size_t r = 1; r <= p.length(); ++r)
    for (std::int64_t c = 1; c <= p.part(r); ++c) s.insert({static_cast<std::int64_t>(r), c});
  return s;
}

// Cells drawn for the residue log: the partition for whole abaci, the
// double-distinct diagram for half ones.
inline std::set<Cell> diagramCells(const Abacus& a) {
  if (a.isWhole()) return cellsOf(a.whole().lambda);
  return cellsOf(doubleDistinct(a.half(), a.context()));
}

// Rightmost letter acts first.
inline WordResult applyWord(const Abacus& start, const WeylWord& word, bool logResidues = false) {
  const auto& ctx = start.context();
  WordResult res{start, RootCoords{std::vector<std::int64_t>(ctx.rank(), 0)}, {}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (i < 0 || i > ctx.l()) throw DomainError("letter out of range");
    SigmaResult s = applySigma(res.abacus, i);
    res.tally.k[i] = checkedAdd(res.tally.k[i], s.m);
    if (logResidues) {
      const auto before = diagramCells(res.abacus);
      const auto after = diagramCells(s.abacus);
      ResidueStep step{i, {}, {}};
      for (auto c : after)
        if (!before.count(c)) step.added.push_back({c.first, c.second, i});
      for (auto c : before)
        if (!after.count(c)) step.removed.push_back({c.first, c.second, i});
      res.residues.push_back(std::move(step));
    }
    res.abacus = std::move(s.abacus);
  }
  return res;
}

// sigma_i lowers the abacus: only e-moves available.
inline bool isDescent(const Abacus& a, int i) {
  return availableMoves(a, i, Direction::F).empty() && !availableMoves(a, i, Direction::E).empty();
}

inline bool isWeightAbacus(const Abacus& a) { return a == weightAbacus(a.kind(), a.charge()); }

// Word w with applyWord(weightAbacus, w) == a.  `pick` chooses among descents.
template <class Picker>
WeylWord descentWord(const Abacus& a, Picker pick) {
  WeylWord word;
  Abacus cur = a;
  const int l = a.kind().l;
  for (std::size_t guard = 0;; ++guard) {
    if (isWeightAbacus(cur)) return word;
    std::vector<int> ds;
    for (int i = 0; i <= l; ++i)
      if (isDescent(cur, i)) ds.push_back(i);
    if (ds.empty()) throw NotACore("descent stalls at " + cur.key());
    const int i = pick(ds);
    cur = applySigma(cur, i).abacus;
    word.push_back(i);
    if (guard > 1000000) throw Inconsistency("descent does not terminate");
  }
}

inline WeylWord grassmannianWord(const Abacus& a) {
  return descentWord(a, [](const std::vector<int>& ds) { return ds.front(); });
}

inline WeylWord randomDescentWord(const Abacus& a, std::mt19937_64& rng) {
  return descentWord(a, [&](const std::vector<int>& ds) {
    std::uniform_int_distribution<std::size_t> d(0, ds.size() - 1);
    return ds[d(rng)];
  });
}

inline RootCoords betaOf(const Abacus& a) {
  WeylWord w;
  try {
    w = grassmannianWord(a);
  } catch (const NotACore& e) {
    throw NotInOrbit(std::string("not reachable from the weight abacus: ") + e.what());
  }
  return applyWord(weightAbacus(a.kind(), a.charge()), w).tally;
}

struct CoreRecord {
  Abacus abacus;
  RootCoords beta;
  WeylWord word;
};

inline bool canonicalLess(const CoreRecord& x, const CoreRecord& y) {
  const auto hx = x.beta.height(), hy = y.beta.height();
  if (hx != hy) return hx < hy;
  return x.abacus < y.abacus;
}

// BFS over the orbit; children are the sigma_i with f-moves.  The frontier is
// split across `workers` threads and merged in a fixed order.
inline std::vector<CoreRecord> enumerateCores(AffineKind kind, int j, std::int64_t maxHeight,
                                              unsigned workers = 1) {
  if (maxHeight < 0) return {};
  const auto& ctx = *contextFor(kind);
  const int l = ctx.l();
  std::vector<CoreRecord> all;
  std::unordered_set<std::string> seen;
  Abacus w0 = weightAbacus(kind, j);
  std::vector<CoreRecord> frontier{{w0, RootCoords{std::vector<std::int64_t>(ctx.rank(), 0)}, {}}};
  seen.insert(w0.key());
  workers = std::max(1u, workers);
  while (!frontier.empty()) {
    for (auto& r : frontier) all.push_back(r);
    std::vector<std::vector<CoreRecord>> buckets(frontier.size());
    auto expand = [&](std::size_t idx) {
      const CoreRecord& r = frontier[idx];
      for (int i = 0; i <= l; ++i) {
        if (availableMoves(r.abacus, i, Direction::F).empty()) continue;
        SigmaResult s = applySigma(r.abacus, i);
        RootCoords b = r.beta;
        b.k[i] += s.m;
        if (b.height() > maxHeight) continue;
        WeylWord w{i};
        w.insert(w.end(), r.word.begin(), r.word.end());
        buckets[idx].push_back({std::move(s.abacus), std::move(b), std::move(w)});
      }
    };
    if (workers == 1 || frontier.size() < 16) {
      for (std::size_t idx = 0; idx < frontier.size(); ++idx) expand(idx);
    } else {
      std::vector<std::thread> pool;
      const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(frontier.size()));
      for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t idx = t; idx < frontier.size(); idx += n) expand(idx);
        });
      for (auto& th : pool) th.join();
    }
    std::vector<CoreRecord> next;
    for (auto& bucket : buckets)
      for (auto& rec : bucket)
        if (seen.insert(rec.abacus.key()).second) next.push_back(std::move(rec));
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), canonicalLess);
  return all;
}

}  // namespace affcore
