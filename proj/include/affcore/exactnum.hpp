#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "affcore/errors.hpp"

namespace affcore {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num) / Rational(den);
}

inline bool isInteger(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::optional<std::int64_t> toInt64(const Rational& r) {
  if (!isInteger(r)) return std::nullopt;
  const BigInt n = boost::multiprecision::numerator(r);
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) return std::nullopt;
  return static_cast<std::int64_t>(n);
}

inline std::string str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (!isInteger(r)) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

// a + b*sqrt(2) with a, b rational.
class Quad2 {
 public:
  Quad2() = default;
  Quad2(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}
  Quad2(std::int64_t a) : a_(a) {}
  Quad2(int a) : a_(a) {}

  static Quad2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rationalPart() const { return a_; }
  const Rational& surdPart() const { return b_; }
  // plotting only
  double toDouble() const { return a_.convert_to<double>() + b_.convert_to<double>() * 1.4142135623730951; }

  bool isZero() const { return a_ == 0 && b_ == 0; }
  Quad2 conjugate() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

  // Exact sign of a + b*sqrt(2).
  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2b^2
    const Rational lhs = a_ * a_;
    const Rational rhs = 2 * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  Quad2& operator+=(const Quad2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Quad2& operator-=(const Quad2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Quad2& operator*=(const Quad2& o) {
    Rational na = a_ * o.a_ + 2 * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Quad2& operator/=(const Quad2& o) {
    const Rational n = o.norm();
    if (n == 0) throw DomainError("division by zero in Q(sqrt2)");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend Quad2 operator+(Quad2 x, const Quad2& y) { return x += y; }
  friend Quad2 operator-(Quad2 x, const Quad2& y) { return x -= y; }
  friend Quad2 operator*(Quad2 x, const Quad2& y) { return x *= y; }
  friend Quad2 operator/(Quad2 x, const Quad2& y) { return x /= y; }
  friend Quad2 operator-(const Quad2& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const Quad2& x, const Quad2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const {
    if (b_ == 0) return affcore::str(a_);
    std::string s;
    if (a_ != 0) s = affcore::str(a_) + (b_ > 0 ? "+" : "-");
    else if (b_ < 0) s = "-";
    Rational mag = b_ < 0 ? Rational(-b_) : b_;
    if (mag != 1) s += affcore::str(mag) + "*";
    return s + "sqrt2";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Quad2& q) { return os << q.str(); }

inline std::optional<BigInt> isRationalInteger(const Quad2& x) {
  if (x.surdPart() != 0 || !isInteger(x.rationalPart())) return std::nullopt;
  return boost::multiprecision::numerator(x.rationalPart());
}

inline std::optional<Rational> isRational(const Quad2& x) {
  if (x.surdPart() != 0) return std::nullopt;
  return x.rationalPart();
}

using QVector = std::vector<Quad2>;

inline void requireSameLength(const QVector& x, const QVector& y) {
  if (x.size() != y.size())
    throw DimensionError("vector lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
}

inline Quad2 innerProduct(const QVector& x, const QVector& y) {
  requireSameLength(x, y);
  Quad2 s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline QVector operator+(QVector x, const QVector& y) {
  requireSameLength(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}
inline QVector operator-(QVector x, const QVector& y) {
  requireSameLength(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}
inline QVector operator*(const Quad2& s, QVector x) {
  for (auto& v : x) v *= s;
  return x;
}
inline QVector operator-(QVector x) {
  for (auto& v : x) v = -v;
  return x;
}

inline QVector zeroVector(std::size_t n) { return QVector(n, Quad2{}); }

inline QVector unitVector(std::size_t n, std::size_t i, const Quad2& scale = Quad2(1)) {
  QVector v = zeroVector(n);
  v.at(i) = scale;
  return v;
}

inline QVector toQVector(const std::vector<Rational>& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& r : v) out.emplace_back(r);
  return out;
}

inline std::string str(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// Square matrix over Q(sqrt2), row major.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), m_(n * n) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quad2(1);
    return m;
  }
  // Columns given as vectors.
  static QMatrix fromColumns(const std::vector<QVector>& cols) {
    QMatrix m(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != cols.size()) throw DimensionError("non-square column set");
      for (std::size_t r = 0; r < cols.size(); ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t size() const { return n_; }
  Quad2& operator()(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }
  const Quad2& operator()(std::size_t r, std::size_t c) const { return m_[r * n_ + c]; }

  QVector apply(const QVector& v) const {
    if (v.size() != n_) throw DimensionError("matrix/vector size");
    QVector out = zeroVector(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (!m_[r * n_ + c].isZero()) out[r] += m_[r * n_ + c] * v[c];
    return out;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("matrix sizes");
    QMatrix out(a.n_);
    for (std::size_t r = 0; r < a.n_; ++r)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const Quad2& x = a(r, k);
        if (x.isZero()) continue;
        for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

  bool isIdentity() const { return *this == identity(n_); }

  // Solves M x = b by Gauss-Jordan elimination; throws if singular.
  QVector solve(const QVector& b) const {
    if (b.size() != n_) throw DimensionError("rhs size");
    std::vector<QVector> aug(n_, QVector(n_ + 1));
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) aug[r][c] = (*this)(r, c);
      aug[r][n_] = b[r];
    }
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && aug[piv][col].isZero()) ++piv;
      if (piv == n_) throw DomainError("singular matrix");
      std::swap(aug[piv], aug[col]);
      const Quad2 inv = Quad2(1) / aug[col][col];
      for (auto& x : aug[col]) x *= inv;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || aug[r][col].isZero()) continue;
        const Quad2 f = aug[r][col];
        for (std::size_t c = col; c <= n_; ++c) aug[r][c] -= f * aug[col][c];
      }
    }
    QVector x(n_);
    for (std::size_t r = 0; r < n_; ++r) x[r] = aug[r][n_];
    return x;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Quad2> m_;
};

// Solves an integer/rational square system exactly.
inline std::vector<Rational> solveRational(std::vector<std::vector<Rational>> a,
                                           std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("singular rational system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Overflow-checked 64-bit helpers for combinatorial counters.
inline std::int64_t checkedAdd(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 overflow");
  return r;
}
inline std::int64_t checkedMul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 overflow");
  return r;
}

}  // namespace affcore
