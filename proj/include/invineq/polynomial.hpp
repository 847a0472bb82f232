#pragma once

#include "invineq/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace invineq {

/// Dense univariate polynomial over Q. coefficient(i) multiplies x^i; the
/// coefficient vector never ends in a zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const Rational& constant) {  // NOLINT: implicit scalar embedding
    if (constant != 0) c_.push_back(constant);
  }
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial monomial(const Rational& coeff, std::size_t power) {
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(1, 1); }
  /// a + b x
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const Rational> coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  /// p(x + shift)
  Polynomial shifted(const Rational& shift) const {
    std::vector<Rational> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += shift * a[j];
    return Polynomial(std::move(a));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivisionResult divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
  const int dd = den.degree();
  const Rational lead = den.leading();
  if (num.degree() < dd) return {{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * den.coefficient(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline bool divides(const Polynomial& d, const Polynomial& p) {
  return divide(p, d).remainder.is_zero();
}

/// Unique polynomial of degree < points.size() through the given points,
/// by Newton divided differences. Throws std::invalid_argument on a repeated
/// abscissa.
inline Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational gap = points[i].first - points[i - level].first;
      if (gap == 0) throw std::invalid_argument("interpolate: duplicate abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Horner on the Newton form.
  Polynomial result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Polynomial::linear(-points[k].first, 1) + Polynomial(dd[k]);
  }
  return result;
}

}  // namespace invineq
