#pragma once

// Certified real-root machinery over exact rationals.
//
// Every sign used for a decision is the exact sign of an integer expression.
// Two counting tools are provided: Sturm chains (exact count of distinct roots
// in (a, b]) and Descartes' rule of signs after a Moebius/Taylor transform
// (an upper bound, exact when the bound is 0 or 1).

#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace invineq {

/// Integer polynomial, coefficient i multiplies x^i, no trailing zeros.
using IntCoeffs = std::vector<Integer>;

namespace detail {

inline void trim(IntCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline void make_primitive(IntCoeffs& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline int sign_variations(const IntCoeffs& c) {
  int changes = 0, last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Positive multiple of p with coprime integer coefficients.
inline IntCoeffs to_integer_poly(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntCoeffs out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
  detail::make_primitive(out);
  return out;
}

/// Exact sign of p(x).
inline int sign_at(const IntCoeffs& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = p.back();
  Integer bpow = b;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    acc *= a;
    acc += p[i] * bpow;
    if (i > 0) bpow *= b;
  }
  return sgn(acc);
}

/// Coefficients (in y) of b^d p((a + s*y) / b), d = deg p. For b, s > 0 the
/// roots y > 0 correspond one-to-one with roots x > a/b of p.
inline IntCoeffs compose_linear(const IntCoeffs& p, const Integer& a, const Integer& b, const Integer& s) {
  if (p.empty()) return {};
  IntCoeffs acc{p.back()};
  Integer bpow = b;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    IntCoeffs next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += a * acc[k];
      next[k + 1] += s * acc[k];
    }
    next[0] += p[i] * bpow;
    acc = std::move(next);
    bpow *= b;
  }
  detail::trim(acc);
  return acc;
}

/// Descartes bound on the number of roots of p in (x, +inf).
inline int descartes_above(const IntCoeffs& p, const Rational& x) {
  return detail::sign_variations(compose_linear(p, x.get_num(), x.get_den(), x.get_den()));
}

/// Descartes bound on the number of roots of p in the open interval (lo, hi).
inline int descartes_between(const IntCoeffs& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("descartes_between: empty interval");
  // common denominator: lo = a/b, hi = c/b
  Integer b;
  mpz_lcm(b.get_mpz_t(), lo.get_den_mpz_t(), hi.get_den_mpz_t());
  Integer a = lo.get_num() * (b / lo.get_den());
  Integer c = hi.get_num() * (b / hi.get_den());
  // r(t) = b^d p(lo + (hi - lo) t), then (1+y)^d r(1/(1+y)): reverse, shift by 1.
  IntCoeffs r = compose_linear(p, a, b, c - a);
  r.resize(p.size());
  std::reverse(r.begin(), r.end());
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) r[j - 1] += r[j];
  return detail::sign_variations(r);
}

/// Closed interval [lo, hi] certified to contain a root; lo == hi means the
/// root is the rational lo itself.
struct Enclosure {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool intersects(const Enclosure& o) const { return !(hi < o.lo || o.hi < lo); }
};

/// Bisects a sign-change bracket of p until its width is at most tol or a
/// midpoint is an exact root. Requires sign_at(p, lo) * sign_at(p, hi) < 0
/// for a non-exact input.
inline Enclosure bisect(const IntCoeffs& p, Enclosure e, const Rational& tol, int max_steps = -1) {
  if (e.exact()) return e;
  const int s_lo = sign_at(p, e.lo);
  const int s_hi = sign_at(p, e.hi);
  if (s_lo == 0) return {e.lo, e.lo};
  if (s_hi == 0) return {e.hi, e.hi};
  if (s_lo == s_hi) throw std::logic_error("bisect: no sign change on bracket");
  for (int step = 0; e.width() > tol && step != max_steps; ++step) {
    Rational mid = e.midpoint();
    const int s = sign_at(p, mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) e.lo = std::move(mid);
    else e.hi = std::move(mid);
  }
  return e;
}

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), kept primitive.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(to_integer_poly(p));
    if (p.degree() == 0) return;
    chain_.push_back(to_integer_poly(p.derivative()));
    while (true) {
      IntCoeffs r = pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      detail::make_primitive(r);
      chain_.push_back(std::move(r));
    }
  }

  const std::vector<IntCoeffs>& chain() const { return chain_; }

  /// Squarefree part of p: p divided by the last chain element.
  Polynomial squarefree_part() const {
    auto as_poly = [](const IntCoeffs& c) {
      std::vector<Rational> q(c.begin(), c.end());
      return Polynomial(std::move(q));
    };
    return divide(as_poly(chain_.front()), as_poly(chain_.back())).quotient;
  }

  int variations_at(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
      const int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  int variations_at_infinity(bool positive) const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sgn(q.back());
      if (!positive && (q.size() - 1) % 2 == 1) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }
  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  // r with lc(b)^k a = q b + r, sign-corrected so the multiplier is positive.
  static IntCoeffs pseudo_remainder(const IntCoeffs& a, const IntCoeffs& b) {
    IntCoeffs r = a;
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    bool negative_multiplier = false;
    while (!r.empty() && r.size() - 1 >= db) {
      const std::size_t shift = r.size() - 1 - db;
      Integer lr = r.back();
      for (auto& c : r) c *= lb;
      for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= lr * b[k];
      if (lb < 0) negative_multiplier = !negative_multiplier;
      detail::trim(r);
      detail::make_primitive(r);  // positive rescaling keeps the sign
    }
    if (negative_multiplier)
      for (auto& c : r) c = -c;
    return r;
  }

  std::vector<IntCoeffs> chain_;
};

/// Cauchy bound: every real root lies strictly inside (-B, B).
inline Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficient(static_cast<std::size_t>(i))) / lead));
  return m + 1;
}

namespace detail {

// A point in (a, b) at which the squarefree polynomial sf does not vanish.
inline Rational split_point(const IntCoeffs& sf, const Rational& a, const Rational& b) {
  for (long k = 2;; ++k) {
    Rational mid = a + (b - a) * make_rational(k / 2, k);  // 1/2, 1/3, 2/4, 2/5, ...
    if (mid > a && mid < b && sign_at(sf, mid) != 0) return mid;
  }
}

}  // namespace detail

/// All distinct real roots of p, isolated by Sturm counting and refined by
/// bisection to width <= tol, in ascending order.
inline std::vector<Enclosure> real_roots(const Polynomial& p, const Rational& tol) {
  if (p.degree() < 1) return {};
  const SturmChain sturm(p);
  const IntCoeffs sf = to_integer_poly(sturm.squarefree_part());
  const Rational bound = cauchy_bound(p);

  std::vector<Enclosure> isolated;
  std::function<void(const Rational&, const Rational&, int)> isolate =
      [&](const Rational& a, const Rational& b, int count) {
        if (count == 0) return;
        if (count == 1) {
          isolated.push_back({a, b});
          return;
        }
        Rational mid = detail::split_point(sf, a, b);
        const int left = sturm.count(a, mid);
        isolate(a, mid, left);
        isolate(mid, b, count - left);
      };
  isolate(-bound, bound, sturm.count(-bound, bound));

  std::vector<Enclosure> out;
  out.reserve(isolated.size());
  for (auto& e : isolated) out.push_back(bisect(sf, e, tol));
  return out;
}

/// Ascending isolating intervals of the roots of the squarefree integer
/// polynomial p inside (lo, hi), found by Descartes bisection. The callback
/// returns false to stop the search early (leftmost first).
inline void descartes_isolate(const IntCoeffs& p, const Rational& lo, const Rational& hi,
                              const std::function<bool(const Enclosure&)>& visit) {
  std::function<bool(const Rational&, const Rational&)> walk = [&](const Rational& a, const Rational& b) {
    const int v = descartes_between(p, a, b);
    if (v == 0) return true;
    if (v == 1) return visit({a, b});
    Rational mid = detail::split_point(p, a, b);
    if (!walk(a, mid)) return false;
    return walk(mid, b);
  };
  walk(lo, hi);
}

}  // namespace invineq
