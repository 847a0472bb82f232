#pragma once

// Largest roots lambda_n of F_n with rigorous enclosures, the lower/upper
// bounds m(n) and M(n), monotonicity, root tables, asymptotic diagnostics and
// the boundary eigenvalue mu_n.

#include "invineq/assembly.hpp"
#include "invineq/charpoly.hpp"
#include "invineq/determinant.hpp"
#include "invineq/fixed_real.hpp"
#include "invineq/identities.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"
#include "invineq/roots.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace invineq {

/// Extra bisection steps allowed when two enclosures must be separated.
inline constexpr int refinement_cap = 256;

inline Rational default_tolerance() { return make_rational(1, 1'000'000'000'000L); }

// ---- exact bound ingredients -----------------------------------------------

/// u + sqrt(v), v >= 0.
struct QuadraticSurd {
  Rational u;
  Rational v;

  FixedReal value(unsigned bits = FixedReal::default_bits) const {
    return FixedReal::from_rational(u, bits) + FixedReal::sqrt(v, bits);
  }
  /// Exact sign of (u + sqrt(v)) - x.
  int compare(const Rational& x) const {
    Rational d = x - u;  // sign of sqrt(v) - d
    if (d < 0) return 1;
    return sgn(Rational(v - d * d));
  }
};

inline Rational f_coeff_or_zero(unsigned long j, unsigned long n) {
  return j <= n / 2 ? f_coeff(j, n) : Rational(0);
}

/// m(n) = f_1/2 + sqrt(f_1^2/4 - f_2).
inline QuadraticSurd bound_m(unsigned long n) {
  if (n < 2) throw std::invalid_argument("bound_m: n must be >= 2");
  const Rational f1 = f_coeff(1, n);
  return {f1 / 2, f1 * f1 / 4 - f_coeff_or_zero(2, n)};
}

inline Rational upper_p1(unsigned long n) {
  const Rational x = static_cast<long>(n);
  const long c[] = {16200, -5130, -4733, 796, 404, 10, 8, 4, 1};
  Rational acc = 0;
  for (int i = 8; i >= 0; --i) acc = acc * x + c[i];
  return acc / 4320;
}

inline Rational upper_p2(unsigned long n) {
  const Rational x = static_cast<long>(n);
  const long c[] = {116640000, -44971200, -40140000, 9619080, 4705644, -113090, -20619,
                    10198,     -2951,     -3590,     -641,    42,      7};
  Rational acc = 0;
  for (int i = 12; i >= 0; --i) acc = acc * x + c[i];
  return (x - 3) * (x - 2) * (x + 3) * (x + 4) * acc / 597196800;
}

/// lambda^3 - f_1 lambda^2 + f_2 lambda - f_3
inline Polynomial truncated_cubic(unsigned long n) {
  return Polynomial({-f_coeff_or_zero(3, n), f_coeff_or_zero(2, n), -f_coeff_or_zero(1, n), 1});
}

/// lambda^2 - f_1 lambda + f_2
inline Polynomial truncated_quadratic(unsigned long n) {
  return Polynomial({f_coeff_or_zero(2, n), -f_coeff_or_zero(1, n), 1});
}

/// True when p and q have the same set of positive roots, certified by the
/// exact divisibilities p | x^deg(q) q and q | x^deg(p) p.
inline bool same_positive_roots(const Polynomial& p, const Polynomial& q) {
  const Polynomial xq = Polynomial::monomial(1, static_cast<std::size_t>(q.degree())) * q;
  const Polynomial xp = Polynomial::monomial(1, static_cast<std::size_t>(p.degree())) * p;
  return divides(p, xq) && divides(q, xp);
}

// ---- maximal root ----------------------------------------------------------

/// Largest real root of a polynomial with positive leading coefficient, given
/// a bracket with p(lo) <= 0 <= p(hi). The result is certified maximal by
/// Descartes' rule: p(hi + y) has no sign variation.
inline Enclosure certified_max_root(const IntCoeffs& p, Enclosure bracket, const Rational& tol) {
  const int s_lo = sign_at(p, bracket.lo);
  const int s_hi = sign_at(p, bracket.hi);
  if (s_hi < 0 || s_lo > 0) throw std::logic_error("max root bracket has no sign change");
  Enclosure e = s_hi == 0 ? Enclosure{bracket.hi, bracket.hi}
                : s_lo == 0 ? Enclosure{bracket.lo, bracket.lo}
                            : bisect(p, bracket, tol);
  if (descartes_above(p, e.hi) != 0)
    throw std::logic_error("enclosed root is not the largest root");
  return e;
}

/// lambda_n, the largest root of F_n. The bracket [lower(m(n)), f_1(n)] is
/// valid because m(n) <= lambda_n <= f_1(n); an invalid bracket throws.
inline Enclosure max_root(unsigned long n, const Rational& tol = default_tolerance()) {
  if (n < 2) throw std::invalid_argument("max_root: n must be >= 2");
  const IntCoeffs f = to_integer_poly(char_poly(n).poly);
  const QuadraticSurd m = bound_m(n);
  const Rational lower = m.u + FixedReal::sqrt(m.v, 64).to_rational();
  return certified_max_root(f, {lower, f_coeff(1, n)}, tol);
}

/// Largest real root of an arbitrary nonconstant polynomial, via Sturm isolation.
inline std::optional<Enclosure> largest_real_root(const Polynomial& p, const Rational& tol) {
  auto roots = real_roots(p, tol);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

// ---- root tables -----------------------------------------------------------

struct RootTable {
  unsigned long n = 0;
  std::vector<Enclosure> roots;  // ascending
  std::size_t count = 0;
};

/// All floor(n/2) roots of F_n by Sturm isolation; a different count means
/// F_n is not real-rooted with simple roots and throws std::logic_error.
inline RootTable all_roots(unsigned long n, const Rational& tol = default_tolerance()) {
  if (n < 2) throw std::invalid_argument("all_roots: n must be >= 2");
  const Polynomial f = char_poly(n).poly;
  RootTable t{n, real_roots(f, tol), 0};
  t.count = t.roots.size();
  if (t.count != n / 2) throw std::logic_error("Sturm count differs from floor(n/2)");
  for (const auto& e : t.roots)
    if (!(e.lo > 0)) throw std::logic_error("nonpositive root of F_n");
  return t;
}

/// Smallest root of F_m (m >= 2) by Descartes isolation from the left.
inline Enclosure smallest_root(unsigned long m, const Rational& tol = default_tolerance()) {
  if (m < 2) throw std::invalid_argument("smallest_root: m must be >= 2");
  const IntCoeffs f = to_integer_poly(char_poly(m).poly);
  const Rational upper = f_coeff(1, m) + 1;  // lambda_m <= f_1(m)
  std::optional<Enclosure> found;
  std::function<bool(const Rational&, const Rational&)> walk = [&](const Rational& a, const Rational& b) {
    const int v = descartes_between(f, a, b);
    if (v == 0) return true;
    if (v == 1) {
      found = Enclosure{a, b};
      return false;
    }
    Rational mid = detail::split_point(f, a, b);
    return walk(a, mid) && walk(mid, b);
  };
  walk(0, upper);
  if (!found) throw std::logic_error("F_m has no positive root");
  return bisect(f, *found, tol);
}

// ---- bound report ----------------------------------------------------------

enum class Relation { less, equal, greater, undecided };

inline std::string_view name(Relation r) {
  switch (r) {
    case Relation::less: return "less";
    case Relation::equal: return "equal";
    case Relation::greater: return "greater";
    case Relation::undecided: return "undecided";
  }
  return "?";
}

struct UpperCubic {
  Rational p1;
  Rational p2;
  Polynomial cubic;
  Enclosure largest_root;           // certified M(n)
  std::optional<FixedReal> cardano;  // closed form, evaluated when p2 >= 0
};

/// M(n): the largest real root of the cubic truncation of F_n, certified by
/// bisection. The closed form with real cube roots is evaluated alongside
/// whenever p_2(n) >= 0.
inline UpperCubic bound_M(unsigned long n, const Rational& tol = default_tolerance(),
                          unsigned bits = FixedReal::default_bits) {
  if (n < 2) throw std::invalid_argument("bound_M: n must be >= 2");
  UpperCubic r;
  r.p1 = upper_p1(n);
  r.p2 = upper_p2(n);
  r.cubic = truncated_cubic(n);
  const Rational f1 = f_coeff(1, n);
  // Largest cubic root lies in [f1/2, f1]: same argument as for F_n.
  r.largest_root = certified_max_root(to_integer_poly(r.cubic), {f1 / 2, f1}, tol);
  if (r.p2 >= 0) {
    const unsigned work = 2 * bits;
    const FixedReal base = FixedReal::from_rational(f1 * r.p1, work);
    const FixedReal spread = FixedReal::sqrt(f1 * f1 * r.p2, work);
    FixedReal value = FixedReal::from_rational(f1 / 3, work) +
                      FixedReal::cbrt((base + spread).to_rational(), work) +
                      FixedReal::cbrt((base - spread).to_rational(), work);
    r.cardano = FixedReal::from_rational(value.to_rational(), bits);
  }
  return r;
}

struct BoundReport {
  unsigned long n = 0;
  QuadraticSurd m;
  FixedReal m_lower;  // m(n), rounded down
  Rational f1;
  UpperCubic M;
  FixedReal M_upper;  // upper end of the M(n) enclosure, rounded down
  Enclosure lambda;
  Relation m_vs_lambda = Relation::undecided;
  Relation lambda_vs_f1 = Relation::undecided;
  Relation lambda_vs_M = Relation::undecided;

  bool undecided() const {
    return m_vs_lambda == Relation::undecided || lambda_vs_f1 == Relation::undecided ||
           lambda_vs_M == Relation::undecided;
  }
  /// Orderings with the known strictness thresholds: m < lambda for n >= 6,
  /// lambda < f_1 for n >= 4, lambda < M for n >= 8, lambda = M for n <= 7.
  bool ok() const {
    auto le = [](Relation r) { return r == Relation::less || r == Relation::equal; };
    if (!le(m_vs_lambda) || !le(lambda_vs_f1) || !le(lambda_vs_M)) return false;
    if (n >= 6 && m_vs_lambda != Relation::less) return false;
    if (n >= 4 && lambda_vs_f1 != Relation::less) return false;
    if (n >= 8 && lambda_vs_M != Relation::less) return false;
    if (n <= 7 && lambda_vs_M != Relation::equal) return false;
    return true;
  }
};

inline BoundReport compute_bounds(unsigned long n, const Rational& tol = default_tolerance(),
                                  unsigned bits = FixedReal::default_bits) {
  BoundReport r;
  r.n = n;
  r.m = bound_m(n);
  r.m_lower = r.m.value(bits);
  r.f1 = f_coeff(1, n);
  r.M = bound_M(n, tol, bits);
  r.M_upper = FixedReal::from_rational(r.M.largest_root.hi, bits);
  r.lambda = max_root(n, tol);

  const Polynomial fn = char_poly(n).poly;
  const IntCoeffs f = to_integer_poly(fn);
  const IntCoeffs cubic = to_integer_poly(r.M.cubic);
  Enclosure& lam = r.lambda;
  Enclosure& big_m = r.M.largest_root;

  // m(n) vs lambda_n
  if (same_positive_roots(fn, truncated_quadratic(n))) {
    r.m_vs_lambda = Relation::equal;
  } else {
    for (int step = 0; step <= refinement_cap; step += 8) {
      if (r.m.compare(lam.lo) < 0) {
        r.m_vs_lambda = Relation::less;
        break;
      }
      if (r.m.compare(lam.hi) > 0) {
        r.m_vs_lambda = Relation::greater;
        break;
      }
      if (lam.exact()) {
        r.m_vs_lambda = r.m.compare(lam.lo) == 0 ? Relation::equal : Relation::undecided;
        break;
      }
      lam = bisect(f, lam, 0, 8);
    }
  }

  // lambda_n vs f_1(n)
  if (lam.exact() && lam.lo == r.f1) r.lambda_vs_f1 = Relation::equal;
  else if (lam.hi < r.f1) r.lambda_vs_f1 = Relation::less;
  else if (r.f1 < lam.lo) r.lambda_vs_f1 = Relation::greater;
  else if (lam.hi == r.f1 && sign_at(f, r.f1) != 0) r.lambda_vs_f1 = Relation::less;

  // lambda_n vs M(n)
  if (same_positive_roots(fn, r.M.cubic)) {
    r.lambda_vs_M = Relation::equal;
  } else {
    for (int step = 0; step <= refinement_cap; step += 8) {
      if (lam.hi < big_m.lo) {
        r.lambda_vs_M = Relation::less;
        break;
      }
      if (big_m.hi < lam.lo) {
        r.lambda_vs_M = Relation::greater;
        break;
      }
      if (lam.exact() && big_m.exact()) {
        r.lambda_vs_M = Relation::equal;
        break;
      }
      lam = bisect(f, lam, 0, 8);
      big_m = bisect(cubic, big_m, 0, 8);
    }
  }
  r.M_upper = FixedReal::from_rational(big_m.hi, bits);
  return r;
}

// ---- monotonicity and the comparison lemma ---------------------------------

struct MonotoneReport {
  bool ok = false;
  std::vector<unsigned long> undecided;  // n with lambda_n, lambda_{n+1} not separated
  std::vector<unsigned long> violations;  // n with lambda_{n+1} < lambda_n
  std::vector<Enclosure> enclosures;      // enclosures[k] for n = k + 2
};

/// lambda_{n+1} > lambda_n for 2 <= n < n_max, by disjoint enclosures.
inline MonotoneReport check_monotone(unsigned long n_max, const Rational& tol = default_tolerance()) {
  if (n_max < 3) throw std::invalid_argument("check_monotone: n_max must be >= 3");
  MonotoneReport r;
  std::vector<IntCoeffs> polys;
  for (unsigned long n = 2; n <= n_max; ++n) {
    polys.push_back(to_integer_poly(char_poly(n).poly));
    r.enclosures.push_back(max_root(n, tol));
  }
  for (std::size_t k = 0; k + 1 < r.enclosures.size(); ++k) {
    Enclosure& a = r.enclosures[k];
    Enclosure& b = r.enclosures[k + 1];
    bool decided = false;
    for (int step = 0; step <= refinement_cap; step += 8) {
      if (a.hi < b.lo) {
        decided = true;
        break;
      }
      if (b.hi < a.lo || (a.exact() && b.exact())) {
        r.violations.push_back(k + 2);
        decided = true;
        break;
      }
      a = bisect(polys[k], a, 0, 8);
      b = bisect(polys[k + 1], b, 0, 8);
    }
    if (!decided) r.undecided.push_back(k + 2);
  }
  r.ok = r.undecided.empty() && r.violations.empty();
  return r;
}

enum class Verdict { holds, fails, undecided };

inline std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

/// F_{n+1}(lambda_n) < 0: F_{n+1} is negative at both ends of the lambda_n
/// enclosure and has no root inside it.
inline Verdict comparison_lemma_check(unsigned long n, const Rational& tol = default_tolerance()) {
  Enclosure e = max_root(n, tol);
  const IntCoeffs f = to_integer_poly(char_poly(n).poly);
  const IntCoeffs next = to_integer_poly(char_poly(n + 1).poly);
  for (int step = 0; step <= refinement_cap; step += 8) {
    if (e.exact()) {
      const int s = sign_at(next, e.lo);
      return s < 0 ? Verdict::holds : Verdict::fails;
    }
    const int s_lo = sign_at(next, e.lo);
    const int s_hi = sign_at(next, e.hi);
    if (s_lo == s_hi && s_lo != 0 && descartes_between(next, e.lo, e.hi) == 0)
      return s_lo < 0 ? Verdict::holds : Verdict::fails;
    e = bisect(f, e, 0, 8);
  }
  return Verdict::undecided;
}

// ---- inverse-inequality constant -------------------------------------------

struct C1HatReport {
  unsigned long n = 0;
  Enclosure lambda;
  FixedReal c1_lo;  // sqrt(lambda.lo), rounded down
  FixedReal c1_hi;  // sqrt(lambda.hi), rounded up
  FixedReal window_lo;  // sqrt(f1/2) = sqrt(n(n-1)(n+1)(n+2))/4
  FixedReal window_hi;  // sqrt(f1)   = sqrt(n(n-1)(n+1)(n+2))/(2 sqrt 2)
  bool sandwich = false;  // f1/2 <= lambda_n <= f1, exactly
};

inline C1HatReport c1_hat(unsigned long n, const Rational& tol = default_tolerance(),
                          unsigned bits = FixedReal::default_bits) {
  C1HatReport r;
  r.n = n;
  r.lambda = max_root(n, tol);
  const Rational f1 = f_coeff(1, n);
  r.c1_lo = FixedReal::sqrt(r.lambda.lo, bits);
  FixedReal hi = FixedReal::sqrt(r.lambda.hi, bits);
  if (hi.to_rational() * hi.to_rational() != r.lambda.hi) hi = hi + FixedReal::from_rational(pow2(-static_cast<long>(bits)), bits);
  r.c1_hi = hi;
  r.window_lo = FixedReal::sqrt(f1 / 2, bits);
  r.window_hi = FixedReal::sqrt(f1, bits);
  r.sandwich = f1 / 2 <= r.lambda.lo && r.lambda.hi <= f1;
  return r;
}

// ---- boundary eigenvalue ---------------------------------------------------

/// Largest eigenvalue of the boundary problem: n(n+3)/2, plus 1 for odd n.
inline Rational mu_max(unsigned long n) {
  if (n == 0) throw std::invalid_argument("mu_max: n must be positive");
  const long nl = static_cast<long>(n);
  return make_rational(nl * (nl + 3), 2) + (n % 2 ? 1 : 0);
}

struct BoundaryResult {
  unsigned long n = 0;
  Polynomial determinant;      // det C_n, computed
  Rational largest_root;       // certified
  Rational closed_form;        // mu_max(n)
  bool equal = false;
};

/// Largest root of the computed det C_n. Candidates are read off the factored
/// closed form, confirmed as exact roots, and certified maximal by Descartes.
inline BoundaryResult boundary_largest_root(unsigned long n) {
  if (n == 0) throw std::invalid_argument("boundary_largest_root: n must be positive");
  BoundaryResult r;
  r.n = n;
  r.determinant = det_poly(build_boundary(BoundaryVariant::full, n));
  const long lo = static_cast<long>(n / 2), hi = static_cast<long>((n + 1) / 2);
  std::vector<Rational> candidates = {0, Rational(2 * lo * lo + 3 * lo), Rational(2 * hi * hi + hi)};
  std::sort(candidates.begin(), candidates.end());
  const IntCoeffs p = to_integer_poly(r.determinant);
  bool found = false;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (r.determinant(*it) != 0) continue;
    if (descartes_above(p, *it) != 0) throw std::logic_error("det C_n has a root above the candidates");
    r.largest_root = *it;
    found = true;
    break;
  }
  if (!found) throw std::logic_error("no candidate root of det C_n");
  r.closed_form = mu_max(n);
  r.equal = r.largest_root == r.closed_form;
  return r;
}

// ---- asymptotics -----------------------------------------------------------

struct AsymptoticTargets {
  FixedReal inv_pi2;      // 1/pi^2, limit of lambda_n / n^4
  FixedReal eight_pi2;    // 8/pi^2, limit of lambda_n / f_1(n)
  FixedReal pi2_quarter;  // pi^2/4, limit of the smallest root of F_{2k}
  FixedReal pi2;          // pi^2,   limit of the smallest root of F_{2k+1}
};

inline AsymptoticTargets asymptotic_targets(unsigned bits = FixedReal::default_bits) {
  const FixedReal pi = FixedReal::pi(bits + 16);
  const Rational pi2 = pi.to_rational() * pi.to_rational();
  return {FixedReal::from_rational(1 / pi2, bits), FixedReal::from_rational(8 / pi2, bits),
          FixedReal::from_rational(pi2 / 4, bits), FixedReal::from_rational(pi2, bits)};
}

struct AsymptoticRow {
  unsigned long n = 0;
  Enclosure lambda;
  Enclosure smallest_even;  // smallest root of F_{2 floor(n/2)}
  Enclosure smallest_odd;   // smallest root of F_{2 floor(n/2) + 1}
  FixedReal lambda_over_n4;
  FixedReal lambda_over_f1;
  FixedReal smallest_root_even;
  FixedReal smallest_root_odd;
  AsymptoticTargets targets;
};

inline AsymptoticRow asymptotic_row(unsigned long n, const Rational& tol = default_tolerance(),
                                    unsigned bits = FixedReal::default_bits) {
  if (n < 2) throw std::invalid_argument("asymptotic_row: n must be >= 2");
  AsymptoticRow r;
  r.n = n;
  r.lambda = max_root(n, tol);
  r.smallest_even = smallest_root(2 * (n / 2), tol);
  r.smallest_odd = smallest_root(2 * (n / 2) + 1, tol);
  const Rational mid = r.lambda.midpoint();
  r.lambda_over_n4 = FixedReal::from_rational(mid / Rational(ipow(static_cast<unsigned long>(n), 4)), bits);
  r.lambda_over_f1 = FixedReal::from_rational(mid / f_coeff(1, n), bits);
  r.smallest_root_even = FixedReal::from_rational(r.smallest_even.midpoint(), bits);
  r.smallest_root_odd = FixedReal::from_rational(r.smallest_odd.midpoint(), bits);
  r.targets = asymptotic_targets(bits);
  return r;
}

inline std::vector<AsymptoticRow> asymptotic_table(const std::vector<unsigned long>& ns,
                                                   const Rational& tol = default_tolerance(),
                                                   unsigned bits = FixedReal::default_bits) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(ns.size());
  for (unsigned long n : ns) rows.push_back(asymptotic_row(n, tol, bits));
  return rows;
}

// ---- certified convergence -------------------------------------------------

/// Interval containing pi^2, from pi to within 2^-bits.
inline Enclosure pi_squared_interval(unsigned bits) {
  const Rational p = FixedReal::pi(bits).to_rational();
  const Rational eps = pow2(-static_cast<long>(bits));
  return {(p - eps) * (p - eps), (p + eps) * (p + eps)};
}

/// Interval containing |x - t| for x in a and t in b.
inline Enclosure distance(const Enclosure& a, const Enclosure& b) {
  Rational lo = 0;
  if (b.hi < a.lo) lo = a.lo - b.hi;
  else if (a.hi < b.lo) lo = b.lo - a.hi;
  Rational hi = std::max(Rational(a.hi - b.lo), Rational(b.hi - a.lo));
  return {lo, hi};
}

inline Enclosure scale(const Enclosure& e, const Rational& c) {
  return c >= 0 ? Enclosure{e.lo * c, e.hi * c} : Enclosure{e.hi * c, e.lo * c};
}

/// Verdict on d_0 > d_1 > ... for distance intervals: holds when every upper
/// bound is below its predecessor's lower bound, fails when some d_{k+1} >= d_k
/// is certain.
inline Verdict strictly_decreasing(const std::vector<Enclosure>& d) {
  bool all = true;
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    if (d[k + 1].hi < d[k].lo) continue;
    if (d[k + 1].lo >= d[k].hi) return Verdict::fails;
    all = false;
  }
  return all ? Verdict::holds : Verdict::undecided;
}

struct ApproachReport {
  Verdict verdict = Verdict::undecided;
  unsigned bits = 0;                // precision at which the verdict was reached
  std::vector<Enclosure> distances;  // certified |value_k - target|
};

/// Precision ladder for the convergence checks, doubling from 128 bits.
inline constexpr unsigned approach_max_bits = 4096;

/// |r(k) - c pi^2| strictly decreasing along ks, where r(k) is the smallest
/// root of F_{2k} (c = 1/4) or F_{2k+1} (c = 1). The roots converge
/// super-exponentially, so enclosures and pi are refined until decided.
inline ApproachReport smallest_root_approach(Parity parity, const std::vector<unsigned long>& ks) {
  ApproachReport r;
  const Rational c = parity == Parity::even ? make_rational(1, 4) : Rational(1);
  for (unsigned bits = 128; bits <= approach_max_bits; bits *= 2) {
    const Enclosure target = scale(pi_squared_interval(bits + 8), c);
    r.distances.clear();
    for (unsigned long k : ks) {
      const unsigned long m = parity == Parity::even ? 2 * k : 2 * k + 1;
      r.distances.push_back(distance(smallest_root(m, pow2(-static_cast<long>(bits))), target));
    }
    r.bits = bits;
    r.verdict = strictly_decreasing(r.distances);
    if (r.verdict != Verdict::undecided) break;
  }
  return r;
}

/// |lambda_n / n^4 - 1/pi^2| strictly decreasing along ns.
inline ApproachReport lambda_n4_approach(const std::vector<unsigned long>& ns) {
  ApproachReport r;
  for (unsigned bits = 128; bits <= approach_max_bits; bits *= 2) {
    const Enclosure p2 = pi_squared_interval(bits + 8);
    const Enclosure target{1 / p2.hi, 1 / p2.lo};
    r.distances.clear();
    for (unsigned long n : ns) {
      const Rational n4 = Rational(ipow(static_cast<unsigned long>(n), 4));
      r.distances.push_back(distance(scale(max_root(n, pow2(-static_cast<long>(bits))), 1 / n4), target));
    }
    r.bits = bits;
    r.verdict = strictly_decreasing(r.distances);
    if (r.verdict != Verdict::undecided) break;
  }
  return r;
}

}  // namespace invineq
