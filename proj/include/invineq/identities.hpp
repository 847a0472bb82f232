#pragma once

// Exact checks of the closed-form determinant evaluations at concrete sizes.
// Every check computes the determinant independently (det_poly / det_rational)
// and compares it with the closed form as an exact polynomial identity.

#include "invineq/assembly.hpp"
#include "invineq/charpoly.hpp"
#include "invineq/determinant.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"

#include <stdexcept>
#include <string_view>

namespace invineq {

enum class Identity {
  thm31_parity0,
  thm31_parity1,
  corollary_full,
  cauchy_0,
  cauchy_1,
  boundary_0,
  boundary_1,
  boundary_full,
  legendre_0,
  legendre_1,
};

inline std::string_view name(Identity id) {
  switch (id) {
    case Identity::thm31_parity0: return "thm31-parity0";
    case Identity::thm31_parity1: return "thm31-parity1";
    case Identity::corollary_full: return "corollary-full";
    case Identity::cauchy_0: return "cauchy-0";
    case Identity::cauchy_1: return "cauchy-1";
    case Identity::boundary_0: return "boundary-0";
    case Identity::boundary_1: return "boundary-1";
    case Identity::boundary_full: return "boundary-full";
    case Identity::legendre_0: return "legendre-0";
    case Identity::legendre_1: return "legendre-1";
  }
  return "?";
}

struct DetReport {
  unsigned long n = 0;
  Identity identity = Identity::thm31_parity0;
  Polynomial lhs;  // computed determinant
  Polynomial rhs;  // closed form
  bool equal = false;
};

inline DetReport make_report(unsigned long n, Identity id, Polynomial lhs, Polynomial rhs) {
  const bool eq = lhs == rhs;
  return {n, id, std::move(lhs), std::move(rhs), eq};
}

inline Rational sign_pow(unsigned long n) { return n % 2 ? Rational(-1) : Rational(1); }

// ---- closed forms -----------------------------------------------------------

/// (-1)^n h^(0)_n F_{2n}, resp. (-1)^n h^(1)_n lambda F_{2n-1} (n >= 1).
inline Polynomial parity_block_closed_form(Parity parity, unsigned long n) {
  if (parity == Parity::even) return char_poly(2 * n).poly * (sign_pow(n) * h_constant(parity, n));
  if (n == 0) throw std::invalid_argument("odd parity block closed form needs n >= 1");
  return Polynomial::x() * char_poly(2 * n - 1).poly * (sign_pow(n) * h_constant(parity, n));
}

/// (-2)^n h^(0)_{floor(n/2)} h^(1)_{ceil(n/2)} lambda F_{n-1} F_n, n >= 1.
inline Polynomial pencil_closed_form(unsigned long n) {
  if (n == 0) throw std::invalid_argument("pencil closed form needs n >= 1");
  Rational c = sign_pow(n) * pow2(static_cast<long>(n)) * h_constant(Parity::even, n / 2) *
               h_constant(Parity::odd, (n + 1) / 2);
  return Polynomial::x() * char_poly(n - 1).poly * char_poly(n).poly * c;
}

/// Closed forms of det C^(0)_n, det C^(1)_n and det C_n. Negative powers of mu
/// at small n cancel against a vanishing linear factor; the division is
/// exact and checked.
inline Polynomial boundary_closed_form(BoundaryVariant variant, unsigned long n) {
  const long nl = static_cast<long>(n);
  const Polynomial mu = Polynomial::x();
  Polynomial numerator;
  long mu_power = 0;
  Rational c;
  switch (variant) {
    case BoundaryVariant::even:
      c = sign_pow(n) / (pow2(nl) * pochhammer(make_rational(5, 4), n));
      numerator = Polynomial::linear(-(2 * nl * nl + 3 * nl), 1);
      mu_power = nl - 1;
      break;
    case BoundaryVariant::odd:
      c = sign_pow(n) / (pow2(nl) * pochhammer(make_rational(3, 4), n));
      numerator = Polynomial::linear(-(2 * nl * nl + nl), 1);
      mu_power = nl - 1;
      break;
    case BoundaryVariant::full: {
      const long lo = nl / 2, hi = (nl + 1) / 2;
      c = sign_pow(n) / pochhammer(make_rational(3, 2), n);
      numerator = Polynomial::linear(-(2 * lo * lo + 3 * lo), 1) *
                  Polynomial::linear(-(2 * hi * hi + hi), 1);
      mu_power = nl - 2;
      break;
    }
  }
  if (mu_power >= 0) return pow(mu, static_cast<unsigned>(mu_power)) * numerator * c;
  auto [q, r] = divide(numerator, pow(mu, static_cast<unsigned>(-mu_power)));
  if (!r.is_zero()) throw std::logic_error("boundary closed form is not a polynomial");
  return q * c;
}

/// Determinant values of the Legendre-basis hook matrices:
/// (-1)^n/(2^n (5/4)_n) F_{2n+1} (even), (-1)^n/(2^n (3/4)_n) F_{2n} (odd).
inline Polynomial legendre_hook_closed_form(Parity parity, unsigned long n) {
  const bool even = parity == Parity::even;
  Rational c = sign_pow(n) /
               (pow2(static_cast<long>(n)) * pochhammer(even ? make_rational(5, 4) : make_rational(3, 4), n));
  return char_poly(even ? 2 * n + 1 : 2 * n).poly * c;
}

// ---- verifiers --------------------------------------------------------------

/// Parity-block determinant vs closed form. The odd identity needs n >= 1.
inline DetReport verify_thm31(Parity parity, unsigned long n) {
  if (parity == Parity::odd && n == 0)
    throw std::invalid_argument("verify_thm31: odd parity is defined for n >= 1");
  return make_report(n, parity == Parity::even ? Identity::thm31_parity0 : Identity::thm31_parity1,
                     det_poly(build_parity_block(parity, n)), parity_block_closed_form(parity, n));
}

inline DetReport verify_corollary_full(unsigned long n) {
  if (n == 0) throw std::invalid_argument("verify_corollary_full: n must be positive");
  return make_report(n, Identity::corollary_full, det_poly(build_pencil(n)), pencil_closed_form(n));
}

/// det(1/(2i+2j-1)) = h^(0)_n and det(1/(2i+2j-3)) = h^(1)_n.
inline DetReport verify_cauchy(Parity parity, unsigned long n) {
  const long shift = parity == Parity::even ? 1 : 3;
  RatMatrix m = RatMatrix::generate(n, [shift](std::size_t i, std::size_t j) {
    return make_rational(1, 2 * static_cast<long>(i + 1) + 2 * static_cast<long>(j + 1) - shift);
  });
  return make_report(n, parity == Parity::even ? Identity::cauchy_0 : Identity::cauchy_1,
                     Polynomial(det_rational(m)), Polynomial(h_constant(parity, n)));
}

inline DetReport verify_boundary(BoundaryVariant variant, unsigned long n) {
  Identity id = variant == BoundaryVariant::full  ? Identity::boundary_full
                : variant == BoundaryVariant::even ? Identity::boundary_0
                                                   : Identity::boundary_1;
  return make_report(n, id, det_poly(build_boundary(variant, n)), boundary_closed_form(variant, n));
}

inline DetReport verify_legendre_hook(Parity parity, unsigned long n) {
  return make_report(n, parity == Parity::even ? Identity::legendre_0 : Identity::legendre_1,
                     det_poly(build_legendre_hook(parity, n)), legendre_hook_closed_form(parity, n));
}

struct KronReport {
  unsigned long n = 0;
  Rational sample;
  bool mass_factorizes = false;       // M_n == A_n (x) A_n
  bool stiffness_factorizes = false;  // K_n == A_n (x) B_n
  Rational lhs;                       // det(K_n - s M_n)
  Rational rhs;                       // det(A_n)^n det(B_n - s A_n)^n
  bool equal = false;
  bool ok() const { return mass_factorizes && stiffness_factorizes && equal; }
};

inline KronReport verify_kron_factorization(unsigned long n, const Rational& sample) {
  if (n == 0) throw std::invalid_argument("verify_kron_factorization: n must be positive");
  const RatMatrix a = build_A(n), b = build_B(n);
  const RatMatrix mass = build_mass(n), stiff = build_stiffness(n);
  KronReport r;
  r.n = n;
  r.sample = sample;
  r.mass_factorizes = mass == kronecker(a, a);
  r.stiffness_factorizes = stiff == kronecker(a, b);
  RatMatrix shifted = RatMatrix::generate(mass.dim(), [&](std::size_t i, std::size_t j) {
    return Rational(stiff(i, j) - sample * mass(i, j));
  });
  r.lhs = det_rational(shifted);
  const Rational pencil_at = det_rational(evaluate(build_pencil(n), sample));
  r.rhs = rpow(det_rational(a), static_cast<long>(n)) * rpow(pencil_at, static_cast<long>(n));
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace invineq
