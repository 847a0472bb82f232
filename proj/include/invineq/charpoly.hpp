#pragma once

// The polynomial family F_n(lambda) whose largest root is the squared
// inverse-inequality constant, together with the constants and vectors that
// certify the determinant evaluations of the parity blocks.

#include "invineq/assembly.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace invineq {

/// f_j(n) = (n-2j+1)_{4j} / (4^j (2j)!), for 0 <= j <= floor(n/2).
inline Rational f_coeff(unsigned long j, unsigned long n) {
  if (j > n / 2) throw std::out_of_range("f_coeff: j exceeds floor(n/2)");
  Rational start = make_rational(static_cast<long>(n) - 2 * static_cast<long>(j) + 1);
  return pochhammer(start, 4 * j) / (ipow(4, j) * factorial(2 * j));
}

struct CharPoly {
  unsigned long n = 0;
  unsigned long nu = 0;  // floor(n/2) == degree
  Polynomial poly;
};

/// F_n from its defining sum: coefficient of lambda^j is
/// (-4)^(j-nu) (2nu-2j+1)_n / (2j-2nu+n)!.
inline Polynomial char_poly_from_sum(unsigned long n) {
  const long nu = static_cast<long>(n / 2);
  const long nl = static_cast<long>(n);
  std::vector<Rational> c(static_cast<std::size_t>(nu + 1));
  for (long j = 0; j <= nu; ++j) {
    Rational term = rpow(Rational(-4), j - nu);
    term *= pochhammer(make_rational(2 * nu - 2 * j + 1), n);
    term /= factorial(static_cast<unsigned long>(2 * j - 2 * nu + nl));
    c[static_cast<std::size_t>(j)] = term;
  }
  return Polynomial(std::move(c));
}

/// F_n = sum_j (-1)^j f_j(n) lambda^(nu-j).
inline Polynomial char_poly_from_coefficients(unsigned long n) {
  const unsigned long nu = n / 2;
  std::vector<Rational> c(nu + 1);
  for (unsigned long j = 0; j <= nu; ++j) {
    Rational f = f_coeff(j, n);
    c[nu - j] = j % 2 ? Rational(-f) : f;
  }
  return Polynomial(std::move(c));
}

inline CharPoly char_poly(unsigned long n) {
  CharPoly cp{n, n / 2, char_poly_from_coefficients(n)};
#ifndef NDEBUG
  assert(cp.poly == char_poly_from_sum(n));
#endif
  return cp;
}

/// h^(l)_n = 2^-n prod_{i=1}^n ((i-1)!)^2 / (i - l + 1/2)_n
inline Rational h_constant(Parity parity, unsigned long n) {
  Rational h = pow2(-static_cast<long>(n));
  const long l = ell(parity);
  for (unsigned long i = 1; i <= n; ++i) {
    Integer f = factorial(i - 1);
    h *= Rational(f * f);
    h /= pochhammer(make_rational(2 * (static_cast<long>(i) - l) + 1, 2), n);
  }
  return h;
}

struct InverseColumn {
  Parity parity = Parity::even;
  unsigned long n = 0;
  std::vector<Polynomial> entries;  // entries[j-1] = p_{n,j}
};

/// Scaled last column of the inverse of the parity block of size n.
/// Terms whose factorial argument 2m+k-n-j+2 is negative vanish.
inline InverseColumn p_vector(Parity parity, unsigned long n) {
  if (n == 0) throw std::invalid_argument("p_vector: n must be positive");
  const long nl = static_cast<long>(n);
  InverseColumn col{parity, n, {}};
  col.entries.reserve(n);
  for (long j = 1; j <= nl; ++j) {
    Rational prefactor;
    if (parity == Parity::even) {
      prefactor = pow2(2 * nl + 2 * j - 3) * pochhammer(make_rational(3, 2), 2 * n - 1) *
                  pochhammer(make_rational(2 * nl + 1, 2), static_cast<unsigned long>(j - 1));
      prefactor /= factorial(n - 1) * factorial(static_cast<unsigned long>(2 * j - 1));
    } else {
      prefactor = rpow(Rational(4), j - nl) * Rational(factorial(4 * n - 3)) *
                  pochhammer(make_rational(2 * nl - 1, 2), static_cast<unsigned long>(j - 1));
      prefactor /= factorial(2 * n - 2) * factorial(n - 1) *
                   factorial(static_cast<unsigned long>(2 * j - 2));
    }
    std::vector<Rational> c(n);
    for (long m = 0; m <= nl - 1; ++m) {
      Rational sum = 0;
      const Rational rise_start = parity == Parity::even ? 2 * m + 1 : 2 * m;
      for (long k = 0; k <= 2 * nl - 2 * m - 2; ++k) {
        const long fact_arg = 2 * m + k - nl - j + 2;
        if (fact_arg < 0) continue;
        Rational term = pochhammer(rise_start, static_cast<unsigned long>(2 * k));
        if (term == 0) continue;
        term /= ipow(4, static_cast<unsigned long>(m + k)) *
                factorial(static_cast<unsigned long>(k)) *
                factorial(static_cast<unsigned long>(fact_arg));
        sum += term;
      }
      if ((j + m) % 2) sum = -sum;
      c[static_cast<std::size_t>(m)] = sum * prefactor;
    }
    col.entries.emplace_back(std::move(c));
  }
  return col;
}

struct InverseIdentityReport {
  Parity parity = Parity::even;
  unsigned long n = 0;
  bool ok = false;
  std::optional<unsigned long> failing_row;  // one-based
  Polynomial residual;
};

/// Checks sum_j a^(l)_{ij} p^(l)_{n,j} = delta_{i,n} F_{2n} (even) or
/// delta_{i,n} lambda F_{2n-1} (odd) for every row i.
inline InverseIdentityReport verify_inverse_identity(Parity parity, unsigned long n) {
  const PolyMatrix a = build_parity_block(parity, n);
  const InverseColumn p = p_vector(parity, n);
  const Polynomial last = parity == Parity::even
                              ? char_poly(2 * n).poly
                              : Polynomial::x() * char_poly(2 * n - 1).poly;
  InverseIdentityReport r{parity, n, true, std::nullopt, {}};
  for (unsigned long i = 0; i < n; ++i) {
    Polynomial row;
    for (unsigned long j = 0; j < n; ++j) row += a(i, j) * p.entries[j];
    Polynomial residual = row - (i + 1 == n ? last : Polynomial());
    if (!residual.is_zero()) {
      r.ok = false;
      r.failing_row = i + 1;
      r.residual = residual;
      return r;
    }
  }
  return r;
}

struct RecurrenceReport {
  bool ok = false;
  std::optional<unsigned long> failing_n;
  Polynomial residual;
};

/// (4n+3)F_{2n+4} + (4n+5)(16n^2+40n-2l+21)F_{2n+2} + (4n+7) l^2 F_{2n} = 0
inline Polynomial recurrence_residual(unsigned long n) {
  const long k = static_cast<long>(n);
  Polynomial middle = Polynomial::linear(16 * k * k + 40 * k + 21, -2) * Rational(4 * k + 5);
  return char_poly(2 * n + 4).poly * Rational(4 * k + 3) + middle * char_poly(2 * n + 2).poly +
         Polynomial::monomial(4 * k + 7, 2) * char_poly(2 * n).poly;
}

inline RecurrenceReport verify_F_recurrence(unsigned long n_max) {
  for (unsigned long n = 0; n <= n_max; ++n) {
    Polynomial res = recurrence_residual(n);
    if (!res.is_zero()) return {false, n, res};
  }
  return {true, std::nullopt, {}};
}

}  // namespace invineq
