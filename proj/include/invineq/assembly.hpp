#pragma once

// Exact matrices of the monomial tensor-product discretisation on (-1,1)^2
// and the one-dimensional pencils derived from it. Builders take the
// one-based entry formulas; the returned matrices are indexed from zero.

#include "invineq/matrix.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace invineq {

/// Which half of the even/odd index split a block comes from. Parity::even
/// collects the even one-based indices 2, 4, 6, ...
enum class Parity { even = 0, odd = 1 };

inline int ell(Parity p) { return p == Parity::even ? 0 : 1; }
inline std::string_view name(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct TensorIndex {
  std::size_t chi;  // power of t
  std::size_t rho;  // power of x
  friend bool operator==(const TensorIndex&, const TensorIndex&) = default;
};

/// k = chi * n + rho + 1 with chi, rho in [0, n).
inline TensorIndex index_split(std::size_t k, std::size_t n) {
  if (n == 0 || k < 1 || k > n * n) throw std::out_of_range("index_split: k outside 1..n^2");
  return {(k - 1) / n, (k - 1) % n};
}

namespace detail {

// integral of x^p over (-1, 1)
inline Rational monomial_integral(long p) {
  if (p < 0) throw std::domain_error("negative monomial power");
  return p % 2 == 0 ? make_rational(2, p + 1) : Rational(0);
}

}  // namespace detail

/// Mass matrix of x^rho t^chi, dimension n^2.
inline RatMatrix build_mass(std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_mass: n must be positive");
  return RatMatrix::generate(n * n, [n](std::size_t i, std::size_t j) {
    auto a = index_split(i + 1, n);
    auto b = index_split(j + 1, n);
    return Rational(detail::monomial_integral(static_cast<long>(a.rho + b.rho)) *
                    detail::monomial_integral(static_cast<long>(a.chi + b.chi)));
  });
}

/// Stiffness matrix of the x-derivative, dimension n^2.
inline RatMatrix build_stiffness(std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_stiffness: n must be positive");
  return RatMatrix::generate(n * n, [n](std::size_t i, std::size_t j) {
    auto a = index_split(i + 1, n);
    auto b = index_split(j + 1, n);
    const std::size_t r = a.rho + b.rho;
    if (r <= 1) return Rational(0);
    Rational dx = detail::monomial_integral(static_cast<long>(r - 2));
    dx *= static_cast<unsigned long>(a.rho * b.rho);
    return Rational(dx * detail::monomial_integral(static_cast<long>(a.chi + b.chi)));
  });
}

/// a_ij = (1 - (-1)^(i+j-1)) / (i+j-1)
inline Rational a_entry(long i, long j) {
  const long d = i + j - 1;
  return d % 2 != 0 ? make_rational(2, d) : Rational(0);
}

/// b_ij = (i-1)(j-1)(1 - (-1)^(i+j-3)) / (i+j-3); the parity factor is
/// tested first so i+j = 3 never divides by zero.
inline Rational b_entry(long i, long j) {
  const long d = i + j - 3;
  if (d % 2 == 0) return 0;
  return make_rational(2 * (i - 1) * (j - 1), d);
}

inline RatMatrix build_A(std::size_t n) {
  return RatMatrix::generate(n, [](std::size_t i, std::size_t j) {
    return a_entry(static_cast<long>(i + 1), static_cast<long>(j + 1));
  });
}

inline RatMatrix build_B(std::size_t n) {
  return RatMatrix::generate(n, [](std::size_t i, std::size_t j) {
    return b_entry(static_cast<long>(i + 1), static_cast<long>(j + 1));
  });
}

/// B_n - lambda A_n
inline PolyMatrix build_pencil(std::size_t n) {
  return PolyMatrix::generate(n, [](std::size_t i, std::size_t j) {
    const long r = static_cast<long>(i + 1), c = static_cast<long>(j + 1);
    return Polynomial::linear(b_entry(r, c), -a_entry(r, c));
  });
}

/// A^(0)_n or A^(1)_n.
inline PolyMatrix build_parity_block(Parity parity, std::size_t n) {
  return PolyMatrix::generate(n, [parity](std::size_t i0, std::size_t j0) {
    const long i = static_cast<long>(i0 + 1), j = static_cast<long>(j0 + 1);
    if (parity == Parity::even)
      return Polynomial::linear(make_rational((2 * i - 1) * (2 * j - 1), 2 * i + 2 * j - 3),
                                make_rational(-1, 2 * i + 2 * j - 1));
    return Polynomial::linear(make_rational(4 * (i - 1) * (j - 1), 2 * i + 2 * j - 5),
                              make_rational(-1, 2 * i + 2 * j - 3));
  });
}

enum class BoundaryVariant { full, even, odd };

inline std::string_view name(BoundaryVariant v) {
  switch (v) {
    case BoundaryVariant::full: return "full";
    case BoundaryVariant::even: return "even";
    case BoundaryVariant::odd: return "odd";
  }
  return "?";
}

/// Boundary-trace pencil in the Legendre basis: C_n, C^(0)_n or C^(1)_n in mu.
inline PolyMatrix build_boundary(BoundaryVariant variant, std::size_t n) {
  return PolyMatrix::generate(n, [variant](std::size_t i0, std::size_t j0) {
    const long i = static_cast<long>(i0 + 1), j = static_cast<long>(j0 + 1);
    Rational constant;
    long diag_den = 0;
    switch (variant) {
      case BoundaryVariant::full:
        constant = (i + j) % 2 == 0 ? 2 : 0;
        diag_den = 2 * i + 1;
        break;
      case BoundaryVariant::even:
        constant = 2;
        diag_den = 4 * i + 1;
        break;
      case BoundaryVariant::odd:
        constant = 2;
        diag_den = 4 * i - 1;
        break;
    }
    Rational slope = i == j ? make_rational(-2, diag_den) : Rational(0);
    return Polynomial::linear(constant, slope);
  });
}

/// Hook matrices of the Legendre-basis formulation:
/// 2m(2m+1) - delta_ij 2 lambda/(4i+1) (even), 2m(2m-1) - delta_ij 2 lambda/(4i-1) (odd),
/// with m = min(i, j).
inline PolyMatrix build_legendre_hook(Parity parity, std::size_t n) {
  return PolyMatrix::generate(n, [parity](std::size_t i0, std::size_t j0) {
    const long i = static_cast<long>(i0 + 1), j = static_cast<long>(j0 + 1);
    const long m = std::min(i, j);
    const bool even = parity == Parity::even;
    Rational constant = even ? 2 * m * (2 * m + 1) : 2 * m * (2 * m - 1);
    Rational slope = i == j ? make_rational(-2, even ? 4 * i + 1 : 4 * i - 1) : Rational(0);
    return Polynomial::linear(constant, slope);
  });
}

/// Result of reordering rows/columns as (2, 4, 6, ..., 1, 3, 5, ...).
struct BlockSplit {
  std::vector<std::size_t> permutation;  // zero-based: permuted(i,j) = original(p[i], p[j])
  PolyMatrix permuted;
  PolyMatrix even_block;  // floor(n/2) x floor(n/2)
  PolyMatrix odd_block;   // ceil(n/2) x ceil(n/2)
  bool off_diagonal_zero = false;
};

inline std::vector<std::size_t> even_odd_permutation(std::size_t n) {
  std::vector<std::size_t> p;
  p.reserve(n);
  for (std::size_t k = 1; k < n; k += 2) p.push_back(k);
  for (std::size_t k = 0; k < n; k += 2) p.push_back(k);
  return p;
}

inline BlockSplit split_even_odd(const PolyMatrix& m) {
  BlockSplit s;
  const std::size_t n = m.dim();
  const std::size_t ne = n / 2;
  s.permutation = even_odd_permutation(n);
  s.permuted = m.permuted(s.permutation);
  s.even_block = s.permuted.block(0, ne);
  s.odd_block = s.permuted.block(ne, n - ne);
  s.off_diagonal_zero = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < ne) != (j < ne) && !s.permuted(i, j).is_zero()) s.off_diagonal_zero = false;
  return s;
}

}  // namespace invineq
