#pragma once

#include "invineq/matrix.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace invineq {

/// Exact determinant. Each row is scaled to integers by the lcm of its
/// denominators, then reduced with fraction-free (Bareiss) elimination in
/// which every division is exact. The 0x0 determinant is 1.
inline Rational det_rational(const RatMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;

  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return make_rational(det, scale);
}

/// Exact determinant of a polynomial matrix: evaluate at dim * d + 1 integer
/// points 0, 1, 2, ... and interpolate, where d bounds the entry degrees.
inline Polynomial det_poly(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Polynomial(1);
  const std::size_t points = n * static_cast<std::size_t>(std::max(max_degree(m), 0)) + 1;
  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(points);
  for (std::size_t k = 0; k < points; ++k) {
    Rational x = static_cast<long>(k);
    samples.emplace_back(x, det_rational(evaluate(m, x)));
  }
  return interpolate(samples);
}

}  // namespace invineq
