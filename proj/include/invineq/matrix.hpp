#pragma once

#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace invineq {

/// Dense square matrix, row-major, zero-based indices.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  template <typename Fn>
  static SquareMatrix generate(std::size_t dim, Fn&& entry) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(i, j);
    return m;
  }

  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  /// Rows and columns reordered so that result(i, j) = (*this)(perm[i], perm[j]).
  SquareMatrix permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != dim_) throw std::invalid_argument("permutation size mismatch");
    return generate(dim_, [&](std::size_t i, std::size_t j) { return (*this)(perm[i], perm[j]); });
  }

  /// Square sub-block starting at (offset, offset).
  SquareMatrix block(std::size_t offset, std::size_t size) const {
    if (offset + size > dim_) throw std::out_of_range("block exceeds matrix");
    return generate(size, [&](std::size_t i, std::size_t j) { return (*this)(offset + i, offset + j); });
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

using RatMatrix = SquareMatrix<Rational>;
using PolyMatrix = SquareMatrix<Polynomial>;

inline RatMatrix evaluate(const PolyMatrix& m, const Rational& x) {
  return RatMatrix::generate(m.dim(), [&](std::size_t i, std::size_t j) { return m(i, j)(x); });
}

inline int max_degree(const PolyMatrix& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) d = std::max(d, m(i, j).degree());
  return d;
}

inline PolyMatrix scaled(const PolyMatrix& m, const Rational& s) {
  return PolyMatrix::generate(m.dim(), [&](std::size_t i, std::size_t j) { return m(i, j) * s; });
}

/// Standard Kronecker product; dim = dim(x) * dim(y).
inline RatMatrix kronecker(const RatMatrix& x, const RatMatrix& y) {
  const std::size_t q = y.dim();
  return RatMatrix::generate(x.dim() * q, [&](std::size_t i, std::size_t j) {
    return Rational(x(i / q, j / q) * y(i % q, j % q));
  });
}

}  // namespace invineq
