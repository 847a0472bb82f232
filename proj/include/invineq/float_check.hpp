#pragma once

// Floating-point sanity check of lambda_n on the full n^2 x n^2 problem
// K x = lambda M x. The monomial mass matrix is badly conditioned, so this is
// only meaningful for small n.

#include "invineq/assembly.hpp"
#include "invineq/spectra.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace invineq {

struct FloatCrossCheck {
  unsigned long n = 0;
  double computed = 0;   // largest generalized eigenvalue, double precision
  double certified = 0;  // midpoint of the exact enclosure of lambda_n
  double difference = 0;
  double tolerance = 0;
  bool inconclusive = false;  // eigensolver or Cholesky failure
  bool agrees() const { return !inconclusive && difference <= tolerance; }
};

inline Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

inline FloatCrossCheck float_eigen_crosscheck(unsigned long n, double tol) {
  if (n < 2 || n > 4) throw std::invalid_argument("float_eigen_crosscheck: n must be in [2, 4]");
  FloatCrossCheck r;
  r.n = n;
  r.tolerance = tol;
  r.certified = max_root(n).midpoint().get_d();

  const Eigen::MatrixXd k = to_eigen(build_stiffness(n));
  const Eigen::MatrixXd m = to_eigen(build_mass(n));
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, m, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    r.inconclusive = true;
    return r;
  }
  r.computed = solver.eigenvalues().maxCoeff();
  if (!std::isfinite(r.computed)) {
    r.inconclusive = true;
    return r;
  }
  r.difference = std::abs(r.computed - r.certified);
  return r;
}

}  // namespace invineq
