// Prints the squared inverse-inequality constant lambda_n for a few n,
// together with its lower and upper bounds.

#include "invineq/spectra.hpp"

#include <iostream>

int main() {
  using namespace invineq;
  for (unsigned long n : {2ul, 5ul, 10ul, 20ul, 50ul}) {
    const BoundReport r = compute_bounds(n);
    std::cout << "n=" << n << "  m(n)=" << r.m_lower.to_decimal(6)
              << "  lambda_n=" << FixedReal::from_rational(r.lambda.midpoint()).to_decimal(6)
              << "  M(n)=" << r.M_upper.to_decimal(6) << "  f1(n)=" << to_string(r.f1)
              << (r.ok() ? "" : "  ORDERING FAILED") << '\n';
  }
}
