#include "invineq/float_check.hpp"

#include <gtest/gtest.h>

using namespace invineq;

TEST(FloatCheck, AgreesWithCertifiedLambda) {
  const double tol[] = {1e-8, 1e-6, 1e-4};
  for (unsigned long n = 2; n <= 4; ++n) {
    const FloatCrossCheck r = float_eigen_crosscheck(n, tol[n - 2]);
    EXPECT_FALSE(r.inconclusive) << n;
    EXPECT_TRUE(r.agrees()) << n << " difference " << r.difference;
  }
}

TEST(FloatCheck, CertifiedValues) {
  EXPECT_NEAR(float_eigen_crosscheck(2, 1e-8).certified, 3.0, 1e-15);
  EXPECT_NEAR(float_eigen_crosscheck(3, 1e-6).certified, 15.0, 1e-15);
  EXPECT_NEAR(float_eigen_crosscheck(4, 1e-4).certified, 42.53122562401, 1e-10);
}

TEST(FloatCheck, RejectsLargeN) {
  EXPECT_THROW(float_eigen_crosscheck(1, 1e-8), std::invalid_argument);
  EXPECT_THROW(float_eigen_crosscheck(5, 1e-8), std::invalid_argument);
}
