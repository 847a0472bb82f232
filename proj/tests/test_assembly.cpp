#include "invineq/assembly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace invineq;

namespace {

double ipow_d(double x, std::size_t p) {
  double r = 1;
  for (std::size_t k = 0; k < p; ++k) r *= x;
  return r;
}

}  // namespace

TEST(Assembly, IndexSplit) {
  EXPECT_EQ(index_split(1, 3), (TensorIndex{0, 0}));
  EXPECT_EQ(index_split(9, 3), (TensorIndex{2, 2}));
  EXPECT_EQ(index_split(5, 3), (TensorIndex{1, 1}));
  EXPECT_THROW(index_split(0, 3), std::out_of_range);
  EXPECT_THROW(index_split(10, 3), std::out_of_range);
}

TEST(Assembly, SmallMassAndStiffness) {
  EXPECT_EQ(build_mass(1)(0, 0), Rational(4));
  EXPECT_EQ(build_stiffness(1)(0, 0), Rational(0));
  const RatMatrix m2 = build_mass(2);
  EXPECT_EQ(m2(0, 0), Rational(4));
  EXPECT_EQ(m2(1, 1), make_rational(4, 3));
  EXPECT_EQ(m2(0, 1), Rational(0));
}

TEST(Assembly, QuadratureOracle) {
  const auto rule = oracle::gauss_legendre(12);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RatMatrix mass = build_mass(n), stiff = build_stiffness(n);
    ASSERT_TRUE(mass.is_symmetric());
    ASSERT_TRUE(stiff.is_symmetric());
    for (std::size_t i = 0; i < n * n; ++i) {
      for (std::size_t j = 0; j < n * n; ++j) {
        const auto a = index_split(i + 1, n), b = index_split(j + 1, n);
        double m = 0, k = 0;
        for (auto [x, wx] : rule) {
          for (auto [t, wt] : rule) {
            const double tt = ipow_d(t, a.chi + b.chi);
            m += wx * wt * ipow_d(x, a.rho + b.rho) * tt;
            const double dx = (a.rho ? a.rho * ipow_d(x, a.rho - 1) : 0.0) * (b.rho ? b.rho * ipow_d(x, b.rho - 1) : 0.0);
            k += wx * wt * dx * tt;
          }
        }
        EXPECT_NEAR(mass(i, j).get_d(), m, 1e-12) << n << " " << i << " " << j;
        EXPECT_NEAR(stiff(i, j).get_d(), k, 1e-12) << n << " " << i << " " << j;
      }
    }
  }
}

TEST(Assembly, OneDimensionalMatrices) {
  EXPECT_EQ(build_A(1)(0, 0), Rational(2));
  EXPECT_EQ(build_B(1)(0, 0), Rational(0));
  EXPECT_EQ(build_A(2)(0, 1), Rational(0));
  EXPECT_EQ(build_B(3)(2, 2), make_rational(8, 3));
}

TEST(Assembly, KroneckerStructure) {
  EXPECT_EQ(kronecker(build_A(1), build_A(1))(0, 0), Rational(4));
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(kronecker(build_A(n), build_A(n)), build_mass(n)) << n;
    EXPECT_EQ(kronecker(build_A(n), build_B(n)), build_stiffness(n)) << n;
  }
}

TEST(Assembly, Pencil) {
  EXPECT_EQ(build_pencil(1)(0, 0), Polynomial({0, -2}));
  const PolyMatrix p2 = build_pencil(2);
  EXPECT_TRUE(p2(0, 1).is_zero());
  EXPECT_EQ(p2(1, 1), Polynomial({2, make_rational(-2, 3)}));
}

TEST(Assembly, ParityBlocks) {
  EXPECT_EQ(build_parity_block(Parity::even, 1)(0, 0), Polynomial({1, make_rational(-1, 3)}));
  EXPECT_EQ(build_parity_block(Parity::odd, 1)(0, 0), Polynomial({0, -1}));
  EXPECT_EQ(build_parity_block(Parity::even, 2)(1, 1), Polynomial({make_rational(9, 5), make_rational(-1, 7)}));
}

TEST(Assembly, PencilSplitsIntoTwiceTheParityBlocks) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const BlockSplit s = split_even_odd(build_pencil(n));
    EXPECT_TRUE(s.off_diagonal_zero) << n;
    EXPECT_EQ(s.even_block, scaled(build_parity_block(Parity::even, n / 2), 2)) << n;
    EXPECT_EQ(s.odd_block, scaled(build_parity_block(Parity::odd, (n + 1) / 2), 2)) << n;
  }
}

TEST(Assembly, BoundaryMatrices) {
  EXPECT_EQ(build_boundary(BoundaryVariant::full, 1)(0, 0), Polynomial({2, make_rational(-2, 3)}));
  EXPECT_EQ(build_boundary(BoundaryVariant::even, 1)(0, 0), Polynomial({2, make_rational(-2, 5)}));
  const PolyMatrix c0 = build_boundary(BoundaryVariant::even, 3);
  EXPECT_EQ(c0(0, 2), Polynomial(2));
  EXPECT_EQ(c0(2, 2), Polynomial({2, make_rational(-2, 13)}));
  EXPECT_EQ(build_boundary(BoundaryVariant::full, 3)(0, 1), Polynomial());
}

TEST(Assembly, LegendreHooks) {
  EXPECT_EQ(build_legendre_hook(Parity::even, 1)(0, 0), Polynomial({6, make_rational(-2, 5)}));
  EXPECT_EQ(build_legendre_hook(Parity::odd, 1)(0, 0), Polynomial({2, make_rational(-2, 3)}));
  const PolyMatrix h = build_legendre_hook(Parity::odd, 2);
  EXPECT_EQ(h(0, 1), Polynomial(2));
  EXPECT_EQ(h(1, 1), Polynomial({12, make_rational(-2, 7)}));
}
