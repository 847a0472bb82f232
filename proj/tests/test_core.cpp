#include "invineq/fixed_real.hpp"
#include "invineq/matrix.hpp"
#include "invineq/polynomial.hpp"
#include "invineq/rational.hpp"
#include "invineq/roots.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <utility>
#include <vector>

using namespace invineq;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, NormalizesAndPrints) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ExactRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    EXPECT_EQ(Rational((a + b) - b), a);
    if (b != 0) EXPECT_EQ(Rational((a * b) / b), a);
  }
}

TEST(Rational, PochhammerSpecExamples) {
  EXPECT_EQ(pochhammer(make_rational(3, 2), 1), make_rational(3, 2));
  EXPECT_EQ(pochhammer(Rational(5), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 4), Rational(360));
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3/4"), make_rational(3, 4));
  EXPECT_EQ(parse_rational("-12"), Rational(-12));
  EXPECT_EQ(parse_rational("1e-12"), make_rational(1, 1'000'000'000'000L));
  EXPECT_EQ(parse_rational("-0.25"), make_rational(-1, 4));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_EQ(parse_rational("010/08"), make_rational(5, 4));  // decimal, not octal
  EXPECT_EQ(parse_rational("0.0625"), make_rational(1, 16));
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1e", "--1", "0.5.1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, PochhammerExamples) {
  EXPECT_EQ(pochhammer(make_rational(5, 4), 0), Rational(1));
  EXPECT_EQ(pochhammer(make_rational(3, 2), 2), make_rational(15, 4));
  EXPECT_EQ(pochhammer(Rational(-2), 5), Rational(0));
}

TEST(Rational, PochhammerMatchesDirectProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng);
    const unsigned long n = rng() % 12;
    EXPECT_EQ(pochhammer(a, n), oracle::rising(a, n));
  }
}

TEST(Rational, PochhammerSplits) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = random_rational(rng);
    const unsigned long m = rng() % 8, k = rng() % 8;
    EXPECT_EQ(pochhammer(a, m + k), pochhammer(a, m) * pochhammer(a + Rational(static_cast<long>(m)), k));
  }
}

TEST(Rational, Powers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(rpow(make_rational(2, 3), -2), make_rational(9, 4));
  EXPECT_EQ(pow2(-3), make_rational(1, 8));
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p{1, 2, 3};  // 1 + 2x + 3x^2
  const Polynomial q{-1, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(2)), Rational(17));
  EXPECT_EQ(p * q, Polynomial({-1, -1, -1, 3}));
  EXPECT_EQ(p - p, Polynomial());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(p.derivative(), Polynomial({2, 6}));
  EXPECT_EQ(p.shifted(Rational(1)), Polynomial({6, 8, 3}));
  EXPECT_EQ(pow(q, 3), Polynomial({-1, 3, -3, 1}));
}

TEST(Polynomial, Division) {
  const Polynomial a = Polynomial({1, 1}) * Polynomial({-2, 0, 1}) + Polynomial({3});
  auto [quot, rem] = divide(a, Polynomial({1, 1}));
  EXPECT_EQ(quot, Polynomial({-2, 0, 1}));
  EXPECT_EQ(rem, Polynomial({3}));
  EXPECT_TRUE(divides(Polynomial({1, 1}), Polynomial({1, 1}) * Polynomial({5, 0, 2})));
  EXPECT_FALSE(divides(Polynomial({1, 1}), Polynomial({1, 2})));
  EXPECT_THROW(divide(a, Polynomial()), std::domain_error);
}

TEST(Polynomial, InterpolationRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int deg = static_cast<int>(rng() % 9);
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = random_rational(rng);
    const Polynomial p(c);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= deg; ++k) {
      const Rational x = make_rational(3 * k - 7, 2);
      pts.emplace_back(x, p(x));
    }
    EXPECT_EQ(interpolate(pts), p);
  }
}

TEST(Polynomial, InterpolationRejectsDuplicateAbscissae) {
  std::vector<std::pair<Rational, Rational>> pts = {{1, 2}, {1, 3}};
  EXPECT_THROW(interpolate(pts), std::invalid_argument);
}

TEST(FixedReal, RoundsDown) {
  EXPECT_EQ(FixedReal::from_rational(make_rational(1, 3), 64).to_decimal(10), "0.3333333333");
  EXPECT_EQ(FixedReal::sqrt(Rational(2), 128).to_decimal(30), "1.414213562373095048801688724209");
  EXPECT_EQ(FixedReal::cbrt(Rational(-27), 64).to_decimal(5), "-3.00000");
  EXPECT_EQ(FixedReal::sqrt(Rational(9), 64).to_rational(), Rational(3));
}

TEST(FixedReal, PiToFortyDigits) {
  EXPECT_EQ(FixedReal::pi(160).to_decimal(40), "3.1415926535897932384626433832795028841971");
}

TEST(FixedReal, Arithmetic) {
  const FixedReal a = FixedReal::from_rational(make_rational(3, 2), 64);
  const FixedReal b = FixedReal::from_rational(make_rational(1, 4), 64);
  EXPECT_EQ((a + b).to_rational(), make_rational(7, 4));
  EXPECT_EQ((a * b).to_rational(), make_rational(3, 8));
  EXPECT_EQ((a / b).to_rational(), Rational(6));
  EXPECT_TRUE(b < a);
  EXPECT_THROW(a + FixedReal::from_rational(1, 128), std::invalid_argument);
}

TEST(Matrix, PermuteBlockKronecker) {
  auto m = RatMatrix::generate(3, [](std::size_t i, std::size_t j) { return Rational(static_cast<long>(3 * i + j)); });
  auto p = m.permuted({2, 0, 1});
  EXPECT_EQ(p(0, 0), Rational(8));
  EXPECT_EQ(p(0, 1), Rational(6));
  EXPECT_EQ(m.block(1, 2)(0, 0), Rational(4));
  auto k = kronecker(m.block(0, 2), m.block(1, 2));
  EXPECT_EQ(k.dim(), 4u);
  EXPECT_EQ(k(1, 3), Rational(1 * 8));
  EXPECT_EQ(k(3, 2), Rational(4 * 7));
  EXPECT_FALSE(m.is_symmetric());
}

TEST(Roots, SignAndCompose) {
  const IntCoeffs p = to_integer_poly(Polynomial({make_rational(-1, 2), 0, 1}));  // x^2 - 1/2
  EXPECT_EQ(p, (IntCoeffs{-1, 0, 2}));
  EXPECT_EQ(sign_at(p, make_rational(1, 2)), -1);
  EXPECT_EQ(sign_at(p, Rational(1)), 1);
  EXPECT_EQ(descartes_above(p, Rational(0)), 1);
  EXPECT_EQ(descartes_above(p, Rational(1)), 0);
  EXPECT_EQ(descartes_between(p, Rational(-1), Rational(1)), 2);
}

TEST(Roots, SturmCountsKnownRoots) {
  // (x-1)(x-2)^2(x+3)
  const Polynomial p = Polynomial({-1, 1}) * pow(Polynomial({-2, 1}), 2) * Polynomial({3, 1});
  const SturmChain s(p);
  EXPECT_EQ(s.count_all(), 3);
  EXPECT_EQ(s.count(Rational(0), Rational(2)), 2);
  EXPECT_EQ(s.count(Rational(2), Rational(10)), 0);
  const auto roots = real_roots(p, make_rational(1, 1000));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(roots[0].contains(Rational(-3)));
  EXPECT_TRUE(roots[1].contains(Rational(1)));
  EXPECT_TRUE(roots[2].contains(Rational(2)));
}

TEST(Roots, SturmAgreesWithDescartesOnRandomProducts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = 1;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) p = p * Polynomial::linear(-random_rational(rng), 1);
    const SturmChain s(p);
    const IntCoeffs sf = to_integer_poly(s.squarefree_part());
    int isolated = 0;
    descartes_isolate(sf, Rational(-60), Rational(60), [&](const Enclosure& e) {
      EXPECT_EQ(s.count(e.lo, e.hi), 1);
      ++isolated;
      return true;
    });
    EXPECT_EQ(isolated, s.count(Rational(-60), Rational(60)));
  }
}

TEST(Roots, BisectRejectsBracketWithoutSignChange) {
  const IntCoeffs p{-1, 0, 1};
  EXPECT_THROW(bisect(p, {Rational(2), Rational(3)}, make_rational(1, 10)), std::logic_error);
  const Enclosure e = bisect(p, {Rational(0), Rational(4)}, make_rational(1, 10));
  EXPECT_TRUE(e.exact());
  EXPECT_EQ(e.lo, Rational(1));
}
