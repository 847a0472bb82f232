#include "invineq/spectra.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace invineq;

namespace {

// Reference values computed independently (F_n from its defining sum in exact
// fractions, roots by 50-digit polynomial root finding).
struct Reference {
  unsigned long n;
  const char* lambda;
};
constexpr Reference largest_roots[] = {
    {6, "184.726234464883028609397109531"},  {7, "326.150767117503618804551647665"},
    {8, "536.374221131291090691642588434"},  {10, "1243.50419931987932201208682566"},
    {20, "17942.3188590324068265609865867"}, {50, "659265.280312092986301190535291"},
};
constexpr Reference cubic_roots[] = {
    {8, "536.39001678832658899220637024"},
    {10, "1243.70157437134032966769076759"},
    {50, "659963.78750291069721393573033"},
};

Rational decimal(const char* s) { return parse_rational(s); }

// Reference values carry 30 significant digits; allow 1e-20 relative slack.
void expect_encloses(const Enclosure& e, const char* ref) {
  const Rational r = decimal(ref);
  const Rational slack = abs(r) * make_rational(1, 100'000'000'000'000'000L) / 100;
  EXPECT_LE(e.lo, r + slack) << ref;
  EXPECT_GE(e.hi, r - slack) << ref;
}

}  // namespace

TEST(Spectra, BoundM) {
  const QuadraticSurd m2 = bound_m(2);
  EXPECT_EQ(m2.u, make_rational(3, 2));
  EXPECT_EQ(m2.v, make_rational(9, 4));
  EXPECT_EQ(m2.value(64).to_rational(), Rational(3));
  const QuadraticSurd m4 = bound_m(4);
  EXPECT_EQ(m4.u, make_rational(45, 2));
  EXPECT_EQ(m4.v, make_rational(1605, 4));
  EXPECT_EQ(bound_m(6).value().to_decimal(4), "184.3725");
  EXPECT_NEAR(bound_m(6).value().to_double(), 105 + std::sqrt(6300.0), 1e-12);
  EXPECT_THROW(bound_m(1), std::invalid_argument);
}

TEST(Spectra, QuadraticSurdCompare) {
  const QuadraticSurd s{Rational(1), Rational(4)};  // 3
  EXPECT_EQ(s.compare(Rational(3)), 0);
  EXPECT_GT(s.compare(make_rational(299, 100)), 0);
  EXPECT_LT(s.compare(make_rational(301, 100)), 0);
  EXPECT_GT(s.compare(Rational(-5)), 0);
}

TEST(Spectra, UpperBoundPolynomials) {
  EXPECT_EQ(upper_p1(2), make_rational(1, 3));
  EXPECT_EQ(upper_p2(2), Rational(0));
  EXPECT_EQ(upper_p2(3), Rational(0));
  for (unsigned long n = 4; n <= 9; ++n) EXPECT_LT(upper_p2(n), 0) << n;
  for (unsigned long n = 10; n <= 200; ++n) EXPECT_GT(upper_p2(n), 0) << n;
}

TEST(Spectra, BoundMUpper) {
  const UpperCubic m2 = bound_M(2);
  EXPECT_TRUE(m2.largest_root.contains(Rational(3)));
  ASSERT_TRUE(m2.cardano.has_value());
  EXPECT_NEAR(m2.cardano->to_double(), 3.0, 1e-30);
  const UpperCubic m6 = bound_M(6);
  EXPECT_EQ(m6.cubic, Polynomial({-10395, 4725, -210, 1}));
  EXPECT_EQ(m6.largest_root.midpoint().get_d() > 184 && m6.largest_root.midpoint().get_d() < 185, true);
  EXPECT_LT(char_poly(6).poly(Rational(184)), 0);
  EXPECT_GT(char_poly(6).poly(Rational(185)), 0);
  for (const auto& ref : cubic_roots) expect_encloses(bound_M(ref.n).largest_root, ref.lambda);
}

TEST(Spectra, CardanoMatchesCertifiedRoot) {
  for (unsigned long n = 10; n <= 120; n += 7) {
    const UpperCubic m = bound_M(n, make_rational(1, 1'000'000'000'000'000L));
    ASSERT_TRUE(m.cardano.has_value()) << n;
    const double diff = std::abs(Rational(m.cardano->to_rational() - m.largest_root.midpoint()).get_d());
    EXPECT_LT(diff, 1e-9) << n;
  }
}

TEST(Spectra, MaxRootExamples) {
  const Enclosure l2 = max_root(2);
  EXPECT_TRUE(l2.exact());
  EXPECT_EQ(l2.lo, Rational(3));
  EXPECT_EQ(max_root(3).lo, Rational(15));
  const Enclosure l4 = max_root(4);
  EXPECT_LE(l4.width(), default_tolerance());
  const QuadraticSurd exact{make_rational(45, 2), make_rational(1605, 4)};
  EXPECT_GE(exact.compare(l4.lo), 0);
  EXPECT_LE(exact.compare(l4.hi), 0);
  EXPECT_NEAR(l4.midpoint().get_d(), oracle::quadratic_roots(-45, 105).first, 1e-9);
  for (const auto& ref : largest_roots) expect_encloses(max_root(ref.n, make_rational(1, 1'000'000'000'000'000'000L)), ref.lambda);
}

TEST(Spectra, EnclosureIsCertified) {
  for (unsigned long n = 2; n <= 60; ++n) {
    const Enclosure e = max_root(n);
    const IntCoeffs f = to_integer_poly(char_poly(n).poly);
    EXPECT_LE(e.width(), default_tolerance());
    EXPECT_LE(sign_at(f, e.lo) * sign_at(f, e.hi), 0) << n;
    EXPECT_EQ(descartes_above(f, e.hi), 0) << n;
  }
}

TEST(Spectra, AllRootsSmall) {
  const RootTable t2 = all_roots(2);
  ASSERT_EQ(t2.count, 1u);
  EXPECT_TRUE(t2.roots[0].contains(Rational(3)));
  for (unsigned long n : {4ul, 5ul}) {
    const Polynomial f = char_poly(n).poly;
    const auto [big, small] = oracle::quadratic_roots(f.coefficient(1).get_d(), f.coefficient(0).get_d());
    const RootTable t = all_roots(n);
    ASSERT_EQ(t.count, 2u);
    EXPECT_NEAR(t.roots[0].midpoint().get_d(), small, 1e-9);
    EXPECT_NEAR(t.roots[1].midpoint().get_d(), big, 1e-9);
  }
  EXPECT_THROW(all_roots(1), std::invalid_argument);
}

TEST(Spectra, RootCountAndPositivity) {
  for (unsigned long n = 2; n <= 60; ++n) {
    const RootTable t = all_roots(n);
    ASSERT_EQ(t.count, n / 2) << n;
    for (std::size_t k = 0; k < t.roots.size(); ++k) {
      EXPECT_GT(t.roots[k].lo, 0);
      if (k > 0) EXPECT_LT(t.roots[k - 1].hi, t.roots[k].lo);
    }
    EXPECT_TRUE(t.roots.back().intersects(max_root(n)));
  }
}

TEST(Spectra, SmallestRootAgreesWithSturm) {
  for (unsigned long m = 2; m <= 40; ++m) {
    const Enclosure d = smallest_root(m);
    EXPECT_TRUE(d.intersects(all_roots(m).roots.front())) << m;
  }
  expect_encloses(smallest_root(10, make_rational(1, 1'000'000'000'000'000'000L)), "2.46740110027234372542543174316");
  expect_encloses(smallest_root(11, make_rational(1, 1'000'000'000'000'000'000L)), "9.86960440134322536967955923754");
}

TEST(Spectra, PencilMaxRootConsistency) {
  for (unsigned long n = 2; n <= 12; ++n) {
    const auto pencil_root = largest_real_root(det_poly(build_pencil(n)), default_tolerance());
    ASSERT_TRUE(pencil_root.has_value());
    EXPECT_TRUE(pencil_root->intersects(max_root(n))) << n;
  }
}

TEST(Spectra, BoundReports) {
  const BoundReport b2 = compute_bounds(2);
  EXPECT_EQ(b2.m_vs_lambda, Relation::equal);
  EXPECT_EQ(b2.lambda_vs_f1, Relation::equal);
  EXPECT_EQ(b2.lambda_vs_M, Relation::equal);
  EXPECT_EQ(b2.f1, Rational(3));
  EXPECT_TRUE(b2.ok());
  const BoundReport b4 = compute_bounds(4);
  EXPECT_EQ(b4.m_vs_lambda, Relation::equal);
  EXPECT_EQ(b4.lambda_vs_f1, Relation::less);
  const BoundReport b6 = compute_bounds(6);
  EXPECT_EQ(b6.m_vs_lambda, Relation::less);
  EXPECT_EQ(b6.lambda_vs_M, Relation::equal);
  const BoundReport b8 = compute_bounds(8);
  EXPECT_EQ(b8.lambda_vs_M, Relation::less);
  for (unsigned long n = 2; n <= 60; ++n) {
    const BoundReport r = compute_bounds(n);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_FALSE(r.undecided()) << n;
  }
}

TEST(Spectra, Monotone) {
  const MonotoneReport r = check_monotone(50);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.enclosures.size(), 49u);
  EXPECT_EQ(r.enclosures[0].lo, Rational(3));
  EXPECT_EQ(r.enclosures[1].lo, Rational(15));
  EXPECT_THROW(check_monotone(2), std::invalid_argument);
}

TEST(Spectra, ComparisonLemma) {
  EXPECT_EQ(char_poly(3).poly(Rational(3)), Rational(-12));
  EXPECT_EQ(char_poly(4).poly(Rational(15)), Rational(-345));
  for (unsigned long n = 2; n <= 40; ++n) EXPECT_EQ(comparison_lemma_check(n), Verdict::holds) << n;
}

TEST(Spectra, C1Hat) {
  const C1HatReport c2 = c1_hat(2);
  EXPECT_EQ(c2.c1_lo.to_decimal(20), FixedReal::sqrt(Rational(3)).to_decimal(20));
  EXPECT_TRUE(c2.sandwich);
  EXPECT_EQ(c2.window_hi.to_decimal(20), FixedReal::sqrt(Rational(3)).to_decimal(20));
  EXPECT_NEAR(c2.window_lo.to_double(), std::sqrt(24.0) / 4, 1e-15);
  const C1HatReport c6 = c1_hat(6);
  EXPECT_NEAR(c6.c1_lo.to_double(), 13.59, 0.01);
  EXPECT_TRUE(c6.sandwich);
  EXPECT_LE(c6.c1_lo.to_rational(), c6.c1_hi.to_rational());
}

TEST(Spectra, MuMax) {
  EXPECT_EQ(mu_max(1), Rational(3));
  EXPECT_EQ(mu_max(2), Rational(5));
  EXPECT_EQ(mu_max(3), Rational(10));
  EXPECT_THROW(mu_max(0), std::invalid_argument);
  const long expected[] = {3, 5, 10, 14, 21, 27, 36, 44, 55, 65};
  for (unsigned long n = 1; n <= 10; ++n) EXPECT_EQ(mu_max(n), Rational(expected[n - 1]));
}

TEST(Spectra, BoundaryRootCrossCheck) {
  for (unsigned long n = 1; n <= 50; ++n) {
    const BoundaryResult r = boundary_largest_root(n);
    EXPECT_TRUE(r.equal) << n;
    EXPECT_EQ(r.determinant(r.largest_root), Rational(0));
  }
}

TEST(Spectra, AsymptoticRows) {
  const AsymptoticRow r2 = asymptotic_row(2);
  EXPECT_EQ(r2.lambda_over_f1.to_rational(), Rational(1));
  EXPECT_EQ(r2.smallest_root_even.to_rational(), Rational(3));
  EXPECT_NEAR(r2.targets.pi2_quarter.to_double(), 2.4674011002723395, 1e-15);
  const AsymptoticRow r50 = asymptotic_row(50);
  EXPECT_NEAR(r50.lambda_over_f1.to_double(), 0.811728113167843, 1e-13);
  EXPECT_GT(r50.lambda_over_f1.to_double(), 0.789);
  EXPECT_NEAR(r50.targets.eight_pi2.to_double(), 8 / (M_PI * M_PI), 1e-15);
}

TEST(Spectra, DistanceIntervals) {
  const Enclosure d = distance({Rational(1), Rational(2)}, {Rational(5), Rational(6)});
  EXPECT_EQ(d.lo, Rational(3));
  EXPECT_EQ(d.hi, Rational(5));
  EXPECT_EQ(distance({Rational(1), Rational(3)}, {Rational(2), Rational(2)}).lo, Rational(0));
  EXPECT_EQ(strictly_decreasing({{Rational(5), Rational(6)}, {Rational(1), Rational(2)}}), Verdict::holds);
  EXPECT_EQ(strictly_decreasing({{Rational(1), Rational(2)}, {Rational(5), Rational(6)}}), Verdict::fails);
  EXPECT_EQ(strictly_decreasing({{Rational(1), Rational(3)}, {Rational(2), Rational(4)}}), Verdict::undecided);
  const Enclosure p2 = pi_squared_interval(200);
  const Rational ref = parse_rational("9.869604401089358618834490999876151135");  // pi^2, 37 digits
  const Rational slack = make_rational(1, 1'000'000'000'000'000'000L) / 1'000'000'000'000'000'000L;
  EXPECT_LE(p2.lo, ref + slack);
  EXPECT_GE(p2.hi, ref - slack);
  EXPECT_LT(p2.width(), pow2(-190));
}

TEST(Spectra, ConvergenceChecks) {
  const std::vector<unsigned long> ks = {5, 10, 25, 50};
  EXPECT_EQ(smallest_root_approach(Parity::even, ks).verdict, Verdict::holds);
  EXPECT_EQ(smallest_root_approach(Parity::odd, ks).verdict, Verdict::holds);
  EXPECT_EQ(lambda_n4_approach({50, 100, 200}).verdict, Verdict::holds);
}
