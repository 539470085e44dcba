#include <gtest/gtest.h>

#include <random>

#include "theta_lab/error.hpp"
#include "theta_lab/hilbert_fit.hpp"

namespace theta_lab {
namespace {

HilbertFit reference_fit() { return fit_hilbert(1, 10, 58); }

TEST(HilbertFit, ReferenceParameters) {
  const auto fit = reference_fit();
  EXPECT_EQ(fit.gamma, Rational(1, 604800));
  EXPECT_EQ(fit.sigma, Rational(-35));
  EXPECT_EQ(fit.pi, Rational(1284));
  EXPECT_EQ(fit.chern_degree, BigInt(6));
}

TEST(HilbertFit, ReproducesInputs) {
  const auto fit = reference_fit();
  EXPECT_EQ(evaluate(fit, 0), Rational(1));
  EXPECT_EQ(evaluate(fit, 1), Rational(10));
  EXPECT_EQ(evaluate(fit, 2), Rational(58));
}

TEST(HilbertFit, VanishesAtMinusOneToMinusFive) {
  const auto fit = reference_fit();
  for (long n = -5; n <= -1; ++n) EXPECT_TRUE(evaluate(fit, n).is_zero()) << n;
  EXPECT_FALSE(evaluate(fit, -6).is_zero());
}

TEST(HilbertFit, SymmetricAboutMinusThree) {
  const auto fit = reference_fit();
  EXPECT_EQ(symmetry_center(fit), Rational(-3));
  // p(n) = p(-6 - n) coefficientwise: substitute n -> -6 - n in the expansion.
  const auto p = fit.expanded();
  ASSERT_EQ(p.degree(), 10);
  const Polynomial<Rational> reflect({Rational(-6), Rational(-1)});
  Polynomial<Rational> composed;
  for (int i = p.degree(); i >= 0; --i) composed = composed * reflect + Polynomial<Rational>::constant(p[i]);
  EXPECT_EQ(composed, p);
}

TEST(HilbertFit, ExpansionAgreesWithEvaluate) {
  const auto fit = reference_fit();
  const auto p = fit.expanded();
  for (long n = -10; n <= 10; ++n) EXPECT_EQ(p.eval(Rational(n)), evaluate(fit, n));
  EXPECT_EQ(p.leading() * Rational(factorial(10)), Rational(fit.chern_degree));
}

TEST(HilbertFit, CanonicalPower) { EXPECT_EQ(canonical_power(), -6); }

// Solving the system symbolically gives 10! gamma = 90 p0 - 20 p1 + 2 p2, so the chern
// degree is integral for every integer input and the NonIntegralChern guard is defensive.
TEST(HilbertFit, ChernDegreeIsLinearInInputs) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    const long a = dist(rng), b = dist(rng), c = dist(rng);
    const long chern = 90 * a - 20 * b + 2 * c;
    if (chern == 0) continue;
    const auto fit = fit_hilbert(a, b, c);
    ASSERT_EQ(fit.chern_degree, BigInt(chern));
    ASSERT_EQ(evaluate(fit, 2), Rational(c));
  }
}

TEST(HilbertFit, SingularSystemRejected) {
  try {
    fit_hilbert(1, 10, 55);
    FAIL() << "expected SingularSystem";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularSystem);
  }
}

}  // namespace
}  // namespace theta_lab
