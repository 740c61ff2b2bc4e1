#include <gtest/gtest.h>

#include <random>

#include "arcv/errors.hpp"
#include "arcv/poly.hpp"

using namespace arcv;

namespace {

SparsePoly X(int j, int i) { return SparsePoly(Variable::x(j, i)); }
SparsePoly A(int i) { return SparsePoly(Variable::a(i)); }

SparsePoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), idx(0, 2);
  SparsePoly p;
  for (int t = 0; t < 4; ++t) {
    SparsePoly term = coef(rng);
    for (int f = 0; f < 2; ++f) term = term * X(idx(rng), idx(rng));
    p += term;
  }
  return p;
}

}  // namespace

TEST(Variable, KeyRoundTrip) {
  for (const Variable v : {Variable::x(3, 7), Variable::u(2), Variable::z(1), Variable::a(4),
                           Variable::b(0), Variable::p(3)}) {
    EXPECT_EQ(Variable::from_key(v.key()), v);
  }
  EXPECT_EQ(Variable::x(1, 3).name(), "x1_3");
  EXPECT_EQ(Variable::u(1).name(), "u1");
  EXPECT_EQ(Variable::p(2).name(), "p2");
  EXPECT_THROW(Variable::u(0), UsageError);
}

TEST(Monomial, ProductAndDegree) {
  const Monomial m = Monomial::of(Variable::x(0, 1), 2) * Monomial::of(Variable::x(2, 0));
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_EQ(m.exponent(Variable::x(0, 1)), 2u);
  EXPECT_EQ(m.exponent(Variable::x(1, 0)), 0u);
  EXPECT_TRUE(Monomial().is_one());
}

TEST(Monomial, GrevlexOrder) {
  const Monomial x = Monomial::of(Variable::x(0, 0));
  const Monomial y = Monomial::of(Variable::x(1, 0));
  const Monomial z = Monomial::of(Variable::x(2, 0));
  // higher total degree wins
  EXPECT_TRUE(grevlex_greater(z * z, x));
  // x^2 > xy > y^2 > xz > yz > z^2 with x > y > z
  EXPECT_TRUE(grevlex_greater(x * x, x * y));
  EXPECT_TRUE(grevlex_greater(x * y, y * y));
  EXPECT_TRUE(grevlex_greater(y * y, x * z));
  EXPECT_TRUE(grevlex_greater(x * z, y * z));
  EXPECT_TRUE(grevlex_greater(y * z, z * z));
  EXPECT_FALSE(grevlex_greater(x, x));
}

TEST(SparsePoly, ArithmeticAndText) {
  const SparsePoly q = X(0, 0) * X(2, 0) - X(1, 0) * X(1, 0);
  // x1^2 > x0*x2 in grevlex with x0 > x1 > x2
  EXPECT_EQ(q.to_string(), "-x1_0^2 + x0_0*x2_0");
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ((SparsePoly(2) * X(0, 0)).coefficient(Monomial::of(Variable::x(0, 0))), 2);
  EXPECT_EQ(SparsePoly(make_rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(SparsePoly().to_string(), "0");
}

TEST(SparsePoly, RingAxioms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SparsePoly, NilpotentMask) {
  const NilpotentMask mask{Family::U, 1};
  const SparsePoly u(Variable::u(1));
  EXPECT_TRUE(multiply(u, u, &mask).is_zero());
  EXPECT_FALSE(multiply(u, SparsePoly(Variable::u(2)), &mask).is_zero());
  EXPECT_TRUE(u.pow(2, &mask).is_zero());
  EXPECT_EQ(u.pow(2), u * u);
}

TEST(SparsePoly, Derivative) {
  const SparsePoly p = X(0, 0) * X(0, 0) * X(1, 0) + 3 * X(1, 0);
  EXPECT_EQ(p.derivative(Variable::x(0, 0)), 2 * X(0, 0) * X(1, 0));
  EXPECT_EQ(p.derivative(Variable::x(1, 0)), X(0, 0) * X(0, 0) + 3);
}

TEST(TSeries, ConvolutionCoefficient) {
  const TSeries prod = tseries_mul(x_series(0, 3), x_series(1, 3));
  EXPECT_EQ(prod[1], X(0, 0) * X(1, 1) + X(0, 1) * X(1, 0));
}

TEST(TSeries, UnitIsNeutral) {
  const TSeries f = x_series(2, 3);
  const TSeries prod = tseries_mul(f, TSeries::constant(1, 3));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(prod[k], f[k]);
}

TEST(TSeries, SquareOfA) {
  const TSeries sq = tseries_mul(a_series(2), a_series(2));
  EXPECT_EQ(sq[2], 2 * A(0) * A(2) + A(1) * A(1));
}

TEST(TSeries, Derivatives) {
  EXPECT_EQ(tseries_derivative(x_series(0, 3), 1)[0], X(0, 1));
  const TSeries f = x_series(1, 4);
  const TSeries same = tseries_derivative(f, 0);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(same[k], f[k]);
  EXPECT_EQ(tseries_derivative(x_series(1, 4), 2)[1], 6 * X(1, 3));
  EXPECT_EQ(tseries_derivative(x_series(1, 4), 2).tmax(), 2);
  EXPECT_THROW(tseries_derivative(x_series(1, 2), 3), UsageError);
}

TEST(TSeries, LeibnizRule) {
  // (fg)' = f'g + fg' coefficientwise
  const TSeries f = x_series(0, 5), g = x_series(1, 5);
  const TSeries lhs = tseries_derivative(tseries_mul(f, g), 1);
  const TSeries rhs = tseries_add(tseries_mul(tseries_derivative(f, 1), g),
                                  tseries_mul(f, tseries_derivative(g, 1)));
  for (int k = 0; k <= lhs.tmax(); ++k) EXPECT_EQ(lhs[k], rhs[k]) << k;
}

TEST(Substitute, IsAHomomorphism) {
  std::mt19937 rng(9);
  const Substitution sigma = [](const Variable& v) -> std::optional<SparsePoly> {
    if (v.family != Family::X) return std::nullopt;
    return SparsePoly(Variable::a(v.inner)) * (v.outer + 1) + SparsePoly(Variable::b(v.outer));
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng);
    EXPECT_EQ(substitute(p * q, sigma), substitute(p, sigma) * substitute(q, sigma));
    EXPECT_EQ(substitute(p + q, sigma), substitute(p, sigma) + substitute(q, sigma));
  }
  EXPECT_THROW(substitute(SparsePoly(Variable::u(1)), sigma), UsageError);
  EXPECT_EQ(substitute(SparsePoly(5), sigma), SparsePoly(5));
}

TEST(MultiDegree, ReadOffDefinitions) {
  const auto d = multidegree(X(0, 2) * X(2, 0), 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->deg1, 2);
  EXPECT_EQ(d->deg2, 2);
  EXPECT_EQ(d->deg3, 0);
  EXPECT_EQ(d->deg_prime, 4);
  EXPECT_EQ(d->deg_by_var, (std::vector<int>{1, 0, 1}));
}

TEST(MultiDegree, ConstantsAndInhomogeneous) {
  const auto one = multidegree(SparsePoly(1), 3);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->deg1, 0);
  EXPECT_EQ(one->deg2, 0);
  EXPECT_EQ(one->deg3, 0);
  EXPECT_FALSE(multidegree(X(0, 0) + X(0, 0) * X(1, 0), 2));
  EXPECT_FALSE(multidegree(X(0, 0) + X(0, 1), 2));
  EXPECT_FALSE(multidegree(X(0, 0) + X(1, 0), 2));
}

TEST(MultiDegree, ModuleVariables) {
  const auto d = multidegree(SparsePoly(Variable::u(1)) * SparsePoly(Variable::z(2)).pow(3), 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->deg1, 1);
  EXPECT_EQ(d->deg2, 3);
  EXPECT_EQ(d->deg3, -2);
}
