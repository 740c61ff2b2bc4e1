#include <gtest/gtest.h>

#include <set>

#include "arcv/errors.hpp"
#include "arcv/qchar.hpp"
#include "arcv/veronese.hpp"

using namespace arcv;

namespace {

SparsePoly X(int j, int i) { return SparsePoly(Variable::x(j, i)); }
SparsePoly A(int i) { return SparsePoly(Variable::a(i)); }
SparsePoly B(int i) { return SparsePoly(Variable::b(i)); }

const Generator& find(const IdealGens& g, int s, int r, int w, int k) {
  for (const auto& gen : g.gens)
    if (gen.s == s && gen.r == r && gen.w == w && gen.k == k) return gen;
  throw std::runtime_error("generator not found");
}

// Brute-force count of x-monomials by degree, q-degree and weight.
long count_monomials(int l, int degree, int qdeg, int weight, int first_var = 0) {
  if (degree == 0) return qdeg == 0 && weight == 0 ? 1 : 0;
  long total = 0;
  const int nvars = (l + 1) * (qdeg + 1);
  for (int v = first_var; v < nvars; ++v) {
    const int j = v % (l + 1), i = v / (l + 1);
    if (i > qdeg) continue;
    total += count_monomials(l, degree - 1, qdeg - i, weight - (2 * j - l), v);
  }
  return total;
}

}  // namespace

TEST(Generators, IndexSets) {
  EXPECT_EQ(generator_indices(1).size(), 0u);
  EXPECT_EQ(generator_indices(2), (std::vector<std::array<int, 3>>{{0, 2, 0}}));
  EXPECT_EQ(generator_indices(3).size(), 4u);
  int count04 = 0;
  for (auto [s, r, w] : generator_indices(4))
    if (s == 0 && r == 4) ++count04;
  EXPECT_EQ(count04, 3);
}

TEST(Generators, ConicSeries) {
  const TSeries q = q_series(0, 2, 0, 3);
  const TSeries expected = tseries_add(tseries_mul(x_series(0, 3), x_series(2, 3)),
                                       tseries_scale(tseries_mul(x_series(1, 3), x_series(1, 3)), -1));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(q[k], expected[k]);
}

TEST(Generators, CubicRelations) {
  // x0 x3 - x1 x2 and x0' x3 - 2 x1' x2 + x2' x1
  const int t = 3;
  const TSeries q0 = q_series(0, 3, 0, t);
  const TSeries x0x3 = tseries_mul(x_series(0, t), x_series(3, t));
  const TSeries x1x2 = tseries_mul(x_series(1, t), x_series(2, t));
  for (int k = 0; k <= t; ++k) EXPECT_EQ(q0[k], x0x3[k] - x1x2[k]);

  const TSeries q1 = q_series(0, 3, 1, t);
  auto d = [&](int j) { return tseries_derivative(x_series(j, t + 1), 1); };
  const TSeries expected = tseries_add(
      tseries_add(tseries_mul(d(0), x_series(3, t)),
                  tseries_scale(tseries_mul(d(1), x_series(2, t)), -2)),
      tseries_mul(d(2), x_series(1, t)));
  for (int k = 0; k <= t; ++k) EXPECT_EQ(q1[k], expected[k]) << k;
}

TEST(Generators, BuildQ) {
  const auto gens = build_Q(JetRingSpec{2, 2, 2, 2});
  EXPECT_EQ(gens.gens.size(), 3u);
  EXPECT_EQ(find(gens, 0, 2, 0, 0).poly, X(0, 0) * X(2, 0) - X(1, 0) * X(1, 0));
}

TEST(Generators, BuildQprime) {
  const JetRingSpec spec{3, 2, 2, 2};
  const auto gp = build_Qprime(spec);
  EXPECT_EQ(find(gp, 0, 3, 1, 0).poly, X(0, 1) * X(3, 0));
  EXPECT_EQ(find(build_Qprime(JetRingSpec{2, 2, 1, 1}), 0, 2, 0, 1).poly,
            X(0, 0) * X(2, 1) + X(0, 1) * X(2, 0));
  for (int l = 2; l <= 5; ++l)
    EXPECT_EQ(build_Q({l, 2, 3, 3}).gens.size(), build_Qprime({l, 2, 3, 3}).gens.size());
}

TEST(Generators, LeadingComponentIsPairProduct) {
  for (int l = 2; l <= 5; ++l) {
    const JetRingSpec spec{l, 2, 4, 4};
    const auto q = build_Q(spec), qp = build_Qprime(spec);
    ASSERT_EQ(q.gens.size(), qp.gens.size());
    for (std::size_t i = 0; i < q.gens.size(); ++i) {
      const auto& g = q.gens[i];
      const auto& h = find(qp, g.s, g.r, g.w, g.k);
      const SparsePoly expected = g.s % 2 == 0 ? h.poly : -h.poly;
      EXPECT_EQ(leading_component_prime(g.poly, l), expected)
          << l << ": " << g.s << "," << g.r << "," << g.w << "," << g.k;
    }
  }
}

TEST(Generators, AreHomogeneous) {
  for (int l = 2; l <= 5; ++l)
    for (const auto& g : build_Q({l, 2, 5, 5}).gens) {
      const auto d = multidegree(g.poly, l);
      ASSERT_TRUE(d);
      EXPECT_EQ(d->deg1, 2);
      EXPECT_EQ(d->deg2, g.k + g.w);
      EXPECT_EQ(d->deg3, 2 * (g.s + g.r) - 2 * l);
    }
}

TEST(Generators, DegreeOfDerivativeRelation) {
  const auto d = multidegree(q_series(0, 3, 1, 3)[3], 3);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->deg1, 2);
  EXPECT_EQ(d->deg2, 4);
  EXPECT_EQ(d->deg3, 0);
}

TEST(VeroneseMap, ConstantTerms) {
  for (int l = 1; l <= 4; ++l) {
    const VeroneseMap nu(l, 2);
    for (int j = 0; j <= l; ++j)
      EXPECT_EQ(nu.image(j, 0), A(0).pow(l - j) * B(0).pow(j));
    EXPECT_THROW(nu.image(0, 3), TruncationError);
  }
}

TEST(VeroneseMap, KernelExamples) {
  EXPECT_FALSE(kernel_membership(X(0, 0), 1, 2));
  EXPECT_TRUE(kernel_membership(X(1, 0) * X(1, 0) - X(0, 0) * X(2, 0), 2, 2));
  const SparsePoly c1 = tseries_mul(x_series(0, 1), x_series(3, 1))[1] -
                        tseries_mul(x_series(1, 1), x_series(2, 1))[1];
  EXPECT_TRUE(kernel_membership(c1, 3, 1));
  EXPECT_THROW(kernel_membership(X(0, 5), 2, 4), TruncationError);
}

TEST(VeroneseMap, GeneratorsMapToZero) {
  for (int l = 2; l <= 4; ++l) {
    const VeroneseMap nu(l, 8 + l);
    for (const auto& g : build_Q({l, 2, 8, 8}).gens)
      if (g.k <= 8) EXPECT_TRUE(nu.apply(g.poly).is_zero()) << g.s << g.r << g.w << g.k;
  }
}

TEST(VeroneseMap, PairProductsDoNotMapToZero) {
  for (const auto& g : build_Qprime({3, 2, 2, 2}).gens)
    EXPECT_FALSE(kernel_membership(g.poly, 3, 6));
}

TEST(JetMonomials, CountAndOrder) {
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 3; ++d)
        for (int w = -l * n; w <= l * n; w += 2) {
          const auto ms = jet_monomials(l, n, d, w);
          EXPECT_EQ(static_cast<long>(ms.size()), count_monomials(l, n, d, w));
          std::set<std::vector<Monomial::Factor>> unique;
          for (std::size_t i = 0; i < ms.size(); ++i) {
            unique.insert(ms[i].factors());
            if (i > 0) EXPECT_TRUE(grevlex_greater(ms[i - 1], ms[i]));
          }
          EXPECT_EQ(unique.size(), ms.size());
        }
}

TEST(Quotient, DegreeOneIsFree) {
  for (int l = 1; l <= 4; ++l) {
    LaurentCharacter expected(4);
    for (int j = 0; j <= l; ++j) expected.add(2 * j - l, QSeries(4, {1, 1, 1, 1, 1}));
    for (auto kind : {IdealKind::Q, IdealKind::Qprime, IdealKind::KernelNu})
      EXPECT_EQ(quotient_character(JetRingSpec::make(l, 1, 4), kind), expected);
  }
}

TEST(Quotient, ConicPieceAtDegreeZero) {
  const auto res = quotient_pieces(JetRingSpec::make(2, 2, 2), IdealKind::Q);
  bool seen = false;
  for (const auto& p : res.pieces)
    if (p.weight == 0 && p.qdeg == 0) {
      EXPECT_EQ(p.ambient, 2);
      EXPECT_EQ(p.rank, 1);
      EXPECT_EQ(p.quotient, 1);
      seen = true;
    }
  EXPECT_TRUE(seen);
}

TEST(Quotient, KernelImageAtDegreeZero) {
  const auto res = quotient_pieces(JetRingSpec::make(2, 2, 2), IdealKind::KernelNu);
  long ambient = 0, rank = 0;
  for (const auto& p : res.pieces)
    if (p.qdeg == 0) {
      ambient += p.ambient;
      rank += p.rank;
    }
  EXPECT_EQ(ambient, 6);
  EXPECT_EQ(rank, 5);
}

TEST(Quotient, ShortSeriesAreInconclusive) {
  JetRingSpec spec = JetRingSpec::make(2, 2, 4);
  spec.tmax = 2;
  EXPECT_THROW(quotient_character(spec, IdealKind::Q), TruncationError);
  EXPECT_NO_THROW(quotient_character(spec, IdealKind::KernelNu));
}

TEST(Quotient, WorkerCountDoesNotMatter) {
  const auto spec = JetRingSpec::make(3, 2, 4);
  EXPECT_EQ(quotient_character(spec, IdealKind::Q, 1), quotient_character(spec, IdealKind::Q, 3));
}

TEST(Quotient, LeadingTermIdealIsSmaller) {
  for (int l = 2; l <= 3; ++l)
    for (int n = 2; n <= 3; ++n) {
      const auto spec = JetRingSpec::make(l, n, 4);
      EXPECT_TRUE(dominated_by(quotient_character(spec, IdealKind::Q),
                               quotient_character(spec, IdealKind::Qprime)));
    }
}

TEST(VerifyReduced, LevelOne) {
  const auto r = verify_reduced(1, 3, 5);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.rows.empty());
}

TEST(VerifyReduced, CubicDerivativeRelation) {
  const auto r = verify_reduced(3, 2, 6);
  EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
}
