#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "arcv/character.hpp"
#include "arcv/echelon.hpp"
#include "arcv/errors.hpp"
#include "arcv/qseries.hpp"
#include "oracle.hpp"

using namespace arcv;

namespace {

QSeries random_series(std::mt19937& rng, int qmax) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int k = 0; k <= qmax; ++k) c.push_back(make_rational(num(rng), den(rng)));
  return QSeries(qmax, c);
}

}  // namespace

TEST(QSeries, DifferenceOfSquares) {
  EXPECT_EQ(QSeries(2, {1, 1}) * QSeries(2, {1, -1}), QSeries(2, {1, 0, -1}));
}

TEST(QSeries, UnitIsNeutral) {
  const QSeries x(3, {2, -1, 0, 5});
  EXPECT_EQ(x * QSeries::one(3), x);
}

TEST(QSeries, CubeTelescopes) {
  EXPECT_EQ(QSeries(3, {1, 1, 1}) * QSeries(3, {1, -1}), QSeries(3, {1, 0, 0, -1}));
}

TEST(QSeries, TruncationDropsHighTerms) {
  EXPECT_EQ(QSeries(2, {1, 1, 1}) * QSeries(2, {0, 0, 1}), QSeries(2, {0, 0, 1}));
}

TEST(QSeries, MismatchedOrderIsAnError) {
  EXPECT_THROW(QSeries(2) + QSeries(3), UsageError);
  EXPECT_THROW(qseries_mul(QSeries(2), QSeries(1)), UsageError);
}

TEST(QSeries, GeometricInverse) {
  EXPECT_EQ(qseries_inverse(QSeries(3, {1, -1})), QSeries(3, {1, 1, 1, 1}));
  EXPECT_EQ(qseries_inverse(QSeries::one(5)), QSeries::one(5));
}

TEST(QSeries, InversePochhammerTwo) {
  EXPECT_EQ(qseries_inverse(q_pochhammer(2, 3)), QSeries(3, {1, 1, 2, 2}));
}

TEST(QSeries, SingularInverse) {
  EXPECT_THROW(qseries_inverse(QSeries(3, {0, 1})), SingularError);
}

TEST(QSeries, PochhammerMatchesOracle) {
  for (int m = 0; m <= 6; ++m) {
    const auto expected = oracle::truncate(oracle::pochhammer(m), 10);
    EXPECT_EQ(q_pochhammer(m, 10), QSeries(10, expected)) << m;
  }
}

TEST(QSeries, InverseMatchesRecursiveOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries a = random_series(rng, 6);
    if (a[0] == 0) a.set(0, 1);
    const auto expected = oracle::series_inverse(a.coeffs(), 6);
    EXPECT_EQ(qseries_inverse(a), QSeries(6, expected));
    EXPECT_EQ(a * qseries_inverse(a), QSeries::one(6));
  }
}

TEST(QSeries, RingAxiomsOnRandomSeries) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(QSeries, ShiftAndEvaluation) {
  const QSeries a(4, {1, 2, 3});
  EXPECT_EQ(a.shifted(2), QSeries(4, {0, 0, 1, 2, 3}));
  EXPECT_EQ(a.shifted(3), QSeries(4, {0, 0, 0, 1, 2}));
  EXPECT_EQ(a.at_one(), 6);
  EXPECT_EQ(a.top_degree(), 2);
  EXPECT_EQ(QSeries(4).top_degree(), -1);
  EXPECT_EQ(a.retruncated(1), QSeries(1, {1, 2}));
}

TEST(QSeries, TextForm) {
  EXPECT_EQ(QSeries(3, std::vector<Rational>{1, make_rational(-1, 2), 0, 3}).to_string(),
            "1 - 1/2*q + 3*q^3 + O(q^4)");
  EXPECT_EQ(QSeries(2).to_string(), "0 + O(q^3)");
}

TEST(Rational, Helpers) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_TRUE(is_integer(make_rational(4, 2)));
  EXPECT_FALSE(is_integer(make_rational(1, 3)));
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
}

TEST(LaurentCharacter, ZeroSeriesAreAbsent) {
  LaurentCharacter a(3), b(3);
  a.add(2, QSeries(3));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.support().empty());
  a.add(0, 1, 2);
  a.add(0, 7, 5);  // past qmax
  EXPECT_EQ(a.coefficient(0, 1), 2);
  EXPECT_EQ(a.total_at_one(), 2);
  EXPECT_NE(a, b);
}

TEST(LaurentCharacter, DominationIsCoefficientwise) {
  LaurentCharacter a(2), b(2);
  a.add(0, QSeries(2, {1, 1}));
  b.add(0, QSeries(2, {1, 2}));
  EXPECT_TRUE(dominated_by(a, b));
  EXPECT_FALSE(dominated_by(b, a));
  b.add(4, QSeries(2, {0, 0, -1}));
  EXPECT_FALSE(dominated_by(a, b));
}

TEST(LaurentCharacter, ScalingBySeries) {
  LaurentCharacter a(3);
  a.add(-1, QSeries::one(3));
  a.add(1, QSeries::one(3));
  a *= qseries_inverse(QSeries(3, {1, -1}));
  EXPECT_EQ(a.at(1), QSeries(3, {1, 1, 1, 1}));
  EXPECT_EQ(a.support(), (std::vector<int>{-1, 1}));
}

TEST(RowEchelon, UnitVectors) {
  RowEchelon m(2);
  EXPECT_TRUE(m.insert({{1, 1}}));
  EXPECT_TRUE(m.insert({{0, 1}}));
  EXPECT_EQ(m.rank(), 2u);
}

TEST(RowEchelon, ColinearRows) {
  RowEchelon m(2);
  EXPECT_TRUE(m.insert({{0, 1}, {1, 1}}));
  EXPECT_FALSE(m.insert({{0, 2}, {1, 2}}));
  EXPECT_EQ(m.rank(), 1u);
}

TEST(RowEchelon, QuadricRows) {
  // columns x^2, xy, y^2 and rows x^2 - y^2, x^2 + y^2, x^2
  RowEchelon m(3);
  m.insert({{0, 1}, {2, -1}});
  m.insert({{0, 1}, {2, 1}});
  EXPECT_FALSE(m.insert({{0, 1}}));
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_FALSE(m.contains({{1, 1}}));
  EXPECT_TRUE(m.contains({{2, 5}}));
}

TEST(RowEchelon, OutOfRangeColumn) {
  RowEchelon m(2);
  EXPECT_THROW(m.insert({{2, 1}}), UsageError);
}

TEST(RowEchelon, NormalizeMergesAndDrops) {
  const SparseRow r = normalize_row({{3, 1}, {1, 2}, {3, -1}, {0, 0}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].first, 1u);
  EXPECT_EQ(r[0].second, 2);
}

// Rank by dense Gaussian elimination, as a reference.
std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rank && a[r][c] != 0) {
        const Rational f = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
      }
    ++rank;
  }
  return rank;
}

TEST(RowEchelon, RankMatchesDenseAndIsInvariant) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-2, 2), sc(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 2 + trial % 6, cols = 3 + trial % 5;
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, Rational(0)));
    for (auto& row : dense)
      for (auto& x : row)
        if (rng() % 3 == 0) x = val(rng);
    // a dependent row
    if (rows > 2)
      for (int c = 0; c < cols; ++c) dense[rows - 1][c] = dense[0][c] * 3 - dense[1][c];
    auto sparse = [&](const std::vector<Rational>& row, const Rational& s) {
      SparseRow out;
      for (int c = 0; c < cols; ++c)
        if (row[c] != 0) out.emplace_back(c, row[c] * s);
      return out;
    };
    RowEchelon m(cols);
    for (const auto& row : dense) m.insert(sparse(row, 1));
    EXPECT_EQ(m.rank(), dense_rank(dense));

    std::vector<int> order(rows);
    for (int i = 0; i < rows; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    RowEchelon permuted(cols);
    for (int i : order) permuted.insert(sparse(dense[i], make_rational(sc(rng), sc(rng))));
    EXPECT_EQ(permuted.rank(), m.rank());
  }
}

TEST(GradedPieceMatrix, KeyedColumns) {
  GradedPieceMatrix<std::string> m({"xx", "xy", "yy"});
  EXPECT_TRUE(m.insert(std::vector<std::pair<std::string, Rational>>{{"xx", 1}, {"yy", -1}}));
  EXPECT_FALSE(m.contains(std::vector<std::pair<std::string, Rational>>{{"zz", 1}}));
  EXPECT_THROW(m.insert(std::vector<std::pair<std::string, Rational>>{{"zz", 1}}), UsageError);
  EXPECT_THROW(GradedPieceMatrix<std::string>({"a", "a"}), UsageError);
  EXPECT_EQ(m.rank(), 1u);
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(make_rational(1, 0), SingularError);
}
