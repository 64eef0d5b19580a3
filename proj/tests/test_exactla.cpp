#include <gtest/gtest.h>

#include <random>

#include "semiorth/matrix.hpp"

using namespace semiorth;

namespace {

Matrix<Rational> q_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec<Rational>> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    Vec<Rational> v;
    for (int x : row) v.emplace_back(x);
    cols = v.size();
    r.push_back(v);
  }
  return Matrix<Rational>::from_rows(r, cols);
}

template <class K>
Matrix<K> random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& f, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.integer<K>(d(rng));
  return m;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix<Rational>::identity(3)), 3u);
  EXPECT_EQ(rank(Matrix<Rational>(2, 5)), 0u);
  EXPECT_EQ(rank(q_matrix({{1, 2}, {2, 4}})), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix<Rational>::identity(4)).empty());
  EXPECT_EQ(kernel_basis(Matrix<Rational>(2, 3)).size(), 3u);
  auto k = kernel_basis(q_matrix({{1, 2}, {2, 4}}));
  ASSERT_EQ(k.size(), 1u);
  // proportional to (2, -1)
  EXPECT_EQ(k[0][0] * Rational(-1), k[0][1] * Rational(2));
}

TEST(Solve, Examples) {
  Vec<Rational> b{Rational(3), Rational(-7)};
  EXPECT_EQ(*solve_linear(Matrix<Rational>::identity(2), b), b);
  auto m = q_matrix({{1, 2}, {2, 4}});
  EXPECT_FALSE(solve_linear(m, Vec<Rational>{1, 3}).has_value());
  auto x = solve_linear(m, Vec<Rational>{1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + 2 * (*x)[1], Rational(1));
  EXPECT_THROW(solve_linear(m, Vec<Rational>{1}), DimensionError);
}

TEST(ModP, Arithmetic) {
  ModP a(3, 7), b(5, 7);
  EXPECT_EQ(a + b, ModP(1, 7));
  EXPECT_EQ(a * b, ModP(1, 7));
  EXPECT_EQ(a / a, ModP(1));
  EXPECT_EQ(ModP(-1) * a, ModP(4, 7));
  EXPECT_TRUE(is_zero(ModP(7, 7)));
  EXPECT_THROW(inverse(ModP(0, 7)), ArithmeticError);
  EXPECT_THROW(ModP(1, 5) + ModP(1, 7), ArithmeticError);
  EXPECT_EQ(Field::prime(7).parse<ModP>("1/2"), ModP(4, 7));
  EXPECT_EQ(Field::rationals().parse<Rational>("-6/4"), Rational(-3, 2));
  EXPECT_THROW(Field::prime(5).parse<ModP>("1/5"), std::invalid_argument);
  EXPECT_THROW(Field::prime(6), std::invalid_argument);
}

TEST(Properties, RankTransposeKernelSolveOverQ) {
  std::mt19937_64 rng(1);
  Field q = Field::rationals();
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto m = random_int_matrix<Rational>(rng, r, c, q, trial % 3 == 0 ? 1 : 3);
    std::size_t rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rk, c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero_vec(m.apply(v)));
    Vec<Rational> b(r);
    for (auto& x : b) x = int(rng() % 5) - 2;
    auto sol = solve_linear(m, b);
    Matrix<Rational> aug(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
      aug(i, c) = b[i];
    }
    if (sol) {
      EXPECT_EQ(m.apply(*sol), b);
    } else {
      EXPECT_GT(rank(aug), rk);
    }
  }
}

TEST(Properties, PrimeFieldAgreesWithReductionOfRationalComputation) {
  std::mt19937_64 rng(2);
  Field q = Field::rationals(), f7 = Field::prime(7);
  int agreeing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    std::uniform_int_distribution<int> d(-9, 9);
    Matrix<Rational> mq(r, c);
    Matrix<ModP> mp(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        int x = d(rng);
        mq(i, j) = x;
        mp(i, j) = f7.integer<ModP>(x);
      }
    std::size_t rq = rank(mq), rp = rank(mp);
    EXPECT_LE(rp, rq);
    // Pivots coincide exactly when every leading column block keeps its rank.
    bool good = true;
    for (std::size_t k = 1; k <= c && good; ++k) {
      Matrix<Rational> sq(r, k);
      Matrix<ModP> sp(r, k);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) sq(i, j) = mq(i, j), sp(i, j) = mp(i, j);
      good = rank(sq) == rank(sp);
    }
    if (!good) continue;
    Matrix<Rational> eq = mq;
    Matrix<ModP> ep = mp;
    auto pq = rref(eq);
    auto pp = rref(ep);
    ASSERT_EQ(pq, pp);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Rational x = eq(i, j);
        EXPECT_EQ(f7.parse<ModP>(x.get_str()), ep(i, j));
      }
    ++agreeing;
  }
  EXPECT_GT(agreeing, 100);
}

TEST(Subspace, QuotientCoordinates) {
  Subspace<Rational> s(3);
  s.add(Vec<Rational>{1, 1, 0});
  QuotientSpace<Rational> q(s);
  EXPECT_EQ(q.dim(), 2u);
  Vec<Rational> v{2, 3, 5};
  EXPECT_EQ(q.project(q.lift(q.project(v))), q.project(v));
  EXPECT_TRUE(is_zero_vec(q.project(Vec<Rational>{4, 4, 0})));
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(q_matrix({{1, 2}, {3, 4}})), Rational(-2));
  EXPECT_EQ(determinant(q_matrix({{0, 1}, {1, 0}})), Rational(-1));
  auto inv = invert(q_matrix({{2, 0}, {0, 4}}));
  ASSERT_TRUE(inv);
  EXPECT_EQ((*inv)(1, 1), Rational(1, 4));
  EXPECT_FALSE(invert(q_matrix({{1, 2}, {2, 4}})).has_value());
}
