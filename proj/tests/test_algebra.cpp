#include <gtest/gtest.h>

#include "semiorth/quiver.hpp"
#include "semiorth/radical.hpp"
#include "test_util.hpp"

using namespace semiorth;
using semiorth::testing::group_algebra;
using semiorth::testing::matrix_algebra;
using semiorth::testing::upper_triangular;

namespace {

const Field kQ = Field::rationals();

Algebra<Rational> kronecker() { return from_quiver(kQ, kronecker_presentation<Rational>()); }

QuiverPresentation<Rational> loop_with_power(int n) {
  QuiverPresentation<Rational> p;
  p.vertices = {"o"};
  p.arrows = {{"x", "o", "o"}};
  p.relations = {{PathTerm<Rational>{Rational(1), std::vector<std::string>(n, "x")}}};
  return p;
}

/// Brute-force radical over a tiny prime field: x is in rad iff x*y is
/// nilpotent for every y. Returns the number of radical elements.
std::size_t brute_force_radical_size(const Algebra<ModP>& a) {
  std::uint32_t p = a.field().p;
  std::size_t n = a.dim(), total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  auto decode = [&](std::size_t code) {
    Vec<ModP> v(n);
    for (std::size_t i = 0; i < n; ++i, code /= p) v[i] = ModP(static_cast<std::int64_t>(code % p), p);
    return v;
  };
  auto nilpotent = [&](const Vec<ModP>& z) {
    Vec<ModP> w = z;
    for (std::size_t k = 0; k < n + 1; ++k) w = a.mul(w, z);
    return is_zero_vec(w);
  };
  std::size_t count = 0;
  for (std::size_t cx = 0; cx < total; ++cx) {
    Vec<ModP> x = decode(cx);
    bool in = true;
    for (std::size_t cy = 0; cy < total && in; ++cy) in = nilpotent(a.mul(x, decode(cy)));
    count += in;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(StructureConstants, FieldAndDualNumbers) {
  std::vector<std::vector<Vec<Rational>>> t{{{Rational(1)}}};
  auto k = Algebra<Rational>::from_structure_constants(kQ, t, {Rational(1)});
  EXPECT_EQ(k.dim(), 1u);
  auto d = truncated_polynomial<Rational>(kQ, 2);
  EXPECT_NO_THROW(Algebra<Rational>::from_structure_constants(kQ, d.dense_table(), d.unit()));
}

TEST(StructureConstants, DetectsNonAssociativity) {
  // 3-dim table with b0 b0 = b0 but (b1 b1) b2 != b1 (b1 b2).
  std::vector<std::vector<Vec<Rational>>> t(3, std::vector<Vec<Rational>>(3, zero_vec<Rational>(3)));
  for (int i = 0; i < 3; ++i) t[0][i][i] = t[i][0][i] = 1;
  t[1][1][2] = 1;
  t[2][1][1] = 1;
  try {
    Algebra<Rational>::from_structure_constants(kQ, t, unit_vec<Rational>(3, 0));
    FAIL() << "expected NotAssociative";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::NotAssociative);
  }
  auto d = truncated_polynomial<Rational>(kQ, 2);
  try {
    Algebra<Rational>::from_structure_constants(kQ, d.dense_table(), unit_vec<Rational>(2, 1));
    FAIL() << "expected UnitFails";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::UnitFails);
  }
}

TEST(Quiver, Examples) {
  QuiverPresentation<Rational> point;
  point.vertices = {"o"};
  EXPECT_EQ(from_quiver(kQ, point).dim(), 1u);
  auto kr = kronecker();
  EXPECT_EQ(kr.dim(), 4u);
  EXPECT_EQ(kr.labels(), (std::vector<std::string>{"v0", "v1", "a", "b"}));
  auto dual = from_quiver(kQ, loop_with_power(2));
  EXPECT_EQ(dual.dim(), 2u);
  EXPECT_NO_THROW(dual.validate());
  auto cubic = from_quiver(kQ, loop_with_power(3));
  EXPECT_EQ(cubic.dim(), 3u);
  EXPECT_TRUE(same_table(cubic, truncated_polynomial<Rational>(kQ, 3)));
}

TEST(Quiver, ErrorsAndInfiniteDimension) {
  QuiverPresentation<Rational> loop;
  loop.vertices = {"o"};
  loop.arrows = {{"x", "o", "o"}};
  try {
    from_quiver(kQ, loop, 8);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::InfiniteDimensional);
  }
  auto bad = loop_with_power(2);
  bad.relations[0][0].path = {"x", "y"};
  try {
    from_quiver(kQ, bad);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::MalformedRelation);
  }
}

TEST(Quiver, CommutativitySquareRelation) {
  // Square 1->2->4, 1->3->4 with commutativity: dim = 4 + 4 + 1.
  QuiverPresentation<Rational> p;
  p.vertices = {"1", "2", "3", "4"};
  p.arrows = {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}};
  p.relations = {{PathTerm<Rational>{1, {"a", "b"}}, PathTerm<Rational>{-1, {"c", "d"}}}};
  auto alg = from_quiver(kQ, p);
  EXPECT_EQ(alg.dim(), 9u);
  alg.validate();
  EXPECT_EQ(nilpotency_index(alg), 3u);
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(split_semisimple_commutative<Rational>(kQ, 2)).dim(), 0u);
  auto k3 = truncated_polynomial<Rational>(kQ, 3);
  auto r = radical_direct(k3);
  EXPECT_EQ(r.dim(), 2u);
  EXPECT_TRUE(r.contains(k3.basis(1)));
  EXPECT_TRUE(r.contains(k3.basis(2)));
  auto kr = kronecker();
  auto rk = radical_direct(kr);
  EXPECT_EQ(rk.dim(), 2u);
  EXPECT_TRUE(rk.contains(kr.basis(2)) && rk.contains(kr.basis(3)));
}

TEST(Radical, NilpotencyIndex) {
  EXPECT_EQ(nilpotency_index(field_algebra<Rational>(kQ)), 1u);
  EXPECT_EQ(nilpotency_index(truncated_polynomial<Rational>(kQ, 3)), 3u);
  EXPECT_EQ(nilpotency_index(kronecker()), 2u);
}

TEST(Radical, AdmissibleShortcutMatchesTraceForm) {
  for (auto alg : {kronecker(), from_quiver(kQ, loop_with_power(4))}) {
    auto hinted = radical(alg).space;
    auto direct = radical_direct(alg);
    EXPECT_EQ(hinted.basis(), direct.basis());
  }
}

TEST(Radical, CharacteristicPAgainstBruteForce) {
  Field f2 = Field::prime(2), f3 = Field::prime(3);
  auto c2 = group_algebra<ModP>(f2, 2, [](auto a, auto b) { return (a + b) % 2; });
  auto v4 = group_algebra<ModP>(f2, 4, [](auto a, auto b) { return a ^ b; });
  auto c3 = group_algebra<ModP>(f3, 3, [](auto a, auto b) { return (a + b) % 3; });
  auto m2 = matrix_algebra<ModP>(f2, 2);
  auto ut = upper_triangular<ModP>(f2, 2);
  auto c4 = group_algebra<ModP>(f2, 4, [](auto a, auto b) { return (a + b) % 4; });
  auto c2f3 = group_algebra<ModP>(f3, 2, [](auto a, auto b) { return (a + b) % 2; });
  for (const auto* alg : {&c2, &v4, &c3, &m2, &ut, &c4, &c2f3}) {
    auto rad = radical_direct(*alg);
    EXPECT_EQ(ipow(alg->field().p, rad.dim()), brute_force_radical_size(*alg)) << "dim " << alg->dim();
  }
  // Trace form alone fails here: M_2(F_2) has an identically zero trace form.
  EXPECT_TRUE(trace_form(m2).is_zero());
  EXPECT_EQ(radical_direct(m2).dim(), 0u);
}

TEST(Radical, DimensionSplitsAndQuotientIsSemisimple) {
  for (const auto& alg : {kronecker(), truncated_polynomial<Rational>(kQ, 4), upper_triangular<Rational>(kQ, 3)}) {
    auto ss = semisimple_quotient(alg);
    EXPECT_EQ(alg.dim(), radical(alg).dim() + ss.algebra.dim());
    EXPECT_EQ(radical_direct(ss.algebra).dim(), 0u);
    auto powers = radical_powers(alg);
    std::size_t n = nilpotency_index(alg);
    EXPECT_EQ(powers[n].dim(), 0u);
    EXPECT_GT(powers[n - 1].dim(), 0u);
  }
}

TEST(SemisimpleQuotient, Examples) {
  auto d = semisimple_quotient(truncated_polynomial<Rational>(kQ, 2));
  EXPECT_EQ(d.algebra.dim(), 1u);
  EXPECT_TRUE(is_zero_vec(d.project(unit_vec<Rational>(2, 1))));
  auto kr = semisimple_quotient(kronecker());
  EXPECT_EQ(kr.algebra.dim(), 2u);
  EXPECT_TRUE(kr.algebra.is_commutative());
  auto kk = split_semisimple_commutative<Rational>(kQ, 2);
  auto same = semisimple_quotient(kk);
  EXPECT_EQ(same.algebra.dim(), 2u);
  EXPECT_EQ(rank(same.projection_matrix()), 2u);
}

TEST(Separability, Examples) {
  EXPECT_TRUE(is_separable(field_algebra<Rational>(kQ)));
  EXPECT_TRUE(is_separable(semiorth::testing::sqrt2_field()));
  EXPECT_TRUE(is_separable(quaternion_algebra<Rational>(kQ, Rational(-1), Rational(-1))));
  EXPECT_TRUE(is_separable(split_semisimple_commutative<ModP>(Field::prime(5), 3)));
  EXPECT_THROW(is_separable(truncated_polynomial<Rational>(kQ, 2)), AlgebraError);
}

TEST(Constructions, OppositeTensorEnveloping) {
  auto d = truncated_polynomial<Rational>(kQ, 2);
  EXPECT_TRUE(same_table(opposite(d), d));
  auto kr = kronecker();
  EXPECT_TRUE(same_table(opposite(opposite(kr)), kr));
  EXPECT_FALSE(same_table(opposite(kr), kr));
  auto t = tensor_product(d, truncated_polynomial<Rational>(kQ, 3));
  EXPECT_EQ(t.dim(), 6u);
  EXPECT_NO_THROW(t.validate());
  auto env = enveloping(d);
  EXPECT_EQ(env.dim(), 4u);
  EXPECT_EQ(radical(env).space.basis(), radical_direct(env).basis());
  auto envk = enveloping(kr);
  EXPECT_EQ(radical(envk).dim(), radical_direct(envk).dim());
}

TEST(Constructions, Corner) {
  auto kr = kronecker();
  EXPECT_EQ(corner(kr, kr.unit()).algebra.dim(), 4u);
  auto c0 = corner(kr, kr.basis(0));
  EXPECT_EQ(c0.algebra.dim(), 1u);
  EXPECT_EQ(corner(kr, kr.zero()).algebra.dim(), 0u);
  try {
    corner(kr, kr.basis(2));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::NotIdempotent);
  }
}

TEST(Idempotents, SplittingAndClasses) {
  auto m2 = matrix_algebra<Rational>(kQ, 2);
  EXPECT_EQ(primitive_idempotents(m2).size(), 2u);
  EXPECT_EQ(simple_count(m2), 1u);
  auto ut = upper_triangular<Rational>(kQ, 3);
  EXPECT_EQ(primitive_idempotents(ut).size(), 3u);
  EXPECT_EQ(simple_count(ut), 3u);
  auto h = quaternion_algebra<Rational>(kQ, Rational(-1), Rational(-1));
  EXPECT_EQ(primitive_idempotents(h).size(), 1u);
  EXPECT_TRUE(division_algebra_check(h).is_division);
  auto m2f5 = matrix_algebra<ModP>(Field::prime(5), 2);
  EXPECT_EQ(primitive_idempotents(m2f5).size(), 2u);
  auto kk = split_semisimple_commutative<Rational>(kQ, 2);
  EXPECT_FALSE(division_algebra_check(kk).is_division);
  // F_4 = F_2[x]/(x^2+x+1) is a division algebra over F_2.
  std::vector<std::vector<Vec<ModP>>> t(2, std::vector<Vec<ModP>>(2, zero_vec<ModP>(2)));
  Field f2 = Field::prime(2);
  t[0][0][0] = t[0][1][1] = t[1][0][1] = ModP(1, 2);
  t[1][1][0] = t[1][1][1] = ModP(1, 2);
  auto f4 = Algebra<ModP>::from_structure_constants(f2, t, unit_vec<ModP>(2, 0));
  auto v = division_algebra_check(f4);
  EXPECT_TRUE(v.is_division);
  EXPECT_TRUE(v.exhaustive);
}

TEST(Idempotents, LiftedIdempotentsAreOrthogonalAndComplete) {
  for (const auto& alg : {upper_triangular<Rational>(kQ, 3), matrix_algebra<Rational>(kQ, 3)}) {
    const auto& ids = primitive_idempotents(alg);
    Vec<Rational> sum = alg.zero();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      sum = add(sum, ids[i]);
      for (std::size_t j = 0; j < ids.size(); ++j) {
        auto p = alg.mul(ids[i], ids[j]);
        if (i == j) EXPECT_EQ(p, ids[i]);
        else EXPECT_TRUE(is_zero_vec(p));
      }
    }
    EXPECT_EQ(sum, alg.unit());
  }
}

TEST(Generators, GenerateTheAlgebra) {
  auto ut = upper_triangular<Rational>(kQ, 3);
  const auto& gens = algebra_generators(ut);
  Subspace<Rational> span(ut.dim());
  std::vector<Vec<Rational>> frontier{ut.unit()};
  std::vector<Vec<Rational>> all = primitive_idempotents(ut);
  all.insert(all.end(), gens.begin(), gens.end());
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    if (!span.add(v)) continue;
    for (const auto& g : all) frontier.push_back(ut.mul(v, g));
  }
  EXPECT_EQ(span.dim(), ut.dim());
}

TEST(TraceForm, SemisimpleIffNondegenerateInCharZero) {
  std::vector<Algebra<Rational>> algs{kronecker(), truncated_polynomial<Rational>(kQ, 2),
                                      split_semisimple_commutative<Rational>(kQ, 3), matrix_algebra<Rational>(kQ, 2),
                                      quaternion_algebra<Rational>(kQ, Rational(-1), Rational(-1)),
                                      upper_triangular<Rational>(kQ, 2)};
  for (const auto& a : algs) EXPECT_EQ(is_semisimple(a), rank(trace_form(a)) == a.dim());
}
