#include <gtest/gtest.h>

#include "module_oracle.hpp"
#include "semiorth/corpus.hpp"
#include "test_util.hpp"

using namespace semiorth;
using namespace semiorth::testing;

namespace {

const Field kQ = Field::rationals();

Algebra<Rational> kron() { return from_quiver(kQ, kronecker_presentation<Rational>()); }

Bimodule<Rational> k_to_k(std::size_t n) {
  auto k = field_algebra<Rational>(kQ);
  return scalar_bimodule(k, regular_module(k), n);
}

AlgebraErrc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no AlgebraError thrown";
  return AlgebraErrc::InvalidModule;
}

/// Cartan matrices agree up to a simultaneous permutation.
bool cartan_equivalent(const IntMatrix& x, const IntMatrix& y) {
  if (x.size() != y.size()) return false;
  std::vector<std::size_t> p(x.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      for (std::size_t j = 0; j < p.size() && ok; ++j) ok = x[i][j] == y[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST(Glue, Examples) {
  auto k = field_algebra<Rational>(kQ);
  auto g0 = glue(k, k, zero_bimodule(k, k));
  EXPECT_EQ(g0.algebra.dim(), 2u);
  EXPECT_TRUE(g0.algebra.is_commutative());
  EXPECT_EQ(radical(g0.algebra).dim(), 0u);

  auto g = glue(k, k, k_to_k(2));
  EXPECT_EQ(g.algebra.dim(), 4u);
  EXPECT_EQ(radical_direct(g.algebra).dim(), 2u);
  EXPECT_EQ(cartan_matrix(g.algebra), (IntMatrix{{1, 0}, {2, 1}}));
  EXPECT_TRUE(cartan_equivalent(cartan_matrix(g.algebra), cartan_matrix(kron())));
  EXPECT_EQ(global_dimension(g.algebra), DimensionBound::finite_dim(1));
  EXPECT_EQ(sandwich(g.algebra, g.e_a, g.e_b).dim(), 0u);
  EXPECT_EQ(sandwich(g.algebra, g.e_b, g.e_a).dim(), 2u);

  auto d = truncated_polynomial<Rational>(kQ, 2);
  auto gd = glue(d, k, scalar_bimodule(k, simple_modules(d).front(), 1));
  EXPECT_EQ(gd.algebra.dim(), 4u);
  EXPECT_EQ(sandwich(gd.algebra, gd.e_a, gd.e_b).dim(), 0u);
  EXPECT_EQ(simple_count(gd.algebra), 2u);
}

TEST(Glue, HintsAgreeWithDirectRadical) {
  for (const auto& ng : corpus_gluings<Rational>(kQ)) {
    auto g = glue(ng.a, ng.b, ng.s);
    EXPECT_EQ(radical(g.algebra).dim(), radical_direct(g.algebra).dim()) << ng.name;
    auto ids = basic_idempotents(g.algebra);
    auto ia = basic_idempotents(ng.a), ib = basic_idempotents(ng.b);
    ASSERT_EQ(ids.size(), ia.size() + ib.size()) << ng.name;
    for (std::size_t i = 0; i < ia.size(); ++i) EXPECT_EQ(ids[i], g.from_a(ia[i])) << ng.name;
    for (std::size_t i = 0; i < ib.size(); ++i) EXPECT_EQ(ids[ia.size() + i], g.from_b(ib[i])) << ng.name;
  }
}

TEST(Glue, Errors) {
  auto k = field_algebra<Rational>(kQ);
  auto d = truncated_polynomial<Rational>(kQ, 2);
  EXPECT_EQ(code_of([&] { glue(d, k, k_to_k(1)); }), AlgebraErrc::BimoduleMismatch);
  auto bad = k_to_k(2);
  bad.right_action[0](0, 1) = 1;
  EXPECT_EQ(code_of([&] { bad.validate(); }), AlgebraErrc::InvalidModule);
  for (const auto& ng : corpus_gluings<Rational>(kQ)) EXPECT_NO_THROW(ng.s.validate()) << ng.name;
}

TEST(Split, Examples) {
  auto c = kron();
  auto ids = basic_idempotents(c);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (sandwich(c, ids[i], sub(c.unit(), ids[i])).dim() == 0) {
      auto d = split_gluing(c, ids[i]);
      EXPECT_EQ(d.a.algebra.dim(), 1u);
      EXPECT_EQ(d.b.algebra.dim(), 1u);
      EXPECT_EQ(d.s.dim, 2u);
      EXPECT_NO_THROW(d.s.validate());
      ++ok;
    } else {
      EXPECT_EQ(code_of([&] { split_gluing(c, ids[i]); }), AlgebraErrc::CornerNotSemiorthogonal);
    }
  }
  EXPECT_EQ(ok, 1u);

  auto kk = split_semisimple_commutative<Rational>(kQ, 2);
  auto d = split_gluing(kk, primitive_idempotents(kk)[0]);
  EXPECT_EQ(d.a.algebra.dim(), 1u);
  EXPECT_EQ(d.b.algebra.dim(), 1u);
  EXPECT_EQ(d.s.dim, 0u);

  auto half = c.unit();
  for (auto& x : half) x /= 2;
  EXPECT_EQ(code_of([&] { split_gluing(c, half); }), AlgebraErrc::NotIdempotent);
}

TEST(RoundTrip, Corpus) {
  for (const auto& ng : corpus_gluings<Rational>(kQ)) {
    auto r = verify_split_of_glue(ng.a, ng.b, ng.s);
    EXPECT_TRUE(r.pass) << ng.name << ": " << r.witness;
    auto g = glue(ng.a, ng.b, ng.s);
    auto back = verify_glue_of_split(g.algebra, g.e_a);
    EXPECT_TRUE(back.pass) << ng.name << ": " << back.witness;
  }
  auto c = kron();
  for (const auto& e : basic_idempotents(c))
    if (sandwich(c, e, sub(c.unit(), e)).dim() == 0) EXPECT_TRUE(verify_glue_of_split(c, e).pass);
}

TEST(RoundTrip, RandomBimodulesOverF5) {
  auto f5 = Field::prime(5);
  std::mt19937_64 rng(5);
  std::vector<Algebra<ModP>> parts{field_algebra<ModP>(f5), split_semisimple_commutative<ModP>(f5, 2),
                                   truncated_polynomial<ModP>(f5, 2)};
  for (int t = 0; t < 50; ++t) {
    const auto& a = parts[rng() % parts.size()];
    const auto& b = parts[rng() % parts.size()];
    auto s = random_bimodule(b, a, 4, rng);
    ASSERT_NO_THROW(s.validate()) << "trial " << t;
    auto r = verify_split_of_glue(a, b, s);
    EXPECT_TRUE(r.pass) << "trial " << t << ": " << r.witness;
    auto g = glue(a, b, s);
    EXPECT_TRUE(verify_glue_of_split(g.algebra, g.e_a).pass) << "trial " << t;
  }
}

TEST(RoundTrip, DetectsWrongMaps) {
  auto k = field_algebra<Rational>(kQ);
  auto s = k_to_k(2);
  auto alpha = Matrix<Rational>::identity(1);
  auto swap = Matrix<Rational>(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_TRUE(is_bimodule_isomorphism(s, s, alpha, alpha, swap));
  auto zero = Matrix<Rational>(2, 2);
  EXPECT_FALSE(is_bimodule_isomorphism(s, s, alpha, alpha, zero));
  auto d = truncated_polynomial<Rational>(kQ, 2);
  auto kk = split_semisimple_commutative<Rational>(kQ, 2);
  EXPECT_FALSE(is_algebra_isomorphism(d, kk, Matrix<Rational>::identity(2)));
  EXPECT_TRUE(is_algebra_isomorphism(d, d, Matrix<Rational>::identity(2)));
}

TEST(Induce, Projectives) {
  for (const auto& ng : corpus_gluings<Rational>(kQ)) {
    auto g = glue(ng.a, ng.b, ng.s);
    auto pa = induce_a(g, regular_module(ng.a));
    auto pb = induce_b(g, regular_module(ng.b));
    EXPECT_EQ(pa.dim(), ng.a.dim()) << ng.name;
    EXPECT_EQ(pb.dim(), ng.b.dim() + ng.s.dim) << ng.name;
    EXPECT_TRUE(find_isomorphism(pa, realize_projective(g.algebra, {g.e_a}).module).has_value()) << ng.name;
    EXPECT_TRUE(find_isomorphism(pb, realize_projective(g.algebra, {g.e_b}).module).has_value()) << ng.name;
  }
  auto k = field_algebra<Rational>(kQ);
  auto g = glue(k, k, k_to_k(2));
  auto p = induce_b(g, regular_module(k));
  EXPECT_EQ(p.dim(), 3u);
  bool found = false;
  for (const auto& q : indecomposable_projectives(g.algebra))
    if (q.dim() == 3) found = find_isomorphism(p, q).has_value();
  EXPECT_TRUE(found);
  EXPECT_EQ(code_of([&] { induce_a(g, regular_module(truncated_polynomial<Rational>(kQ, 2))); }),
            AlgebraErrc::CornerMismatch);
}

TEST(Induce, ExtensionByZeroPreservesExt) {
  std::mt19937_64 rng(41);
  auto gl = corpus_gluings<Rational>(kQ);
  for (int t = 0; t < 20; ++t) {
    const auto& ng = gl[rng() % gl.size()];
    auto g = glue(ng.a, ng.b, ng.s);
    auto m = random_module(ng.a, rng), n = random_module(ng.a, rng);
    EXPECT_EQ(ext_dims(induce_a(g, m), induce_a(g, n), 3), ext_dims(m, n, 3)) << ng.name;
  }
}

TEST(Induce, ComplexLevelMatchesModules) {
  auto gl = corpus_gluings<Rational>(kQ);
  for (const auto& ng : gl) {
    auto g = glue(ng.a, ng.b, ng.s);
    for (const auto& e : basic_idempotents(ng.b)) {
      auto y = realize_projective(ng.b, {e}).module;
      auto via_module = induce_b(g, y);
      auto via_complex = induce_complex(g, projective_complex(ng.b, {e}), false);
      auto direct = realize_projective(g.algebra, {via_complex.terms[0][0]}).module;
      EXPECT_TRUE(find_isomorphism(via_module, direct).has_value()) << ng.name;
    }
  }
}

TEST(GluingSod, Corpus) {
  for (const auto& ng : corpus_gluings<Rational>(kQ)) {
    auto r = verify_gluing_sod(glue(ng.a, ng.b, ng.s));
    EXPECT_TRUE(r.pass) << ng.name << ": " << r.witness;
    EXPECT_EQ(r.upper_corner_dim, 0u);
    EXPECT_EQ(r.det_c, r.det_a * r.det_b) << ng.name;
    EXPECT_EQ(r.simples_c, r.simples_a + r.simples_b) << ng.name;
    EXPECT_EQ(r.sod.block_k0_ranks, (std::vector<std::size_t>{r.simples_a, r.simples_b})) << ng.name;
  }
}

TEST(GluingSod, Examples) {
  auto k = field_algebra<Rational>(kQ);
  auto r = verify_gluing_sod(glue(k, k, k_to_k(2)));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.cartan_c, (IntMatrix{{1, 0}, {2, 1}}));
  auto g0 = glue(k, k, zero_bimodule(k, k));
  EXPECT_TRUE(verify_gluing_sod(g0).pass);
  // Both orders are semi-orthogonal when S = 0.
  auto swapped = g0;
  std::swap(swapped.e_a, swapped.e_b);
  EXPECT_EQ(sandwich(swapped.algebra, swapped.e_a, swapped.e_b).dim(), 0u);

  auto bad = glue(k, k, k_to_k(2));
  std::swap(bad.e_a, bad.e_b);
  auto rb = verify_gluing_sod(bad);
  EXPECT_FALSE(rb.pass);
  EXPECT_EQ(rb.upper_corner_dim, 2u);
  EXPECT_NE(rb.witness.find("e_a C e_b"), std::string::npos);
}

TEST(GluingSod, CartanAssociativity) {
  // Path algebra of 1 -> 2 -> 3 glued as (1 | 2) | 3 and as 1 | (2 | 3).
  auto k = field_algebra<Rational>(kQ);
  auto reg = regular_module(k);
  auto g12 = glue(k, k, scalar_bimodule(k, reg, 1));
  auto ps12 = indecomposable_projectives(g12.algebra);
  RightModule<Rational> top = ps12.front();
  for (const auto& p : ps12)
    if (p.dim() > top.dim()) top = p;
  auto left = glue(g12.algebra, k, scalar_bimodule(k, top, 1));

  auto g23 = glue(k, k, scalar_bimodule(k, reg, 1));
  auto ops = indecomposable_projectives(opposite(g23.algebra));
  RightModule<Rational> ltop = ops.front();
  for (const auto& p : ops)
    if (p.dim() > ltop.dim()) ltop = p;
  auto right = glue(k, g23.algebra, outer_bimodule(g23.algebra, ltop, reg));

  auto cl = cartan_matrix(left.algebra), cr = cartan_matrix(right.algebra);
  EXPECT_TRUE(cartan_equivalent(cl, cr));
  EXPECT_TRUE(cartan_equivalent(cl, cartan_matrix(from_quiver(kQ, a3_path<Rational>()))));
  EXPECT_EQ(int_determinant(cl), 1);
}

TEST(SmoothGluing, Examples) {
  auto k = field_algebra<Rational>(kQ);
  auto r = verify_smooth_gluing(glue(k, k, k_to_k(2)));
  EXPECT_EQ(r.verdict, Verdict3::Holds) << r.witness;
  EXPECT_EQ(r.c, DimensionBound::finite_dim(1));
  EXPECT_EQ(r.s, DimensionBound::finite_dim(0));
  auto r0 = verify_smooth_gluing(glue(k, k, zero_bimodule(k, k)));
  EXPECT_EQ(r0.c, DimensionBound::finite_dim(0));
  EXPECT_EQ(r0.verdict, Verdict3::Holds);
  auto d = truncated_polynomial<Rational>(kQ, 2);
  auto rd = verify_smooth_gluing(glue(d, k, scalar_bimodule(k, simple_modules(d).front(), 1)));
  EXPECT_EQ(rd.a.kind, DimensionBound::Kind::PeriodicHenceInfinite);
  EXPECT_EQ(rd.c.kind, DimensionBound::Kind::PeriodicHenceInfinite);
  EXPECT_EQ(rd.verdict, Verdict3::Holds);
}

TEST(SmoothGluing, CorpusBiconditional) {
  for (const auto& ng : corpus_gluings<Rational>(kQ)) {
    auto r = verify_smooth_gluing(glue(ng.a, ng.b, ng.s));
    EXPECT_NE(r.verdict, Verdict3::Fails) << ng.name << ": " << r.witness;
    if (ng.name.find("dual") != std::string::npos)
      EXPECT_EQ(r.c.kind, DimensionBound::Kind::PeriodicHenceInfinite) << ng.name;
  }
}

TEST(RegularGluing, Examples) {
  auto k = field_algebra<Rational>(kQ);
  auto r = verify_regular_gluing(glue(k, k, k_to_k(2)));
  EXPECT_EQ(r.verdict, Verdict3::Holds);
  EXPECT_EQ(r.c, DimensionBound::finite_dim(1));
  auto d = truncated_polynomial<Rational>(kQ, 2);
  auto rd = verify_regular_gluing(glue(d, k, scalar_bimodule(k, simple_modules(d).front(), 1)));
  EXPECT_FALSE(rd.c.finite());
  EXPECT_FALSE(rd.a.finite());
  EXPECT_EQ(rd.verdict, Verdict3::Holds);
  EXPECT_EQ(verify_regular_gluing(glue(k, k, zero_bimodule(k, k))).c, DimensionBound::finite_dim(0));
  for (const auto& ng : corpus_gluings<Rational>(kQ))
    EXPECT_NE(verify_regular_gluing(glue(ng.a, ng.b, ng.s)).verdict, Verdict3::Fails) << ng.name;
}

TEST(CollectionAlgebra, Examples) {
  auto k = field_algebra<Rational>(kQ);
  auto single = collection_algebra(std::vector<PerfComplex<Rational>>{projective_complex(k, {k.unit()})});
  EXPECT_EQ(single.algebra.dim(), 1u);

  auto c = kron();
  auto ps = projective_objects(c);
  // Hom(P0, P1) = 0 for this orientation, so P1 comes first.
  auto ca = collection_algebra(std::vector<PerfComplex<Rational>>{ps[1], ps[0]});
  EXPECT_EQ(ca.algebra.dim(), 4u);
  EXPECT_TRUE(cartan_equivalent(cartan_matrix(ca.algebra), cartan_matrix(c)));
  EXPECT_EQ(cartan_matrix(ca.algebra, ca.idempotents), (IntMatrix{{1, 0}, {2, 1}}));
  // It is the gluing of End P1 and End P0 along Hom(P1, P0).
  auto d = split_gluing(ca.algebra, ca.idempotents[0]);
  EXPECT_EQ(d.s.dim, 2u);

  auto s0 = complex_from_resolution(minimal_resolution(simple_modules(c)[0]));
  EXPECT_EQ(code_of([&] { collection_algebra(std::vector<PerfComplex<Rational>>{s0, ps[1]}); }), AlgebraErrc::NotStrong);
  EXPECT_EQ(code_of([&] { collection_algebra(std::vector<PerfComplex<Rational>>{ps[0], ps[1]}); }),
            AlgebraErrc::CornerNotSemiorthogonal);
}
