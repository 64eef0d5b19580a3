#include <gtest/gtest.h>

#include "module_oracle.hpp"
#include "semiorth/resolution.hpp"
#include "test_util.hpp"

using namespace semiorth;
using namespace semiorth::testing;

namespace {

const Field kQ = Field::rationals();

Algebra<Rational> kron() { return from_quiver(kQ, kronecker_presentation<Rational>()); }
Algebra<Rational> dual_numbers() { return truncated_polynomial<Rational>(kQ, 2); }

/// Lambda / r^s as a right module.
template <class K>
RightModule<K> radical_quotient(const Algebra<K>& a, std::size_t s) {
  auto reg = regular_module(a);
  return quotient_module(reg, radical_powers(a)[s].space).module;
}

}  // namespace

TEST(Module, RegularAndProjectivesAreValid) {
  for (const auto& a : {kron(), dual_numbers(), upper_triangular<Rational>(kQ, 3)}) {
    EXPECT_NO_THROW(regular_module(a).validate());
    for (const auto& p : indecomposable_projectives(a)) EXPECT_NO_THROW(p.validate());
    for (const auto& s : simple_modules(a)) EXPECT_NO_THROW(s.validate());
  }
}

TEST(Module, RejectsNonMultiplicativeAction) {
  auto a = dual_numbers();
  std::vector<Matrix<Rational>> act{Matrix<Rational>::identity(1), Matrix<Rational>::identity(1)};
  try {
    RightModule<Rational>(a, 1, act);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::InvalidModule);
  }
}

TEST(HomSpace, Examples) {
  auto k = field_algebra<Rational>(kQ);
  EXPECT_EQ(hom_space(regular_module(k), regular_module(k)).size(), 1u);
  auto d = dual_numbers();
  EXPECT_EQ(hom_space(radical_quotient(d, 1), regular_module(d)).size(), 1u);
  auto c = truncated_polynomial<Rational>(kQ, 3);
  EXPECT_EQ(hom_space(radical_quotient(c, 2), radical_quotient(c, 3)).size(), 2u);
  EXPECT_THROW(hom_space(regular_module(d), regular_module(kron())), AlgebraError);
}

TEST(HomSpace, BasisElementsAreModuleMaps) {
  auto c = truncated_polynomial<Rational>(kQ, 3);
  auto m = radical_quotient(c, 2), n = regular_module(c);
  for (const auto& f : hom_space(m, n)) EXPECT_TRUE(is_module_map(m, n, f));
}

TEST(HomSpace, AgreesWithDenseIntertwinerSolve) {
  std::mt19937_64 rng(11);
  std::vector<Algebra<Rational>> algs{kron(), dual_numbers(), upper_triangular<Rational>(kQ, 3),
                                      from_quiver(kQ, a3_zero_relation<Rational>()),
                                      matrix_algebra<Rational>(kQ, 2)};
  for (int t = 0; t < 60; ++t) {
    const auto& a = algs[t % algs.size()];
    auto m = random_module(a, rng), n = random_module(a, rng);
    EXPECT_EQ(hom_space(m, n).size(), brute_hom_dim(m, n)) << "trial " << t;
  }
  Field f3 = Field::prime(3);
  auto kf = from_quiver(f3, kronecker_presentation<ModP>());
  for (int t = 0; t < 20; ++t) {
    auto m = random_module(kf, rng), n = random_module(kf, rng);
    EXPECT_EQ(hom_space(m, n).size(), brute_hom_dim(m, n));
  }
}

TEST(Projectives, Examples) {
  EXPECT_EQ(indecomposable_projectives(field_algebra<Rational>(kQ)).size(), 1u);
  auto ps = indecomposable_projectives(kron());
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].dim(), 3u);
  EXPECT_EQ(ps[1].dim(), 1u);
  auto pd = indecomposable_projectives(dual_numbers());
  ASSERT_EQ(pd.size(), 1u);
  EXPECT_EQ(pd[0].dim(), 2u);
}

TEST(ProjectiveCover, Examples) {
  auto d = dual_numbers();
  auto reg = regular_module(d);
  auto c = projective_cover(reg);
  EXPECT_EQ(c.projective.dim(), 2u);
  EXPECT_EQ(rank(c.surjection), 2u);
  auto simple = simple_modules(d)[0];
  auto cs = projective_cover(simple);
  EXPECT_EQ(cs.projective.dim(), 2u);
  EXPECT_TRUE(is_module_map(cs.projective.module, simple, cs.surjection));
  auto cubic = truncated_polynomial<Rational>(kQ, 3);
  auto top = radical_quotient(cubic, 1);
  EXPECT_EQ(projective_cover(top).projective.dim(), 3u);
  try {
    projective_cover(zero_module(d));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), AlgebraErrc::ZeroModule);
  }
}

TEST(ProjectiveCover, KernelLiesInRadical) {
  std::mt19937_64 rng(5);
  auto a = from_quiver(kQ, a3_zero_relation<Rational>());
  for (int t = 0; t < 20; ++t) {
    auto m = random_module(a, rng);
    auto c = projective_cover(m);
    EXPECT_EQ(rank(c.surjection), m.dim());
    Subspace<Rational> rad = radical_submodule(c.projective.module);
    for (const auto& v : left_kernel_basis(c.surjection)) EXPECT_TRUE(rad.contains(v));
  }
}

TEST(Resolution, Examples) {
  auto kr = kron();
  auto p0 = indecomposable_projectives(kr)[0];
  auto r0 = minimal_resolution(p0);
  EXPECT_EQ(r0.status, ResolutionStatus::Complete);
  EXPECT_EQ(r0.length, 0u);

  auto s0 = simple_modules(kr)[0];
  auto r1 = minimal_resolution(s0);
  EXPECT_EQ(r1.status, ResolutionStatus::Complete);
  EXPECT_EQ(r1.length, 1u);
  EXPECT_EQ(r1.term_classes[1], (std::vector<std::size_t>{1, 1}));

  ResolutionOptions opt;
  opt.cutoff = 10;
  auto rd = minimal_resolution(simple_modules(dual_numbers())[0], opt);
  EXPECT_EQ(rd.status, ResolutionStatus::TruncatedAt);
  EXPECT_EQ(rd.length, 10u);
  ASSERT_TRUE(rd.period.has_value());
  EXPECT_EQ(*rd.period, std::make_pair(std::size_t{0}, std::size_t{1}));
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(rd.term_classes[k].size(), 1u);
}

TEST(Resolution, DifferentialsSquareToZeroAndAreMinimal) {
  std::mt19937_64 rng(7);
  std::vector<Algebra<Rational>> algs{from_quiver(kQ, a3_zero_relation<Rational>()), dual_numbers(), kron(),
                                      truncated_polynomial<Rational>(kQ, 3)};
  for (int t = 0; t < 24; ++t) {
    const auto& a = algs[t % algs.size()];
    ResolutionOptions opt;
    opt.cutoff = 5;
    auto res = minimal_resolution(random_module(a, rng), opt);
    auto rad = radical(a);
    for (std::size_t k = 0; k < res.differentials.size(); ++k) {
      for (const auto& x : res.differentials[k].entries) EXPECT_TRUE(rad.space.contains(x));
      if (k + 1 < res.differentials.size())
        EXPECT_TRUE(compose(a, res.differentials[k], res.differentials[k + 1]).is_zero());
    }
    if (!res.differentials.empty()) {
      auto p0 = realize_projective(a, res.term_idempotents[0]);
      auto p1 = realize_projective(a, res.term_idempotents[1]);
      Matrix<Rational> d1 = linear_matrix(p1, p0, res.differentials[0]);
      EXPECT_TRUE((d1 * res.augmentation).is_zero());
    }
  }
}

TEST(Ext, Examples) {
  auto kr = kron();
  auto ps = indecomposable_projectives(kr);
  auto ss = simple_modules(kr);
  auto e = ext_dims(ps[0], ss[0], 3);
  EXPECT_EQ(e, (std::vector<std::size_t>{1, 0, 0, 0}));
  auto d = dual_numbers();
  auto k = simple_modules(d)[0];
  EXPECT_EQ(ext_dims(k, k, 4), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(ext_dims(ss[0], ss[1], 3), (std::vector<std::size_t>{0, 2, 0, 0}));
  EXPECT_EQ(ext_dims(ss[1], ss[0], 3), (std::vector<std::size_t>{0, 0, 0, 0}));
}

TEST(Ext, AgreesWithFreeResolutionOracle) {
  std::mt19937_64 rng(13);
  std::vector<Algebra<Rational>> algs{from_quiver(kQ, a3_zero_relation<Rational>()), dual_numbers(), kron(),
                                      upper_triangular<Rational>(kQ, 2)};
  for (int t = 0; t < 24; ++t) {
    const auto& a = algs[t % algs.size()];
    auto m = random_module(a, rng), n = random_module(a, rng);
    EXPECT_EQ(ext_dims(m, n, 3), brute_ext_dims(m, n, 3)) << "trial " << t;
  }
}

TEST(Ext, HomIsExtZeroAndVanishesAboveGlobalDimension) {
  std::mt19937_64 rng(17);
  std::vector<Algebra<Rational>> algs{from_quiver(kQ, a3_zero_relation<Rational>()), kron(),
                                      upper_triangular<Rational>(kQ, 3)};
  for (const auto& a : algs) {
    auto gd = global_dimension(a);
    ASSERT_TRUE(gd.finite());
    for (int t = 0; t < 8; ++t) {
      auto m = random_module(a, rng), n = random_module(a, rng);
      auto e = ext_dims(m, n, gd.value + 3);
      EXPECT_EQ(e[0], hom_space(m, n).size());
      for (std::size_t l = gd.value + 1; l < e.size(); ++l) EXPECT_EQ(e[l], 0u);
    }
  }
}

TEST(Ext, EulerCharacteristicFromTruncation) {
  // chi(M, N) = sum_{l<k} (-1)^l dim Hom(P_l, N) + (-1)^k chi(Omega^k, N).
  std::mt19937_64 rng(19);
  auto a = from_quiver(kQ, a3_zero_relation<Rational>());
  auto chi = [](const std::vector<std::size_t>& e) {
    long s = 0;
    for (std::size_t l = 0; l < e.size(); ++l) s += (l % 2 ? -1 : 1) * static_cast<long>(e[l]);
    return s;
  };
  for (int t = 0; t < 10; ++t) {
    auto m = random_module(a, rng), n = random_module(a, rng);
    auto res = minimal_resolution(m);
    long total = chi(ext_dims(m, n, 4));
    for (std::size_t k = 1; k < res.syzygies.size(); ++k) {
      long acc = 0;
      for (std::size_t l = 0; l < k; ++l) {
        long h = 0;
        for (const auto& e : res.term_idempotents[l]) h += static_cast<long>(hom_from_projective(n, e).dim());
        acc += (l % 2 ? -1 : 1) * h;
      }
      acc += (k % 2 ? -1 : 1) * chi(ext_dims(res.syzygies[k], n, 4));
      EXPECT_EQ(acc, total);
    }
  }
}

TEST(Dimension, GlobalDimensionExamples) {
  EXPECT_EQ(global_dimension(split_semisimple_commutative<Rational>(kQ, 3)), DimensionBound::finite_dim(0));
  EXPECT_EQ(global_dimension(matrix_algebra<Rational>(kQ, 2)), DimensionBound::finite_dim(0));
  EXPECT_EQ(global_dimension(kron()), DimensionBound::finite_dim(1));
  EXPECT_EQ(global_dimension(from_quiver(kQ, a3_zero_relation<Rational>())), DimensionBound::finite_dim(2));
  EXPECT_EQ(global_dimension(from_quiver(kQ, a3_path<Rational>())), DimensionBound::finite_dim(1));
  EXPECT_EQ(global_dimension(upper_triangular<Rational>(kQ, 4)), DimensionBound::finite_dim(1));
  auto gd = global_dimension(dual_numbers(), 6);
  EXPECT_EQ(gd.kind, DimensionBound::Kind::PeriodicHenceInfinite);
  auto s = simple_modules(dual_numbers())[0];
  ResolutionOptions opt;
  opt.cutoff = 6;
  opt.detect_period = false;
  EXPECT_EQ(minimal_resolution(s, opt).status, ResolutionStatus::TruncatedAt);
  EXPECT_EQ(is_regular(kron()), global_dimension(kron()));
}

TEST(Dimension, SmoothnessExamples) {
  EXPECT_EQ(is_smooth(field_algebra<Rational>(kQ)), DimensionBound::finite_dim(0));
  EXPECT_EQ(is_smooth(kron()), DimensionBound::finite_dim(1));
  EXPECT_FALSE(is_smooth(dual_numbers(), 6).finite());
  EXPECT_EQ(is_smooth(from_quiver(kQ, a3_zero_relation<Rational>())), DimensionBound::finite_dim(2));
}

TEST(Dimension, SmoothImpliesRegular) {
  std::vector<Algebra<Rational>> algs{kron(), dual_numbers(), from_quiver(kQ, a3_zero_relation<Rational>()),
                                      upper_triangular<Rational>(kQ, 2), field_algebra<Rational>(kQ)};
  for (const auto& a : algs)
    if (is_smooth(a, 6).finite()) EXPECT_TRUE(is_regular(a, 6).finite());
}

TEST(Dimension, Properness) {
  EXPECT_TRUE(is_proper(field_algebra<Rational>(kQ)));
  EXPECT_TRUE(is_proper(dual_numbers()));
  EXPECT_TRUE(is_proper(kron()));
}

TEST(Dimension, PrimeFieldMatchesRationalOnQuivers) {
  Field f5 = Field::prime(5);
  EXPECT_EQ(global_dimension(from_quiver(f5, a3_zero_relation<ModP>())), DimensionBound::finite_dim(2));
  EXPECT_EQ(global_dimension(from_quiver(f5, kronecker_presentation<ModP>(3))), DimensionBound::finite_dim(1));
}
