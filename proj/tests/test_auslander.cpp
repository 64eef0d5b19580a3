#include <gtest/gtest.h>

#include "module_oracle.hpp"
#include "semiorth/auslander.hpp"
#include "semiorth/corpus.hpp"

using namespace semiorth;
using namespace semiorth::testing;

namespace {

const Field kQ = Field::rationals();

template <class K>
std::size_t oracle_gamma_dim(const AuslanderData<K>& d) {
  std::size_t s = 0;
  for (const auto& x : d.m_parts)
    for (const auto& y : d.m_parts) s += brute_hom_dim(x, y);
  return s;
}

template <class K>
void check_truncated(const Field& f) {
  const std::size_t expected[] = {0, 1, 5, 14, 30};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto lam = truncated_polynomial<K>(f, n);
    auto d = build_auslander(lam);
    ASSERT_EQ(d.n, n);
    EXPECT_EQ(d.gamma.dim(), expected[n]) << f.name() << " n=" << n;
    EXPECT_EQ(d.gamma.dim(), oracle_gamma_dim(d));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) EXPECT_EQ(d.hom_dims[i][j], j + 1);
    auto gd = verify_gldim(d);
    EXPECT_TRUE(gd.pass) << gd.gldim.to_string();
    EXPECT_EQ(gd.gldim, DimensionBound::finite_dim(n == 1 ? 0 : 2)) << "n=" << n;
    auto c = verify_collection(d);
    EXPECT_TRUE(c.pass) << "n=" << n << ": " << c.witness;
    EXPECT_TRUE(c.vanish_kp && c.vanish_kk && c.concentrated && c.semisimple_end && c.quotient_map && c.generation);
    EXPECT_EQ(c.end_dims, std::vector<std::size_t>(n, 1));
    EXPECT_EQ(c.end_kernel_dims, std::vector<std::size_t>(n, n - 1));
    auto rr = verify_endomorphism_recovery(d);
    EXPECT_TRUE(rr.pass) << rr.witness;
    EXPECT_EQ(rr.end_dim, n);
    EXPECT_TRUE(verify_embedding(d).pass);
  }
}

}  // namespace

TEST(Auslander, TruncatedPolynomialsOverQ) { check_truncated<Rational>(kQ); }

TEST(Auslander, TruncatedPolynomialsOverF5) { check_truncated<ModP>(Field::prime(5)); }

TEST(Auslander, Field) {
  auto d = build_auslander(field_algebra<Rational>(kQ));
  EXPECT_EQ(d.gamma.dim(), 1u);
  ASSERT_EQ(d.k_objects.size(), 1u);
  EXPECT_TRUE(is_exceptional(d.k_objects[0]).pass);
  EXPECT_TRUE(verify_collection(d).pass);
}

TEST(Auslander, Semisimple) {
  auto lam = split_semisimple_commutative<Rational>(kQ, 2);
  auto d = build_auslander(lam);
  EXPECT_EQ(d.n, 1u);
  EXPECT_EQ(d.gamma.dim(), 2u);
  auto c = verify_collection(d);
  EXPECT_TRUE(c.pass) << c.witness;
  EXPECT_EQ(c.end_dims, (std::vector<std::size_t>{2}));
  EXPECT_EQ(c.sod.block_k0_ranks, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(verify_endomorphism_recovery(d).pass);
}

TEST(Auslander, Corpus) {
  for (const auto& na : corpus_algebras<Rational>(kQ)) {
    auto d = build_auslander(na.algebra);
    EXPECT_EQ(d.gamma.dim(), oracle_gamma_dim(d)) << na.name;
    auto gd = verify_gldim(d);
    EXPECT_TRUE(gd.pass) << na.name << " " << gd.gldim.to_string();
    auto c = verify_collection(d);
    EXPECT_TRUE(c.pass) << na.name << ": " << c.witness;
    for (auto e : c.end_dims) EXPECT_LE(e, na.algebra.dim() - radical(na.algebra).dim()) << na.name;
    auto rr = verify_endomorphism_recovery(d);
    EXPECT_TRUE(rr.pass) << na.name << ": " << rr.witness;
    EXPECT_TRUE(verify_embedding(d).pass) << na.name;
  }
}

TEST(Auslander, ProjectivesSumToGamma) {
  auto d = build_auslander(truncated_polynomial<Rational>(kQ, 3));
  std::size_t total = 0;
  for (const auto& p : d.p_modules) total += p.dim();
  EXPECT_EQ(total, d.gamma.dim());
  auto whole = realize_projective(d.gamma, {d.gamma.unit()}).module;
  EXPECT_TRUE(find_isomorphism(direct_sum(d.gamma, d.p_modules), whole).has_value());
}

TEST(Auslander, CertificateIsChecked) {
  auto d = build_auslander(truncated_polynomial<Rational>(kQ, 2));
  auto cert = auslander_certificate(d);
  EXPECT_NO_THROW(validate_certificate(cert));
  auto broken = cert;
  broken.witnesses[1].map.comps[0](0, 0) = d.gamma.zero();
  EXPECT_THROW(validate_certificate(broken), AlgebraError);
  auto early = cert;
  early.steps[1] = CertStep<Rational>::target(1);
  EXPECT_THROW(validate_certificate(early), AlgebraError);
}
