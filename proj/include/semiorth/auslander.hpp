#pragma once

// Auslander algebra Gamma = End(M), M = sum of the quotients Lambda/r^p for
// p = 1..n, with the semi-exceptional collection K_1, ..., K_n where
// K_1 = P_1 and K_i = [P_i -> P_{i-1}] (P_i in degree 0) for i >= 2.

#include <string>
#include <vector>

#include "semiorth/gluing.hpp"

namespace semiorth {

template <class K>
struct AuslanderData {
  Algebra<K> lambda;
  std::size_t n = 0;
  std::vector<RightModule<K>> m_parts;         // Lambda / r^p, p = 1..n
  std::vector<Matrix<K>> quotient_maps;        // Lambda -> M_p, dim Lambda x dim M_p
  Algebra<K> gamma;
  // Basis element g of Gamma is a map M_src -> M_tgt with matrix maps[g].
  std::vector<std::size_t> src, tgt;
  std::vector<Matrix<K>> maps;
  std::vector<std::vector<std::size_t>> hom_dims;  // hom_dims[i][j] = dim Hom(M_i, M_j)
  std::vector<Vec<K>> eps;                     // identity of M_p, p = 1..n
  std::vector<PerfComplex<K>> p_objects;       // P_s = eps_s Gamma
  std::vector<RightModule<K>> p_modules;
  std::vector<Vec<K>> phi;                     // phi[i] in Gamma: M_{i+1} -> M_i (0-based i >= 1 is phi_{i+1,i})
  std::vector<PerfComplex<K>> k_objects;
  std::size_t pn_index = 0;

  /// Gamma coordinates of a family of maps M_i -> M_j, keyed by (i, j) 0-based.
  Vec<K> element(std::size_t i, std::size_t j, const Matrix<K>& f) const {
    Vec<K> v(gamma.dim(), K(0));
    std::vector<std::size_t> idx;
    for (std::size_t g = 0; g < maps.size(); ++g)
      if (src[g] == i && tgt[g] == j) idx.push_back(g);
    Matrix<K> lhs(idx.size(), f.rows() * f.cols());
    for (std::size_t r = 0; r < idx.size(); ++r) lhs.set_row(r, flatten(maps[idx[r]]));
    auto c = solve_linear(lhs.transpose(), flatten(f));
    if (!c) throw AlgebraError(AlgebraErrc::InvalidModule, "auslander: map is not a module homomorphism");
    for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = (*c)[r];
    return v;
  }

  /// Left multiplication by a on M_p, as a Gamma element.
  Vec<K> left_mult_on(std::size_t p, const Vec<K>& a) const {
    const auto& q = quotient_maps[p];
    std::size_t d = m_parts[p].dim();
    Matrix<K> f(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      // lift basis vector r of M_p to Lambda via a right inverse of q
      Vec<K> lift = *solve_linear(q.transpose(), unit_vec<K>(d, r));
      f.set_row(r, lambda.mul(a, lift) * q);
    }
    return element(p, p, f);
  }

  static Vec<K> flatten(const Matrix<K>& m) {
    Vec<K> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  }
};

template <class K>
AuslanderData<K> build_auslander(const Algebra<K>& lambda) {
  AuslanderData<K> d;
  d.lambda = lambda;
  auto powers = radical_powers(lambda);
  d.n = powers.size() - 1;
  auto reg = regular_module(lambda);
  for (std::size_t p = 1; p <= d.n; ++p) {
    auto q = quotient_module(reg, powers[p].space);
    d.quotient_maps.push_back(q.projection());
    d.m_parts.push_back(q.module);
  }
  std::size_t n = d.n;
  d.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto hs = hom_space(d.m_parts[i], d.m_parts[j]);
      // Echelon basis of the flattened maps keeps the ordering canonical.
      std::size_t rows = d.m_parts[i].dim(), cols = d.m_parts[j].dim();
      Subspace<K> s(rows * cols);
      for (const auto& h : hs) s.add(AuslanderData<K>::flatten(h));
      d.hom_dims[i][j] = s.dim();
      for (const auto& v : s.basis()) {
        Matrix<K> f(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c) f(r, c) = v[r * cols + c];
        d.src.push_back(i);
        d.tgt.push_back(j);
        d.maps.push_back(std::move(f));
      }
    }
  std::size_t dim = d.maps.size();
  // Product g.h = g o h: h first, then g.
  std::vector<SparseVec<K>> table(dim * dim);
  {
    for (std::size_t g = 0; g < dim; ++g)
      for (std::size_t h = 0; h < dim; ++h) {
        if (d.tgt[h] != d.src[g]) continue;
        Matrix<K> f = d.maps[h] * d.maps[g];
        std::size_t i = d.src[h], j = d.tgt[g];
        std::vector<std::size_t> idx;
        for (std::size_t x = 0; x < dim; ++x)
          if (d.src[x] == i && d.tgt[x] == j) idx.push_back(x);
        Matrix<K> lhs(idx.size(), f.rows() * f.cols());
        for (std::size_t r = 0; r < idx.size(); ++r) lhs.set_row(r, AuslanderData<K>::flatten(d.maps[idx[r]]));
        auto c = solve_linear(lhs.transpose(), AuslanderData<K>::flatten(f));
        if (!c) throw AlgebraError(AlgebraErrc::NotAssociative, "auslander: composition left the Hom space");
        for (std::size_t r = 0; r < idx.size(); ++r)
          if (!is_zero((*c)[r])) table[g * dim + h].emplace_back(static_cast<std::uint32_t>(idx[r]), (*c)[r]);
      }
  }
  Vec<K> unit(dim, K(0));
  std::vector<Vec<K>> eps(n, Vec<K>(dim, K(0)));
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t m = d.m_parts[p].dim();
    std::vector<std::size_t> idx;
    for (std::size_t x = 0; x < dim; ++x)
      if (d.src[x] == p && d.tgt[x] == p) idx.push_back(x);
    Matrix<K> lhs(idx.size(), m * m);
    for (std::size_t r = 0; r < idx.size(); ++r) lhs.set_row(r, AuslanderData<K>::flatten(d.maps[idx[r]]));
    auto c = solve_linear(lhs.transpose(), AuslanderData<K>::flatten(Matrix<K>::identity(m)));
    for (std::size_t r = 0; r < idx.size(); ++r) eps[p][idx[r]] = (*c)[r];
    unit = add(unit, eps[p]);
  }
  typename Algebra<K>::Hints hints;
  hints.idempotents = eps;
  d.gamma = Algebra<K>::from_sparse(lambda.field(), dim, std::move(table), unit, std::move(hints));
  if (dim <= 40) d.gamma.validate();
  d.eps = eps;
  for (std::size_t p = 0; p < n; ++p) {
    d.p_objects.push_back(projective_complex(d.gamma, {eps[p]}));
    d.p_modules.push_back(realize_projective(d.gamma, {eps[p]}).module);
  }
  d.pn_index = n - 1;
  // phi_{i,i-1}: the canonical surjection M_i -> M_{i-1}.
  d.phi.push_back(d.gamma.zero());
  for (std::size_t i = 1; i < n; ++i) {
    const auto& qi = d.quotient_maps[i];
    const auto& qprev = d.quotient_maps[i - 1];
    std::size_t di = d.m_parts[i].dim(), dp = d.m_parts[i - 1].dim();
    Matrix<K> f(di, dp);
    for (std::size_t r = 0; r < di; ++r) f.set_row(r, *solve_linear(qi.transpose(), unit_vec<K>(di, r)) * qprev);
    d.phi.push_back(d.element(i, i - 1, f));
  }
  d.k_objects.push_back(d.p_objects[0]);
  for (std::size_t i = 1; i < n; ++i)
    d.k_objects.push_back(two_term_complex(d.gamma, eps[i], eps[i - 1], scale(K(-1), d.phi[i]), 0));
  return d;
}

struct GlDimReport {
  bool pass = false;
  DimensionBound gldim;
  std::size_t bound = 0;  // n + 1
};

template <class K>
GlDimReport verify_gldim(const AuslanderData<K>& d, std::size_t cutoff = kDefaultCutoff) {
  GlDimReport r;
  r.bound = d.n + 1;
  r.gldim = global_dimension(d.gamma, std::max(cutoff, d.n + 2));
  r.pass = r.gldim.finite() && r.gldim.value <= r.bound;
  return r;
}

/// Generation of P_1..P_n from K_1..K_n by the triangles K_i -> P_i -> P_{i-1}.
template <class K>
GenerationCertificate<K> auslander_certificate(const AuslanderData<K>& d) {
  GenerationCertificate<K> c;
  c.generators = d.k_objects;
  c.targets = d.p_objects;
  const auto& g = d.gamma;
  c.steps.push_back(CertStep<K>::generator(0));
  c.witnesses.push_back({0, 0, identity_map(d.p_objects[0])});
  c.witness_after.push_back(0);
  for (std::size_t i = 1; i < d.n; ++i) {
    std::size_t prev = c.steps.size();
    c.steps.push_back(CertStep<K>::target(i - 1));           // P_{i-1}
    c.steps.push_back(CertStep<K>::shifted(prev, -1));       // P_{i-1} in degree 1
    c.steps.push_back(CertStep<K>::generator(i));            // K_i
    GradedMap<K> inc;
    ElementMatrix<K> id(1, 1, g.zero());
    id(0, 0) = d.eps[i - 1];
    inc.comps[1] = id;
    c.steps.push_back(CertStep<K>::cone_of(prev + 1, prev + 2, inc));
    // cone^0 = P_{i-1} + P_i; u = (phi, id).
    GradedMap<K> u;
    ElementMatrix<K> m(2, 1, g.zero());
    m(0, 0) = d.phi[i];
    m(1, 0) = d.eps[i];
    u.comps[0] = m;
    c.witnesses.push_back({i, prev + 3, u});
    c.witness_after.push_back(prev + 3);
  }
  return c;
}

struct CollectionReport {
  bool pass = false;
  std::string witness;
  bool vanish_kp = false;      // (a) Hom(K_i, P_j[*]) = 0, i > j
  bool vanish_kk = false;      // (b) Hom(K_i, K_j[*]) = 0, i > j
  bool concentrated = false;   // (c)
  bool semisimple_end = false; // (d)
  bool quotient_map = false;   // (e)
  bool generation = false;     // (f)
  std::vector<std::string> profiles;  // Hom tables
  std::vector<std::size_t> end_dims, end_kernel_dims, end_simple_counts;
  SODReport sod;
};

template <class K>
CollectionReport verify_collection(const AuslanderData<K>& d) {
  CollectionReport r;
  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };
  std::size_t n = d.n;
  auto name = [](const char* s, std::size_t i) { return std::string(s) + std::to_string(i + 1); };
  r.vanish_kp = r.vanish_kk = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto p = derived_hom(d.k_objects[i], d.p_objects[j]);
      r.profiles.push_back("Hom(" + name("K", i) + ", " + name("P", j) + "[*]) = " + p.to_string());
      if (!p.is_zero()) {
        r.vanish_kp = false;
        note(r.profiles.back());
      }
      auto q = derived_hom(d.k_objects[i], d.k_objects[j]);
      r.profiles.push_back("Hom(" + name("K", i) + ", " + name("K", j) + "[*]) = " + q.to_string());
      if (!q.is_zero()) {
        r.vanish_kk = false;
        note(r.profiles.back());
      }
    }
  r.concentrated = r.semisimple_end = r.quotient_map = true;
  auto rad = radical(d.lambda);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& k = d.k_objects[i];
    auto p = derived_hom(k, k);
    r.profiles.push_back("Hom(" + name("K", i) + ", " + name("K", i) + "[*]) = " + p.to_string());
    if (!p.concentrated_in_zero()) {
      r.concentrated = false;
      note(r.profiles.back());
      r.end_dims.push_back(0);
      r.end_kernel_dims.push_back(0);
      r.end_simple_counts.push_back(0);
      continue;
    }
    auto data = end_algebra_data(k);
    const auto& e = data.algebra;
    r.end_dims.push_back(e.dim());
    r.end_simple_counts.push_back(simple_count(e));
    if (radical_direct(e).dim() != 0) {
      r.semisimple_end = false;
      note("End(" + name("K", i) + ") is not semisimple");
    }
    // a -> (a on M_i, a on M_{i-1}) as a chain endomorphism of K_i.
    auto image = [&](const Vec<K>& a) {
      GradedMap<K> f;
      ElementMatrix<K> top(1, 1, d.gamma.zero());
      top(0, 0) = d.left_mult_on(i, a);
      f.comps[0] = top;
      if (i > 0) {
        ElementMatrix<K> bot(1, 1, d.gamma.zero());
        bot(0, 0) = d.left_mult_on(i - 1, a);
        f.comps[1] = bot;
      }
      return data.coordinates(f);
    };
    const auto& lam = d.lambda;
    std::vector<Vec<K>> imgs;
    bool ok = true;
    for (std::size_t x = 0; x < lam.dim(); ++x) imgs.push_back(image(lam.basis(x)));
    for (std::size_t x = 0; x < lam.dim() && ok; ++x)
      for (std::size_t y = 0; y < lam.dim() && ok; ++y) {
        Vec<K> lhs(e.dim(), K(0));
        auto xy = lam.mul(lam.basis(x), lam.basis(y));
        for (std::size_t z = 0; z < lam.dim(); ++z)
          if (!is_zero(xy[z])) axpy(lhs, xy[z], imgs[z]);
        ok = lhs == e.mul(imgs[x], imgs[y]);
      }
    if (!ok) note("Lambda -> End(" + name("K", i) + ") is not multiplicative");
    std::size_t rk = 0;
    if (e.dim()) {
      auto m = Matrix<K>::from_rows(imgs, e.dim());
      rk = rank(m);
      if (rk != e.dim()) {
        ok = false;
        note("Lambda -> End(" + name("K", i) + ") is not surjective");
      }
    }
    for (const auto& x : rad.basis())
      if (!is_zero_vec(image(x))) {
        ok = false;
        note("radical does not die in End(" + name("K", i) + ")");
        break;
      }
    r.end_kernel_dims.push_back(lam.dim() - rk);
    if (!ok) r.quotient_map = false;
  }
  std::vector<std::vector<PerfComplex<K>>> blocks;
  for (const auto& k : d.k_objects) blocks.push_back({k});
  r.sod = verify_sod(blocks, auslander_certificate(d));
  r.generation = r.sod.pass;
  if (!r.generation) note(r.sod.witness);
  r.pass = r.vanish_kp && r.vanish_kk && r.concentrated && r.semisimple_end && r.quotient_map && r.generation;
  return r;
}

struct RecoveryReport {
  bool pass = false;
  std::string witness;
  std::size_t end_dim = 0, lambda_dim = 0;
  DerivedHomProfile self_hom;
};

/// Lambda -> End_Gamma(P_n) = eps_n Gamma eps_n, a -> left multiplication by a on M_n = Lambda.
template <class K>
RecoveryReport verify_endomorphism_recovery(const AuslanderData<K>& d) {
  RecoveryReport r;
  const auto& e = d.eps[d.pn_index];
  auto c = corner(d.gamma, e);
  r.end_dim = c.algebra.dim();
  r.lambda_dim = d.lambda.dim();
  Matrix<K> m(d.lambda.dim(), c.algebra.dim());
  if (r.end_dim != r.lambda_dim) {
    r.witness = "dimensions differ";
    return r;
  }
  for (std::size_t x = 0; x < d.lambda.dim(); ++x)
    m.set_row(x, c.space.coordinates(d.left_mult_on(d.pn_index, d.lambda.basis(x))));
  r.self_hom = derived_hom(d.p_objects[d.pn_index], d.p_objects[d.pn_index]);
  bool iso = is_algebra_isomorphism(d.lambda, c.algebra, m);
  if (!iso) r.witness = "Lambda -> End(P_n) is not an algebra isomorphism";
  else if (!r.self_hom.concentrated_in_zero()) r.witness = "P_n has self-extensions";
  r.pass = iso && r.self_hom.concentrated_in_zero();
  return r;
}

/// (-) (x)_Lambda P_n on projective complexes: eps Lambda -> (left mult by eps) Gamma.
template <class K>
PerfComplex<K> embed_perf(const AuslanderData<K>& d, const PerfComplex<K>& x) {
  if (!same_algebra(x.algebra, d.lambda)) throw AlgebraError(AlgebraErrc::AlgebraMismatch, "embed_perf: not over Lambda");
  auto push = [&](const Vec<K>& v) { return d.left_mult_on(d.pn_index, v); };
  PerfComplex<K> y{d.gamma, x.lo, {}, {}};
  for (const auto& t : x.terms) {
    std::vector<Vec<K>> u;
    for (const auto& e : t) u.push_back(push(e));
    y.terms.push_back(std::move(u));
  }
  for (const auto& m : x.diffs) {
    ElementMatrix<K> z(m.rows, m.cols, d.gamma.zero());
    for (std::size_t i = 0; i < m.entries.size(); ++i) z.entries[i] = push(m.entries[i]);
    y.diffs.push_back(std::move(z));
  }
  return y;
}

struct EmbedReport {
  bool pass = false;
  std::string witness;
  std::size_t pairs = 0;
};

template <class K>
EmbedReport verify_embedding(const AuslanderData<K>& d) {
  EmbedReport r;
  auto objs = projective_objects(d.lambda);
  objs.push_back(projective_complex(d.lambda, {d.lambda.unit()}));
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto before = derived_hom(x, y), after = derived_hom(embed_perf(d, x), embed_perf(d, y));
      ++r.pairs;
      if (!(before == after) && r.witness.empty())
        r.witness = "Hom profile " + before.to_string() + " became " + after.to_string();
    }
  r.pass = r.witness.empty();
  return r;
}

}  // namespace semiorth
