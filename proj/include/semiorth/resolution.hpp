#pragma once

// Projective covers, minimal projective resolutions, Ext and the dimension
// predicates built on them.
//
// Terms of a resolution are sums of basic projectives e A, recorded by their
// idempotents; differentials are element matrices (see module.hpp), so the
// same data doubles as a perfect complex in the derived layer.

#include <optional>
#include <string>
#include <vector>

#include "semiorth/module.hpp"

namespace semiorth {

inline constexpr std::size_t kDefaultCutoff = 20;

template <class K>
struct ProjectiveCover {
  RealizedProjective<K> projective;
  std::vector<std::size_t> classes;  // basic idempotent index per summand
  std::vector<Vec<K>> generators;    // images of the summand idempotents in M
  Matrix<K> surjection;              // dim P x dim M
};

template <class K>
ProjectiveCover<K> projective_cover(const RightModule<K>& m) {
  if (m.dim() == 0) throw AlgebraError(AlgebraErrc::ZeroModule, "projective cover of the zero module");
  const Algebra<K>& a = m.algebra();
  auto ids = basic_idempotents(a);
  Subspace<K> covered = radical_submodule(m);
  std::vector<Vec<K>> gens, gen_ids;
  std::vector<std::size_t> classes;
  for (std::size_t c = 0; c < ids.size() && covered.dim() < m.dim(); ++c) {
    Matrix<K> p = m.action_of(ids[c]);
    for (std::size_t i = 0; i < m.dim() && covered.dim() < m.dim(); ++i) {
      Vec<K> v = p.row(i);
      if (covered.contains(v)) continue;
      gens.push_back(v);
      gen_ids.push_back(ids[c]);
      classes.push_back(c);
      for (const auto& act : m.actions()) covered.add(v * act);
    }
  }
  auto proj = realize_projective(a, gen_ids);
  Matrix<K> s(proj.dim(), m.dim());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t r = 0; r < proj.summands[j].dim(); ++r)
      s.set_row(proj.offsets[j] + r, m.act(gens[j], proj.summands[j].basis()[r]));
  return {std::move(proj), std::move(classes), std::move(gens), std::move(s)};
}

enum class ResolutionStatus { Complete, TruncatedAt };

template <class K>
struct Resolution {
  RightModule<K> module;
  std::vector<std::vector<std::size_t>> term_classes;  // P_k as basic classes
  std::vector<std::vector<Vec<K>>> term_idempotents;
  std::vector<ElementMatrix<K>> differentials;  // differentials[k-1] = d_k : P_k -> P_{k-1}
  Matrix<K> augmentation;                        // P_0 -> M, linear
  std::vector<RightModule<K>> syzygies;          // Omega^0 = M, Omega^1, ...
  ResolutionStatus status = ResolutionStatus::Complete;
  std::size_t length = 0;  // d for Complete(d), cutoff for TruncatedAt
  std::optional<std::pair<std::size_t, std::size_t>> period;  // Omega^i iso Omega^j, i < j

  std::size_t terms() const { return term_classes.size(); }
};

struct ResolutionOptions {
  std::size_t cutoff = kDefaultCutoff;
  bool detect_period = true;
  bool stop_on_period = false;
  std::uint64_t seed = 0;
};

/// Minimal projective resolution P_0, ..., P_cutoff (fewer if it terminates).
template <class K>
Resolution<K> minimal_resolution(const RightModule<K>& m, ResolutionOptions opt = {}) {
  const Algebra<K>& a = m.algebra();
  Resolution<K> res;
  res.module = m;
  res.syzygies.push_back(m);
  if (m.dim() == 0) return res;
  auto ids = basic_idempotents(a);

  RightModule<K> current = m;
  std::optional<RealizedProjective<K>> prev;  // P_{k-1}
  std::vector<Vec<K>> current_basis;          // Omega^k inside P_{k-1}
  for (std::size_t k = 0;; ++k) {
    auto cover = projective_cover(current);
    res.term_classes.push_back(cover.classes);
    std::vector<Vec<K>> tid;
    for (auto c : cover.classes) tid.push_back(ids[c]);
    res.term_idempotents.push_back(tid);
    if (k == 0) {
      res.augmentation = cover.surjection;
    } else {
      // Generator j of Omega^k as an element of P_{k-1} gives column j of d_k.
      ElementMatrix<K> d(prev->idempotents.size(), cover.generators.size(), a.zero());
      for (std::size_t j = 0; j < cover.generators.size(); ++j) {
        Vec<K> in_prev(prev->dim(), K(0));
        for (std::size_t t = 0; t < current_basis.size(); ++t) axpy(in_prev, cover.generators[j][t], current_basis[t]);
        auto comps = prev->components(in_prev);
        for (std::size_t l = 0; l < comps.size(); ++l) d(l, j) = comps[l];
      }
      res.differentials.push_back(std::move(d));
    }

    Subspace<K> ker(cover.projective.dim());
    ker.add_all(left_kernel_basis(cover.surjection));
    if (ker.dim() == 0) {
      res.status = ResolutionStatus::Complete;
      res.length = k;
      return res;
    }
    if (k == opt.cutoff) {
      res.status = ResolutionStatus::TruncatedAt;
      res.length = opt.cutoff;
      return res;
    }
    auto sub = submodule(cover.projective.module, ker);
    res.syzygies.push_back(sub.module);
    if (opt.detect_period && !res.period) {
      const auto& next = sub.module;
      auto next_dims = idempotent_dims(next, ids);
      for (std::size_t i = 0; i + 1 < res.syzygies.size(); ++i) {
        const auto& earlier = res.syzygies[i];
        if (earlier.dim() != next.dim() || idempotent_dims(earlier, ids) != next_dims) continue;
        if (find_isomorphism(earlier, next, opt.seed + i)) {
          res.period = std::make_pair(i, k + 1);
          break;
        }
      }
      if (res.period && opt.stop_on_period) {
        res.status = ResolutionStatus::TruncatedAt;
        res.length = k + 1;
        return res;
      }
    }
    current = sub.module;
    current_basis = sub.basis;
    prev = std::move(cover.projective);
  }
}

/// Hom(e A, N) = N e, as a subspace of N.
template <class K>
Subspace<K> hom_from_projective(const RightModule<K>& n, const Vec<K>& e) {
  Matrix<K> p = n.action_of(e);
  Subspace<K> s(n.dim());
  for (std::size_t i = 0; i < n.dim(); ++i) s.add(p.row(i));
  return s;
}

/// Dimensions of Ext^0 .. Ext^cutoff(M, N).
template <class K>
std::vector<std::size_t> ext_dims(const RightModule<K>& m, const RightModule<K>& n, std::size_t cutoff = kDefaultCutoff) {
  require_same_algebra(m.algebra(), n.algebra(), "ext_dims");
  std::vector<std::size_t> out(cutoff + 1, 0);
  if (m.dim() == 0 || n.dim() == 0) return out;
  ResolutionOptions opt;
  opt.cutoff = cutoff + 1;
  opt.detect_period = false;
  auto res = minimal_resolution(m, opt);
  std::size_t terms = res.terms();

  std::vector<std::vector<Subspace<K>>> homs(terms);  // Hom(P_k, N) = sum_j N e_j
  std::vector<std::size_t> hdim(terms, 0);
  for (std::size_t k = 0; k < terms; ++k)
    for (const auto& e : res.term_idempotents[k]) {
      homs[k].push_back(hom_from_projective(n, e));
      hdim[k] += homs[k].back().dim();
    }
  // rank of Hom(P_{k-1}, N) -> Hom(P_k, N), (n_l) -> (sum_l n_l x_lj)_j.
  std::vector<std::size_t> rk(terms + 1, 0);
  for (std::size_t k = 1; k < terms; ++k) {
    const auto& d = res.differentials[k - 1];
    std::vector<Vec<K>> rows;
    for (std::size_t l = 0; l < homs[k - 1].size(); ++l)
      for (const auto& nb : homs[k - 1][l].basis()) {
        Vec<K> row;
        for (std::size_t j = 0; j < d.cols; ++j) {
          Vec<K> img = n.act(nb, d(l, j));
          Vec<K> c = homs[k][j].coordinates(img);
          row.insert(row.end(), c.begin(), c.end());
        }
        rows.push_back(std::move(row));
      }
    if (!rows.empty() && hdim[k] > 0) rk[k] = rank(Matrix<K>::from_rows(rows, hdim[k]));
  }
  for (std::size_t k = 0; k <= cutoff && k < terms; ++k) out[k] = hdim[k] - rk[k] - rk[k + 1];
  return out;
}

struct DimensionBound {
  enum class Kind { Finite, AtLeast, PeriodicHenceInfinite };
  Kind kind = Kind::Finite;
  std::size_t value = 0;  // d for Finite, the cutoff for AtLeast, the syzygy index for periodic

  bool finite() const { return kind == Kind::Finite; }
  std::string to_string() const {
    switch (kind) {
      case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
      case Kind::AtLeast: return "AtLeast(" + std::to_string(value) + ")";
      case Kind::PeriodicHenceInfinite: return "PeriodicHenceInfinite";
    }
    return "";
  }
  friend bool operator==(const DimensionBound&, const DimensionBound&) = default;

  static DimensionBound finite_dim(std::size_t d) { return {Kind::Finite, d}; }
  static DimensionBound at_least(std::size_t c) { return {Kind::AtLeast, c}; }
  static DimensionBound periodic(std::size_t at) { return {Kind::PeriodicHenceInfinite, at}; }
};

template <class K>
DimensionBound projective_dimension(const RightModule<K>& m, std::size_t cutoff = kDefaultCutoff) {
  ResolutionOptions opt;
  opt.cutoff = cutoff;
  opt.stop_on_period = true;
  auto res = minimal_resolution(m, opt);
  if (res.status == ResolutionStatus::Complete) return DimensionBound::finite_dim(res.length);
  if (res.period) return DimensionBound::periodic(res.period->second);
  return DimensionBound::at_least(cutoff);
}

/// Combine per-module bounds into the supremum.
inline DimensionBound sup(const DimensionBound& x, const DimensionBound& y) {
  using Kd = DimensionBound::Kind;
  if (x.kind == Kd::PeriodicHenceInfinite) return x;
  if (y.kind == Kd::PeriodicHenceInfinite) return y;
  if (x.kind == Kd::AtLeast) return x;
  if (y.kind == Kd::AtLeast) return y;
  return DimensionBound::finite_dim(std::max(x.value, y.value));
}

/// Max projective dimension of the simple modules.
template <class K>
DimensionBound global_dimension(const Algebra<K>& a, std::size_t cutoff = kDefaultCutoff) {
  DimensionBound b = DimensionBound::finite_dim(0);
  for (const auto& s : simple_modules(a)) b = sup(b, projective_dimension(s, cutoff));
  return b;
}

template <class K>
DimensionBound is_regular(const Algebra<K>& a, std::size_t cutoff = kDefaultCutoff) {
  return global_dimension(a, cutoff);
}

/// A as a right module over A^op (x) A: c.(x (x) y) = x c y.
template <class K>
RightModule<K> diagonal_bimodule(const Algebra<K>& a, const Algebra<K>& env) {
  std::size_t n = a.dim();
  std::vector<Matrix<K>> lm, rm;
  for (std::size_t i = 0; i < n; ++i) {
    lm.push_back(a.left_mult(a.basis(i)));
    rm.push_back(a.right_mult(a.basis(i)));
  }
  std::vector<Matrix<K>> act;
  act.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) act.push_back(lm[i] * rm[j]);
  return RightModule<K>(env, n, std::move(act), false);
}

/// Projective dimension of A over its enveloping algebra.
template <class K>
DimensionBound is_smooth(const Algebra<K>& a, std::size_t cutoff = kDefaultCutoff) {
  auto env = enveloping(a);
  return projective_dimension(diagonal_bimodule(a, env), cutoff);
}

/// Properness for a finite-dimensional algebra: Ext between simples is
/// computed up to the cutoff, and each value is a finite dimension.
template <class K>
bool is_proper(const Algebra<K>& a, std::size_t cutoff = 4) {
  auto simples = simple_modules(a);
  for (const auto& s : simples)
    for (const auto& t : simples) ext_dims(s, t, cutoff);
  return true;
}

}  // namespace semiorth
