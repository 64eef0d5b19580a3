#pragma once

// Independent reference computations for module-level tests. Nothing here
// uses idempotents, covers or minimality: Hom is the full intertwiner system
// and Ext comes from a free (non-minimal) resolution.

#include <random>
#include <vector>

#include "semiorth/module.hpp"
#include "semiorth/quiver.hpp"
#include "semiorth/random.hpp"

namespace semiorth::testing {

/// dim Hom_A(M, N) from the dense system rho_M(b) F = F rho_N(b) over all b.
template <class K>
std::size_t brute_hom_dim(const RightModule<K>& m, const RightModule<K>& n) {
  std::size_t dm = m.dim(), dn = n.dim(), nv = dm * dn;
  if (nv == 0) return 0;
  std::vector<Vec<K>> rows;
  for (std::size_t b = 0; b < m.algebra().dim(); ++b)
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t c = 0; c < dn; ++c) {
        Vec<K> row(nv, K(0));
        for (std::size_t s = 0; s < dm; ++s) row[s * dn + c] += m.action(b)(r, s);
        for (std::size_t s = 0; s < dn; ++s) row[r * dn + s] -= n.action(b)(s, c);
        rows.push_back(std::move(row));
      }
  return nv - rank(Matrix<K>::from_rows(rows, nv));
}

/// Ext^0..Ext^top(M, N) from a free resolution. Each step maps A^r onto the
/// current syzygy, sending units to greedily chosen cyclic generators.
template <class K>
std::vector<std::size_t> brute_ext_dims(const RightModule<K>& m, const RightModule<K>& n, std::size_t top) {
  const Algebra<K>& a = m.algebra();
  std::size_t na = a.dim(), dn = n.dim();
  // Free terms A^{r_k} and differential matrices d_k : A^{r_k} -> A^{r_{k-1}} (linear, row convention).
  std::vector<std::size_t> ranks;
  std::vector<Matrix<K>> diffs;  // diffs[k-1] = d_k
  RightModule<K> cur = m;
  std::vector<Vec<K>> cur_basis;  // current syzygy inside the previous free module
  for (std::size_t k = 0; k <= top + 1; ++k) {
    std::vector<Vec<K>> gens;
    Subspace<K> span(cur.dim());
    for (std::size_t i = 0; i < cur.dim() && span.dim() < cur.dim(); ++i) {
      Vec<K> v = unit_vec<K>(cur.dim(), i);
      if (span.contains(v)) continue;
      gens.push_back(v);
      for (std::size_t b = 0; b < na; ++b) span.add(cur.act(v, a.basis(b)));
    }
    std::size_t r = gens.size();
    ranks.push_back(r);
    if (r == 0) break;
    // surjection A^r -> cur: (x_1..x_r) -> sum_i g_i x_i.
    Matrix<K> s(r * na, cur.dim());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t b = 0; b < na; ++b) s.set_row(i * na + b, cur.act(gens[i], a.basis(b)));
    if (k > 0) {
      Matrix<K> d(r * na, ranks[k - 1] * na);
      // unit i of A^r goes to g_i, seen inside A^{r_{k-1}}; unit_i * b goes to g_i b.
      for (std::size_t i = 0; i < r; ++i) {
        Vec<K> gi(ranks[k - 1] * na, K(0));
        for (std::size_t t = 0; t < cur.dim(); ++t) axpy(gi, gens[i][t], cur_basis[t]);
        for (std::size_t b = 0; b < na; ++b) {
          Vec<K> img(ranks[k - 1] * na, K(0));
          for (std::size_t j = 0; j < ranks[k - 1]; ++j) {
            Vec<K> comp(gi.begin() + j * na, gi.begin() + (j + 1) * na);
            Vec<K> prod = a.mul(comp, a.basis(b));
            for (std::size_t t = 0; t < na; ++t) img[j * na + t] = prod[t];
          }
          d.set_row(i * na + b, img);
        }
      }
      diffs.push_back(d);
    }
    // kernel of s as a submodule of the free module A^r.
    std::vector<Matrix<K>> free_act;
    for (std::size_t b = 0; b < na; ++b) {
      Matrix<K> rb(r * na, r * na);
      Matrix<K> rm = a.right_mult(a.basis(b));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t x = 0; x < na; ++x)
          for (std::size_t y = 0; y < na; ++y) rb(i * na + x, i * na + y) = rm(x, y);
      free_act.push_back(rb);
    }
    RightModule<K> free_mod(a, r * na, free_act, false);
    Subspace<K> ker(r * na);
    ker.add_all(left_kernel_basis(s));
    auto sub = submodule(free_mod, ker);
    cur = sub.module;
    cur_basis = sub.basis;
  }
  // Hom(A^r, N) = N^r; delta_k: N^{r_{k-1}} -> N^{r_k}, phi -> phi o d_k.
  auto delta_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= ranks.size() || ranks[k] == 0 || k - 1 >= diffs.size()) return 0;
    std::size_t rp = ranks[k - 1], rc = ranks[k];
    std::vector<Vec<K>> rows;
    for (std::size_t j = 0; j < rp; ++j)
      for (std::size_t t = 0; t < dn; ++t) {
        // phi sends unit j to the t-th basis vector of N, other units to 0.
        Vec<K> row(rc * dn, K(0));
        for (std::size_t i = 0; i < rc; ++i) {
          // image of the unit of the i-th summand
          Vec<K> unit_img(rp * na, K(0));
          for (std::size_t b = 0; b < na; ++b)
            if (!is_zero(a.unit()[b])) axpy(unit_img, a.unit()[b], diffs[k - 1].row(i * na + b));
          Vec<K> comp(unit_img.begin() + j * na, unit_img.begin() + (j + 1) * na);
          Vec<K> v = n.act(unit_vec<K>(dn, t), comp);
          for (std::size_t u = 0; u < dn; ++u) row[i * dn + u] = v[u];
        }
        rows.push_back(std::move(row));
      }
    return rank(Matrix<K>::from_rows(rows, rc * dn));
  };
  std::vector<std::size_t> out(top + 1, 0);
  for (std::size_t k = 0; k <= top && k < ranks.size(); ++k) {
    std::size_t h = ranks[k] * dn;
    out[k] = h - delta_rank(k) - delta_rank(k + 1);
  }
  return out;
}

/// 1 -> 2 -> 3 with the composite zero.
template <class K>
QuiverPresentation<K> a3_zero_relation() {
  QuiverPresentation<K> p;
  p.vertices = {"1", "2", "3"};
  p.arrows = {{"alpha", "1", "2"}, {"beta", "2", "3"}};
  p.relations = {{PathTerm<K>{K(1), {"alpha", "beta"}}}};
  return p;
}

/// 1 -> 2 -> 3 without relations.
template <class K>
QuiverPresentation<K> a3_path() {
  QuiverPresentation<K> p = a3_zero_relation<K>();
  p.relations.clear();
  return p;
}

}  // namespace semiorth::testing
