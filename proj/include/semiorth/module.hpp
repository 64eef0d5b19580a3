#pragma once

// Finite-dimensional right modules given by action matrices, module maps,
// and the projectives e_1 A + ... + e_r A realized concretely.
//
// Conventions: module elements are row vectors, m.b = m * rho(b), and a
// module map f: M -> N is a dim(M) x dim(N) matrix with f(m) = m * F.

#include <random>
#include <vector>

#include "semiorth/radical.hpp"

namespace semiorth {

template <class K>
class RightModule {
 public:
  RightModule() = default;

  /// action[i] is the matrix of basis element b_i. Checked unless check = false.
  RightModule(Algebra<K> a, std::size_t dim, std::vector<Matrix<K>> action, bool check = true)
      : alg_(std::move(a)), dim_(dim), action_(std::move(action)) {
    if (action_.size() != alg_.dim())
      throw AlgebraError(AlgebraErrc::InvalidModule, "need one action matrix per basis element");
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_)
        throw AlgebraError(AlgebraErrc::InvalidModule, "action matrix has the wrong size");
    if (check) validate();
  }

  const Algebra<K>& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const Matrix<K>& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix<K>>& actions() const { return action_; }

  Matrix<K> action_of(const Vec<K>& x) const {
    Matrix<K> r(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) r = r + x[i] * action_[i];
    return r;
  }

  Vec<K> act(const Vec<K>& m, const Vec<K>& x) const {
    Vec<K> r(dim_, K(0));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) axpy(r, x[i], m * action_[i]);
    return r;
  }

  /// rho(b_i) rho(b_j) = sum_k c_ijk rho(b_k) and rho(1) = id.
  void validate() const {
    std::size_t n = alg_.dim();
    if (action_of(alg_.unit()) != Matrix<K>::identity(dim_))
      throw AlgebraError(AlgebraErrc::InvalidModule, "unit does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<K> rhs(dim_, dim_);
        for (const auto& [k, c] : alg_.basis_product(i, j)) rhs = rhs + c * action_[k];
        if (action_[i] * action_[j] != rhs)
          throw AlgebraError(AlgebraErrc::InvalidModule,
                             "action is not multiplicative on (b" + std::to_string(i) + ", b" + std::to_string(j) + ")");
      }
  }

 private:
  Algebra<K> alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix<K>> action_;
};

template <class K>
bool same_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  return a.same_instance(b) || (a.field() == b.field() && same_table(a, b));
}

template <class K>
void require_same_algebra(const Algebra<K>& a, const Algebra<K>& b, const char* where) {
  if (!same_algebra(a, b)) throw AlgebraError(AlgebraErrc::AlgebraMismatch, std::string(where) + ": different algebras");
}

template <class K>
struct ModuleMap {
  RightModule<K> source, target;
  Matrix<K> matrix;  // dim(source) x dim(target)
};

template <class K>
bool is_module_map(const RightModule<K>& m, const RightModule<K>& n, const Matrix<K>& f) {
  if (f.rows() != m.dim() || f.cols() != n.dim()) return false;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    if (m.action(i) * f != f * n.action(i)) return false;
  return true;
}

template <class K>
RightModule<K> regular_module(const Algebra<K>& a) {
  std::vector<Matrix<K>> act;
  for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.right_mult(a.basis(i)));
  return RightModule<K>(a, a.dim(), std::move(act), false);
}

template <class K>
RightModule<K> zero_module(const Algebra<K>& a) {
  return RightModule<K>(a, 0, std::vector<Matrix<K>>(a.dim(), Matrix<K>(0, 0)), false);
}

/// Span closure of vectors under the action.
template <class K>
Subspace<K> generated_submodule(const RightModule<K>& m, const std::vector<Vec<K>>& vs) {
  Subspace<K> s(m.dim());
  std::vector<Vec<K>> todo = vs;
  while (!todo.empty()) {
    Vec<K> v = std::move(todo.back());
    todo.pop_back();
    if (!s.add(v)) continue;
    for (const auto& act : m.actions()) todo.push_back(v * act);
  }
  return s;
}

/// M * rad(A).
template <class K>
Subspace<K> radical_submodule(const RightModule<K>& m) {
  Subspace<K> s(m.dim());
  const auto rad = radical(m.algebra());
  const auto& r = rad.basis();
  if (r.empty() || m.dim() == 0) return s;
  std::vector<Matrix<K>> acts;
  for (const auto& x : r) acts.push_back(m.action_of(x));
  for (std::size_t i = 0; i < m.dim() && s.dim() < m.dim(); ++i)
    for (const auto& a : acts) s.add(unit_vec<K>(m.dim(), i) * a);
  return s;
}

template <class K>
struct Submodule {
  RightModule<K> module;
  std::vector<Vec<K>> basis;  // rows in the ambient module, one per coordinate
  Matrix<K> inclusion() const { return Matrix<K>::from_rows(basis, basis.empty() ? 0 : basis.front().size()); }
};

/// The submodule on an invariant subspace, in the subspace's echelon basis.
template <class K>
Submodule<K> submodule(const RightModule<K>& m, const Subspace<K>& w) {
  std::size_t d = w.dim();
  std::vector<Matrix<K>> act;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    Matrix<K> a(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      Vec<K> img = w.basis()[r] * m.action(i);
      if (!w.contains(img)) throw AlgebraError(AlgebraErrc::InvalidModule, "subspace is not a submodule");
      a.set_row(r, w.coordinates(img));
    }
    act.push_back(std::move(a));
  }
  Submodule<K> s{RightModule<K>(m.algebra(), d, std::move(act), false), w.basis()};
  if (d == 0) s.basis.clear();
  return s;
}

template <class K>
struct QuotientModule {
  RightModule<K> module;
  QuotientSpace<K> space;
  Matrix<K> projection() const {
    std::size_t n = space.kernel().ambient();
    Matrix<K> p(n, space.dim());
    for (std::size_t i = 0; i < n; ++i) p.set_row(i, space.project(unit_vec<K>(n, i)));
    return p;
  }
};

template <class K>
QuotientModule<K> quotient_module(const RightModule<K>& m, const Subspace<K>& w) {
  QuotientSpace<K> q(w);
  std::size_t d = q.dim();
  std::vector<Matrix<K>> act;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    Matrix<K> a(d, d);
    for (std::size_t r = 0; r < d; ++r) a.set_row(r, q.project(unit_vec<K>(m.dim(), q.lifted_index(r)) * m.action(i)));
    act.push_back(std::move(a));
  }
  return {RightModule<K>(m.algebra(), d, std::move(act), false), std::move(q)};
}

template <class K>
RightModule<K> direct_sum(const Algebra<K>& a, const std::vector<RightModule<K>>& ms) {
  std::size_t d = 0;
  for (const auto& m : ms) {
    require_same_algebra(a, m.algebra(), "direct_sum");
    d += m.dim();
  }
  std::vector<Matrix<K>> act(a.dim(), Matrix<K>(d, d));
  std::size_t off = 0;
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) act[i](off + r, off + c) = m.action(i)(r, c);
    off += m.dim();
  }
  return RightModule<K>(a, d, std::move(act), false);
}

/// e_1 A + ... + e_r A for idempotents e_j, with each summand's basis kept as
/// algebra elements so maps between such sums can be written as matrices of
/// algebra elements acting by left multiplication.
template <class K>
struct RealizedProjective {
  Algebra<K> algebra;
  std::vector<Vec<K>> idempotents;
  std::vector<Subspace<K>> summands;  // e_j A inside A
  std::vector<std::size_t> offsets;
  RightModule<K> module;

  std::size_t dim() const { return module.dim(); }

  /// Module vector to its components in A.
  std::vector<Vec<K>> components(const Vec<K>& v) const {
    std::vector<Vec<K>> out;
    for (std::size_t j = 0; j < summands.size(); ++j) {
      Vec<K> c = algebra.zero();
      for (std::size_t t = 0; t < summands[j].dim(); ++t) axpy(c, v[offsets[j] + t], summands[j].basis()[t]);
      out.push_back(std::move(c));
    }
    return out;
  }

  Vec<K> from_components(const std::vector<Vec<K>>& cs) const {
    Vec<K> v(dim(), K(0));
    for (std::size_t j = 0; j < summands.size(); ++j) {
      Vec<K> c = summands[j].coordinates(cs[j]);
      for (std::size_t t = 0; t < c.size(); ++t) v[offsets[j] + t] = c[t];
    }
    return v;
  }
};

template <class K>
RealizedProjective<K> realize_projective(const Algebra<K>& a, const std::vector<Vec<K>>& idempotents) {
  RealizedProjective<K> p{a, idempotents, {}, {}, {}};
  std::size_t total = 0;
  for (const auto& e : idempotents) {
    Subspace<K> s(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) s.add(a.mul(e, a.basis(k)));
    p.offsets.push_back(total);
    total += s.dim();
    p.summands.push_back(std::move(s));
  }
  std::vector<Matrix<K>> act(a.dim(), Matrix<K>(total, total));
  for (std::size_t j = 0; j < idempotents.size(); ++j) {
    const auto& s = p.summands[j];
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const Vec<K>& u = s.basis()[r];
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec<K> c = s.coordinates(a.mul(u, a.basis(i)));
        for (std::size_t t = 0; t < c.size(); ++t) act[i](p.offsets[j] + r, p.offsets[j] + t) = c[t];
      }
    }
  }
  p.module = RightModule<K>(a, total, std::move(act), false);
  return p;
}

/// Matrix of algebra elements: entry (l, j) lies in f_l A e_j and sends the
/// j-th source summand e_j A to the l-th target summand by left multiplication.
template <class K>
struct ElementMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Vec<K>> entries;

  ElementMatrix() = default;
  ElementMatrix(std::size_t r, std::size_t c, const Vec<K>& zero) : rows(r), cols(c), entries(r * c, zero) {}
  Vec<K>& operator()(std::size_t l, std::size_t j) { return entries[l * cols + j]; }
  const Vec<K>& operator()(std::size_t l, std::size_t j) const { return entries[l * cols + j]; }
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Vec<K>& v) { return is_zero_vec(v); });
  }
};

/// Product "outer then inner" (apply inner first): (outer * inner)(l, j) = sum_m outer(l, m) inner(m, j).
template <class K>
ElementMatrix<K> compose(const Algebra<K>& a, const ElementMatrix<K>& outer, const ElementMatrix<K>& inner) {
  if (outer.cols != inner.rows) throw DimensionError("compose: size mismatch");
  ElementMatrix<K> r(outer.rows, inner.cols, a.zero());
  for (std::size_t l = 0; l < outer.rows; ++l)
    for (std::size_t m = 0; m < outer.cols; ++m) {
      if (is_zero_vec(outer(l, m))) continue;
      for (std::size_t j = 0; j < inner.cols; ++j)
        if (!is_zero_vec(inner(m, j))) r(l, j) = add(r(l, j), a.mul(outer(l, m), inner(m, j)));
    }
  return r;
}

/// Linear matrix (row convention) of an element matrix between realized projectives.
template <class K>
Matrix<K> linear_matrix(const RealizedProjective<K>& src, const RealizedProjective<K>& tgt,
                        const ElementMatrix<K>& x) {
  const auto& a = src.algebra;
  Matrix<K> m(src.dim(), tgt.dim());
  for (std::size_t j = 0; j < src.summands.size(); ++j)
    for (std::size_t r = 0; r < src.summands[j].dim(); ++r) {
      const Vec<K>& u = src.summands[j].basis()[r];
      for (std::size_t l = 0; l < tgt.summands.size(); ++l) {
        if (is_zero_vec(x(l, j))) continue;
        Vec<K> c = tgt.summands[l].coordinates(a.mul(x(l, j), u));
        for (std::size_t t = 0; t < c.size(); ++t) m(src.offsets[j] + r, tgt.offsets[l] + t) += c[t];
      }
    }
  return m;
}

/// Idempotents used to block the Hom computation: a complete orthogonal set.
template <class K>
const std::vector<Vec<K>>& blocking_idempotents(const Algebra<K>& a) {
  if (!a.hints().idempotents.empty()) return a.hints().idempotents;
  return primitive_idempotents(a);
}

/// Basis of Hom_A(M, N). Unknowns are block diagonal for the decomposition
/// M = sum M e_i, N = sum N e_i, and the remaining equations come from the
/// pieces e_i g e_j of the algebra generators g.
template <class K>
std::vector<Matrix<K>> hom_space(const RightModule<K>& m, const RightModule<K>& n) {
  require_same_algebra(m.algebra(), n.algebra(), "hom_space");
  const Algebra<K>& a = m.algebra();
  std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  const auto& ids = blocking_idempotents(a);

  // Adapted bases: rows of T_M are a basis of M e_1, then M e_2, ...
  auto adapted = [&](const RightModule<K>& mod, std::vector<std::size_t>& block_start) {
    std::vector<Vec<K>> rows;
    for (const auto& e : ids) {
      block_start.push_back(rows.size());
      Matrix<K> p = mod.action_of(e);
      Subspace<K> s(mod.dim());
      for (std::size_t i = 0; i < mod.dim(); ++i) s.add(p.row(i));
      rows.insert(rows.end(), s.basis().begin(), s.basis().end());
    }
    block_start.push_back(rows.size());
    if (rows.size() != mod.dim()) throw AlgebraError(AlgebraErrc::InvalidModule, "idempotents do not split the module");
    return Matrix<K>::from_rows(rows, mod.dim());
  };
  std::vector<std::size_t> bm, bn;
  Matrix<K> tm = adapted(m, bm), tn = adapted(n, bn);
  Matrix<K> tm_inv = *invert(tm), tn_inv = *invert(tn);

  // Unknown index for block entry (r, c) with r in block i of M, c in block i of N.
  std::size_t nb = ids.size();
  std::vector<std::size_t> var_start(nb + 1, 0);
  for (std::size_t i = 0; i < nb; ++i)
    var_start[i + 1] = var_start[i] + (bm[i + 1] - bm[i]) * (bn[i + 1] - bn[i]);
  std::size_t nvars = var_start[nb];
  if (nvars == 0) return {};
  auto var = [&](std::size_t i, std::size_t r, std::size_t c) {
    return var_start[i] + (r - bm[i]) * (bn[i + 1] - bn[i]) + (c - bn[i]);
  };

  Subspace<K> eqs(nvars);
  for (const auto& g : algebra_generators(a))
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        Vec<K> piece = a.mul(a.mul(ids[i], g), ids[j]);
        if (is_zero_vec(piece)) continue;
        // g maps M e_i to M e_j: (G_M)_{ij} F_j = F_i (G_N)_{ij}.
        Matrix<K> gm = tm * m.action_of(piece) * tm_inv;
        Matrix<K> gn = tn * n.action_of(piece) * tn_inv;
        for (std::size_t r = bm[i]; r < bm[i + 1]; ++r)
          for (std::size_t c = bn[j]; c < bn[j + 1]; ++c) {
            Vec<K> row(nvars, K(0));
            for (std::size_t s = bm[j]; s < bm[j + 1]; ++s)
              if (!is_zero(gm(r, s))) row[var(j, s, c)] += gm(r, s);
            for (std::size_t s = bn[i]; s < bn[i + 1]; ++s)
              if (!is_zero(gn(s, c))) row[var(i, r, s)] -= gn(s, c);
            if (!is_zero_vec(row)) eqs.add(row);
            if (eqs.dim() == nvars) return {};
          }
      }

  std::vector<Matrix<K>> out;
  Matrix<K> sys = eqs.dim() ? Matrix<K>::from_rows(eqs.basis(), nvars) : Matrix<K>(0, nvars);
  for (const auto& sol : kernel_basis(sys)) {
    Matrix<K> f(dm, dn);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t r = bm[i]; r < bm[i + 1]; ++r)
        for (std::size_t c = bn[i]; c < bn[i + 1]; ++c) f(r, c) = sol[var(i, r, c)];
    out.push_back(tm_inv * f * tn);
  }
  return out;
}

/// An isomorphism M -> N if a seeded random combination of Hom(M, N) is
/// invertible. A negative answer is not a proof of non-isomorphism.
template <class K>
std::optional<Matrix<K>> find_isomorphism(const RightModule<K>& m, const RightModule<K>& n, std::uint64_t seed = 0,
                                          int attempts = 4) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Matrix<K>(0, 0);
  auto basis = hom_space(m, n);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  const Field& f = m.algebra().field();
  for (int t = 0; t < attempts; ++t) {
    Matrix<K> c(m.dim(), n.dim());
    for (const auto& b : basis) {
      std::int64_t coef = static_cast<std::int64_t>(rng() % 1000) - 499;
      c = c + f.integer<K>(coef) * b;
    }
    if (!is_zero(determinant(c))) return c;
  }
  return std::nullopt;
}

/// dim of M e for each idempotent e.
template <class K>
std::vector<std::size_t> idempotent_dims(const RightModule<K>& m, const std::vector<Vec<K>>& ids) {
  std::vector<std::size_t> out;
  for (const auto& e : ids) out.push_back(rank(m.action_of(e)));
  return out;
}

/// e_i A for a complete set of primitive orthogonal idempotents.
template <class K>
std::vector<RightModule<K>> indecomposable_projectives(const Algebra<K>& a) {
  std::vector<RightModule<K>> out;
  for (const auto& e : primitive_idempotents(a)) out.push_back(realize_projective(a, {e}).module);
  return out;
}

/// Simple module e A / e rad(A) for each basic idempotent e.
template <class K>
std::vector<RightModule<K>> simple_modules(const Algebra<K>& a) {
  std::vector<RightModule<K>> out;
  for (const auto& e : basic_idempotents(a)) {
    auto p = realize_projective(a, {e});
    out.push_back(quotient_module(p.module, radical_submodule(p.module)).module);
  }
  return out;
}

/// Dimension of the top of e A at each basic idempotent e, i.e. dim of S_e e.
template <class K>
std::vector<std::size_t> simple_top_dims(const Algebra<K>& a) {
  std::vector<std::size_t> out;
  auto ids = basic_idempotents(a);
  auto simples = simple_modules(a);
  for (std::size_t i = 0; i < ids.size(); ++i) out.push_back(rank(simples[i].action_of(ids[i])));
  return out;
}

/// Multiplicity of each simple in top(M) = M / M rad.
template <class K>
std::vector<std::size_t> top_multiplicities(const RightModule<K>& m) {
  const Algebra<K>& a = m.algebra();
  auto top = quotient_module(m, radical_submodule(m)).module;
  auto ids = basic_idempotents(a);
  auto unit_dims = simple_top_dims(a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out.push_back(rank(top.action_of(ids[i])) / unit_dims[i]);
  return out;
}

}  // namespace semiorth
