#pragma once

// Bounded complexes of projectives (perfect complexes) and their Hom complexes.
//
// Degree d holds a sum of projectives e_1 A + ... + e_r A; differentials go
// up in degree and are element matrices. A graded map of degree l has one
// element matrix X^d -> Y^{d+l} per source degree.
//
// Signs: delta(f) = d_Y f - (-1)^l f d_X, X[n]^d = X^{d+n} with differential
// (-1)^n d, cone(f)^n = X^{n+1} + Y^n with d(x, y) = (-d_X x, f x + d_Y y).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semiorth/resolution.hpp"

namespace semiorth {

template <class K>
struct PerfComplex {
  Algebra<K> algebra;
  int lo = 0;
  std::vector<std::vector<Vec<K>>> terms;  // terms[i] sits in degree lo + i
  std::vector<ElementMatrix<K>> diffs;     // diffs[i] : degree lo+i -> lo+i+1

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int d) const { return d >= lo && d <= hi(); }
  std::size_t rank_at(int d) const { return in_range(d) ? terms[d - lo].size() : 0; }

  const std::vector<Vec<K>>& term(int d) const {
    static const std::vector<Vec<K>> empty;
    return in_range(d) ? terms[d - lo] : empty;
  }

  /// d : X^d -> X^{d+1}, zero outside the stored range.
  ElementMatrix<K> diff(int d) const {
    if (in_range(d) && in_range(d + 1)) return diffs[d - lo];
    return ElementMatrix<K>(rank_at(d + 1), rank_at(d), algebra.zero());
  }
};

template <class K>
PerfComplex<K> zero_complex(const Algebra<K>& a) {
  return PerfComplex<K>{a, 0, {}, {}};
}

/// A single sum of projectives in one degree.
template <class K>
PerfComplex<K> projective_complex(const Algebra<K>& a, std::vector<Vec<K>> idempotents, int degree = 0) {
  return PerfComplex<K>{a, degree, {std::move(idempotents)}, {}};
}

/// [e_0 A -> e_1 A] in degrees deg, deg+1, the map being left multiplication by x in e_1 A e_0.
template <class K>
PerfComplex<K> two_term_complex(const Algebra<K>& a, const Vec<K>& e0, const Vec<K>& e1, const Vec<K>& x,
                                int deg = 0) {
  ElementMatrix<K> d(1, 1, a.zero());
  d(0, 0) = x;
  return PerfComplex<K>{a, deg, {{e0}, {e1}}, {d}};
}

/// d o d = 0 and every entry lies in the right corner; throws InvalidModule otherwise.
template <class K>
void validate_complex(const PerfComplex<K>& x) {
  const auto& a = x.algebra;
  if (x.diffs.size() + 1 != std::max<std::size_t>(x.terms.size(), 1))
    throw AlgebraError(AlgebraErrc::InvalidModule, "complex: need one differential between consecutive terms");
  for (const auto& t : x.terms)
    for (const auto& e : t)
      if (!a.is_idempotent(e)) throw AlgebraError(AlgebraErrc::NotIdempotent, "complex term is not idempotent");
  for (int d = x.lo; d < x.hi(); ++d) {
    const auto& m = x.diffs[d - x.lo];
    if (m.rows != x.rank_at(d + 1) || m.cols != x.rank_at(d))
      throw AlgebraError(AlgebraErrc::InvalidModule, "differential has the wrong shape in degree " + std::to_string(d));
    for (std::size_t l = 0; l < m.rows; ++l)
      for (std::size_t j = 0; j < m.cols; ++j)
        if (a.mul(a.mul(x.term(d + 1)[l], m(l, j)), x.term(d)[j]) != m(l, j))
          throw AlgebraError(AlgebraErrc::InvalidModule, "differential entry outside its corner in degree " +
                                                             std::to_string(d));
    if (d + 1 < x.hi() && !compose(a, x.diffs[d + 1 - x.lo], m).is_zero())
      throw AlgebraError(AlgebraErrc::InvalidModule, "d o d != 0 at degree " + std::to_string(d));
  }
}

/// Finite minimal resolution as a complex: P_k in degree -k.
template <class K>
PerfComplex<K> complex_from_resolution(const Resolution<K>& r) {
  if (r.status != ResolutionStatus::Complete)
    throw AlgebraError(AlgebraErrc::InfiniteDimensional, "module has no finite projective resolution within the cutoff");
  PerfComplex<K> c{r.module.algebra(), -static_cast<int>(r.terms()) + 1, {}, {}};
  for (std::size_t k = r.terms(); k-- > 0;) c.terms.push_back(r.term_idempotents[k]);
  for (std::size_t k = r.terms(); k-- > 1;) c.diffs.push_back(r.differentials[k - 1]);
  if (r.terms() == 0) c.lo = 0;
  return c;
}

template <class K>
PerfComplex<K> shift(const PerfComplex<K>& x, int n) {
  PerfComplex<K> y = x;
  y.lo = x.lo - n;
  if (n % 2 != 0)
    for (auto& m : y.diffs)
      for (auto& e : m.entries) e = scale(K(-1), e);
  return y;
}

template <class K>
PerfComplex<K> direct_sum(const std::vector<PerfComplex<K>>& xs) {
  if (xs.empty()) throw DimensionError("direct_sum of no complexes");
  const auto& a = xs.front().algebra;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& x : xs)
    if (!x.terms.empty()) {
      lo = any ? std::min(lo, x.lo) : x.lo;
      hi = any ? std::max(hi, x.hi()) : x.hi();
      any = true;
    }
  PerfComplex<K> s{a, lo, {}, {}};
  if (!any) return s;
  for (int d = lo; d <= hi; ++d) {
    std::vector<Vec<K>> t;
    for (const auto& x : xs) t.insert(t.end(), x.term(d).begin(), x.term(d).end());
    s.terms.push_back(std::move(t));
  }
  for (int d = lo; d < hi; ++d) {
    ElementMatrix<K> m(s.rank_at(d + 1), s.rank_at(d), a.zero());
    std::size_t ro = 0, co = 0;
    for (const auto& x : xs) {
      auto dx = x.diff(d);
      for (std::size_t l = 0; l < dx.rows; ++l)
        for (std::size_t j = 0; j < dx.cols; ++j) m(ro + l, co + j) = dx(l, j);
      ro += x.rank_at(d + 1);
      co += x.rank_at(d);
    }
    s.diffs.push_back(std::move(m));
  }
  return s;
}

template <class K>
struct GradedMap {
  int degree = 0;
  std::map<int, ElementMatrix<K>> comps;  // source degree d -> X^d -> Y^{d+degree}
};

template <class K>
ElementMatrix<K> component(const PerfComplex<K>& x, const PerfComplex<K>& y, const GradedMap<K>& f, int d) {
  auto it = f.comps.find(d);
  if (it != f.comps.end()) return it->second;
  return ElementMatrix<K>(y.rank_at(d + f.degree), x.rank_at(d), x.algebra.zero());
}

template <class K>
GradedMap<K> identity_map(const PerfComplex<K>& x) {
  GradedMap<K> f;
  for (int d = x.lo; d <= x.hi(); ++d) {
    ElementMatrix<K> m(x.rank_at(d), x.rank_at(d), x.algebra.zero());
    for (std::size_t i = 0; i < x.rank_at(d); ++i) m(i, i) = x.term(d)[i];
    f.comps[d] = std::move(m);
  }
  return f;
}

/// g o f for f : X -> Y and g : Y -> Z.
template <class K>
GradedMap<K> compose_maps(const PerfComplex<K>& x, const PerfComplex<K>& y, const PerfComplex<K>& z,
                          const GradedMap<K>& g, const GradedMap<K>& f) {
  GradedMap<K> h;
  h.degree = f.degree + g.degree;
  for (int d = x.lo; d <= x.hi(); ++d) {
    if (!z.in_range(d + h.degree)) continue;
    h.comps[d] = compose(x.algebra, component(y, z, g, d + f.degree), component(x, y, f, d));
  }
  return h;
}

template <class K>
GradedMap<K> linear_combination(const PerfComplex<K>& x, const PerfComplex<K>& y, const K& s, const GradedMap<K>& f,
                                const K& t, const GradedMap<K>& g) {
  GradedMap<K> h;
  h.degree = f.degree;
  for (int d = x.lo; d <= x.hi(); ++d) {
    if (!y.in_range(d + h.degree)) continue;
    auto a = component(x, y, f, d), b = component(x, y, g, d);
    for (std::size_t i = 0; i < a.entries.size(); ++i) a.entries[i] = add(scale(s, a.entries[i]), scale(t, b.entries[i]));
    h.comps[d] = std::move(a);
  }
  return h;
}

/// delta(f) = d_Y f - (-1)^l f d_X.
template <class K>
GradedMap<K> hom_differential(const PerfComplex<K>& x, const PerfComplex<K>& y, const GradedMap<K>& f) {
  const auto& a = x.algebra;
  int l = f.degree;
  K sign = (l % 2 == 0) ? K(-1) : K(1);
  GradedMap<K> out;
  out.degree = l + 1;
  for (int d = x.lo; d <= x.hi(); ++d) {
    if (!y.in_range(d + l + 1)) continue;
    auto first = compose(a, y.diff(d + l), component(x, y, f, d));
    auto second = compose(a, component(x, y, f, d + 1), x.diff(d));
    for (std::size_t i = 0; i < first.entries.size(); ++i) axpy(first.entries[i], sign, second.entries[i]);
    out.comps[d] = std::move(first);
  }
  return out;
}

template <class K>
bool is_closed(const PerfComplex<K>& x, const PerfComplex<K>& y, const GradedMap<K>& f) {
  for (const auto& [d, m] : hom_differential(x, y, f).comps)
    if (!m.is_zero()) return false;
  return true;
}

/// The complex Hom^*(X, Y) with a basis adapted to its block structure.
template <class K>
class HomComplex {
 public:
  HomComplex(PerfComplex<K> x, PerfComplex<K> y) : x_(std::move(x)), y_(std::move(y)) {
    require_same_algebra(x_.algebra, y_.algebra, "derived_hom");
    if (x_.terms.empty() || y_.terms.empty()) {
      min_ = 0;
      max_ = -1;
      return;
    }
    min_ = y_.lo - x_.hi();
    max_ = y_.hi() - x_.lo;
  }

  const PerfComplex<K>& source() const { return x_; }
  const PerfComplex<K>& target() const { return y_; }
  int min_degree() const { return min_; }
  int max_degree() const { return max_; }

  std::size_t dim(int l) const { return blocks(l).total; }

  Vec<K> flatten(const GradedMap<K>& f) const {
    const auto& bl = blocks(f.degree);
    Vec<K> v(bl.total, K(0));
    for (const auto& b : bl.list) {
      auto m = component(x_, y_, f, b.d);
      Vec<K> c = b.space.coordinates(m(b.t, b.s));
      for (std::size_t i = 0; i < c.size(); ++i) v[b.offset + i] = c[i];
    }
    return v;
  }

  GradedMap<K> unflatten(int l, const Vec<K>& v) const {
    GradedMap<K> f;
    f.degree = l;
    const auto& bl = blocks(l);
    for (const auto& b : bl.list) {
      auto it = f.comps.find(b.d);
      if (it == f.comps.end())
        it = f.comps.emplace(b.d, ElementMatrix<K>(y_.rank_at(b.d + l), x_.rank_at(b.d), x_.algebra.zero())).first;
      Vec<K> e = x_.algebra.zero();
      for (std::size_t i = 0; i < b.space.dim(); ++i) axpy(e, v[b.offset + i], b.space.basis()[i]);
      it->second(b.t, b.s) = e;
    }
    return f;
  }

  /// Matrix of delta : Hom^l -> Hom^{l+1} in row convention.
  const Matrix<K>& differential_matrix(int l) const {
    auto it = diff_cache_.find(l);
    if (it != diff_cache_.end()) return it->second;
    const auto& src = blocks(l);
    const auto& tgt = blocks(l + 1);
    const auto& a = x_.algebra;
    Matrix<K> m(src.total, tgt.total);
    K sign = (l % 2 == 0) ? K(-1) : K(1);
    for (const auto& b : src.list) {
      for (std::size_t i = 0; i < b.space.dim(); ++i) {
        const Vec<K>& e = b.space.basis()[i];
        Vec<K> row(tgt.total, K(0));
        // d_Y o f lands in source degree b.d; f o d_X lands in source degree b.d - 1.
        auto dy = y_.diff(b.d + l);
        for (std::size_t r = 0; r < dy.rows; ++r) {
          if (is_zero_vec(dy(r, b.t))) continue;
          add_into(row, tgt, b.d, r, b.s, a.mul(dy(r, b.t), e), K(1));
        }
        auto dx = x_.diff(b.d - 1);
        for (std::size_t j = 0; j < dx.cols; ++j) {
          if (is_zero_vec(dx(b.s, j))) continue;
          add_into(row, tgt, b.d - 1, b.t, j, a.mul(e, dx(b.s, j)), sign);
        }
        m.set_row(b.offset + i, row);
      }
    }
    return diff_cache_.emplace(l, std::move(m)).first->second;
  }

  std::size_t differential_rank(int l) const {
    auto it = rank_cache_.find(l);
    if (it != rank_cache_.end()) return it->second;
    const auto& m = differential_matrix(l);
    std::size_t r = (m.rows() == 0 || m.cols() == 0) ? 0 : rank(m);
    rank_cache_[l] = r;
    return r;
  }

  std::size_t cohomology_dim(int l) const {
    return dim(l) - differential_rank(l) - differential_rank(l - 1);
  }

  Subspace<K> cycles(int l) const {
    Subspace<K> s(dim(l));
    const auto& m = differential_matrix(l);
    if (m.cols() == 0) {
      for (std::size_t i = 0; i < dim(l); ++i) s.add(unit_vec<K>(dim(l), i));
    } else {
      s.add_all(left_kernel_basis(m));
    }
    return s;
  }

  Subspace<K> boundaries(int l) const {
    Subspace<K> s(dim(l));
    const auto& m = differential_matrix(l - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) s.add(m.row(i));
    return s;
  }

 private:
  struct Block {
    int d;
    std::size_t t, s;
    Subspace<K> space;
    std::size_t offset;
  };
  struct Blocks {
    std::vector<Block> list;
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
    std::size_t total = 0;
  };

  const Blocks& blocks(int l) const {
    auto it = block_cache_.find(l);
    if (it != block_cache_.end()) return it->second;
    Blocks bl;
    const auto& a = x_.algebra;
    for (int d = x_.lo; d <= x_.hi() && !x_.terms.empty(); ++d) {
      if (!y_.in_range(d + l)) continue;
      for (std::size_t t = 0; t < y_.rank_at(d + l); ++t)
        for (std::size_t s = 0; s < x_.rank_at(d); ++s) {
          Block b{d, t, s, sandwich(a, y_.term(d + l)[t], x_.term(d)[s]), bl.total};
          bl.total += b.space.dim();
          bl.index[{d, t, s}] = bl.list.size();
          bl.list.push_back(std::move(b));
        }
    }
    return block_cache_.emplace(l, std::move(bl)).first->second;
  }

  void add_into(Vec<K>& row, const Blocks& tgt, int d, std::size_t t, std::size_t s, const Vec<K>& e,
                const K& coef) const {
    auto it = tgt.index.find({d, t, s});
    if (it == tgt.index.end()) return;
    const Block& b = tgt.list[it->second];
    Vec<K> c = b.space.coordinates(e);
    for (std::size_t i = 0; i < c.size(); ++i) row[b.offset + i] += coef * c[i];
  }

  PerfComplex<K> x_, y_;
  int min_ = 0, max_ = -1;
  mutable std::map<int, Blocks> block_cache_;
  mutable std::map<int, Matrix<K>> diff_cache_;
  mutable std::map<int, std::size_t> rank_cache_;
};

struct DerivedHomProfile {
  std::map<int, std::size_t> dims;  // nonzero entries only

  std::size_t at(int l) const {
    auto it = dims.find(l);
    return it == dims.end() ? 0 : it->second;
  }
  bool is_zero() const { return dims.empty(); }
  bool concentrated_in_zero() const { return dims.empty() || (dims.size() == 1 && dims.begin()->first == 0); }
  long euler() const {
    long s = 0;
    for (const auto& [l, d] : dims) s += (l % 2 == 0 ? 1 : -1) * static_cast<long>(d);
    return s;
  }
  std::string to_string() const {
    std::string out = "{";
    for (const auto& [l, d] : dims) out += (out.size() > 1 ? ", " : "") + std::to_string(l) + ": " + std::to_string(d);
    return out + "}";
  }
  friend bool operator==(const DerivedHomProfile&, const DerivedHomProfile&) = default;
};

template <class K>
DerivedHomProfile derived_hom(const PerfComplex<K>& x, const PerfComplex<K>& y) {
  HomComplex<K> h(x, y);
  DerivedHomProfile p;
  for (int l = h.min_degree(); l <= h.max_degree(); ++l)
    if (std::size_t c = h.cohomology_dim(l)) p.dims[l] = c;
  return p;
}

/// Cone of a closed degree-0 map.
template <class K>
PerfComplex<K> cone(const PerfComplex<K>& x, const PerfComplex<K>& y, const GradedMap<K>& f) {
  if (f.degree != 0 || !is_closed(x, y, f))
    throw AlgebraError(AlgebraErrc::NotChainMap, "cone: map is not a closed degree-0 map");
  const auto& a = x.algebra;
  int lo = 0, hi = -1;
  bool any = false;
  auto extend = [&](int l, int h) {
    if (h < l) return;
    lo = any ? std::min(lo, l) : l;
    hi = any ? std::max(hi, h) : h;
    any = true;
  };
  if (!x.terms.empty()) extend(x.lo - 1, x.hi() - 1);
  if (!y.terms.empty()) extend(y.lo, y.hi());
  PerfComplex<K> c{a, lo, {}, {}};
  if (!any) return c;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Vec<K>> t = x.term(n + 1);
    t.insert(t.end(), y.term(n).begin(), y.term(n).end());
    c.terms.push_back(std::move(t));
  }
  for (int n = lo; n < hi; ++n) {
    std::size_t xs = x.rank_at(n + 1), ys = y.rank_at(n), xt = x.rank_at(n + 2), yt = y.rank_at(n + 1);
    ElementMatrix<K> m(xt + yt, xs + ys, a.zero());
    auto dx = x.diff(n + 1);
    for (std::size_t l = 0; l < xt; ++l)
      for (std::size_t j = 0; j < xs; ++j) m(l, j) = scale(K(-1), dx(l, j));
    auto fm = component(x, y, f, n + 1);
    for (std::size_t l = 0; l < yt; ++l)
      for (std::size_t j = 0; j < xs; ++j) m(xt + l, j) = fm(l, j);
    auto dy = y.diff(n);
    for (std::size_t l = 0; l < yt; ++l)
      for (std::size_t j = 0; j < ys; ++j) m(xt + l, xs + j) = dy(l, j);
    c.diffs.push_back(std::move(m));
  }
  return c;
}

/// Canonical maps Y -> cone(f) and cone(f) -> X[1].
template <class K>
GradedMap<K> cone_inclusion(const PerfComplex<K>& x, const PerfComplex<K>& y, const PerfComplex<K>& c) {
  GradedMap<K> g;
  for (int n = y.lo; n <= y.hi(); ++n) {
    ElementMatrix<K> m(c.rank_at(n), y.rank_at(n), x.algebra.zero());
    std::size_t off = x.rank_at(n + 1);
    for (std::size_t j = 0; j < y.rank_at(n); ++j) m(off + j, j) = y.term(n)[j];
    g.comps[n] = std::move(m);
  }
  return g;
}

template <class K>
GradedMap<K> cone_projection(const PerfComplex<K>& x, const PerfComplex<K>& c) {
  GradedMap<K> g;
  for (int n = c.lo; n <= c.hi(); ++n) {
    ElementMatrix<K> m(x.rank_at(n + 1), c.rank_at(n), x.algebra.zero());
    for (std::size_t j = 0; j < x.rank_at(n + 1); ++j) m(j, j) = x.term(n + 1)[j];
    g.comps[n] = std::move(m);
  }
  return g;
}

/// H^0 End(X) with the composition product, plus the coordinate map from
/// closed degree-0 maps to the algebra basis.
template <class K>
struct EndAlgebraData {
  Algebra<K> algebra;
  HomComplex<K> hom;
  QuotientSpace<K> quotient;  // degree-0 maps modulo boundaries
  Subspace<K> classes;        // image of the cycles in the quotient

  Vec<K> coordinates(const GradedMap<K>& f) const {
    if (algebra.dim() == 0) return {};
    return classes.coordinates(quotient.project(hom.flatten(f)));
  }
};

template <class K>
EndAlgebraData<K> end_algebra_data(const PerfComplex<K>& x) {
  HomComplex<K> h(x, x);
  for (int l = h.min_degree(); l <= h.max_degree(); ++l)
    if (l != 0 && h.cohomology_dim(l) != 0)
      throw AlgebraError(AlgebraErrc::NotFormalInDegreeZero,
                         "Hom(X, X[" + std::to_string(l) + "]) has dimension " + std::to_string(h.cohomology_dim(l)));
  if (h.dim(0) == 0) return {zero_algebra<K>(x.algebra.field()), h, {}, {}};
  Subspace<K> z = h.cycles(0), b = h.boundaries(0);
  QuotientSpace<K> q(b);
  Subspace<K> hs(q.dim());
  for (const auto& v : z.basis()) hs.add(q.project(v));
  std::size_t n = hs.dim();
  if (n == 0) return {zero_algebra<K>(x.algebra.field()), h, q, hs};
  std::vector<GradedMap<K>> reps;
  for (const auto& w : hs.basis()) reps.push_back(h.unflatten(0, q.lift(w)));
  std::vector<SparseVec<K>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = to_sparse(hs.coordinates(q.project(h.flatten(compose_maps(x, x, x, reps[i], reps[j])))));
  Vec<K> unit = hs.coordinates(q.project(h.flatten(identity_map(x))));
  auto alg = Algebra<K>::from_sparse(x.algebra.field(), n, std::move(table), std::move(unit), {});
  if (n <= 24) alg.validate();
  return {std::move(alg), std::move(h), std::move(q), std::move(hs)};
}

template <class K>
Algebra<K> end_algebra(const PerfComplex<K>& x) {
  return end_algebra_data(x).algebra;
}

/// Identity on the i-th summand of direct_sum(xs), zero elsewhere.
template <class K>
GradedMap<K> summand_identity(const std::vector<PerfComplex<K>>& xs, std::size_t i) {
  auto s = direct_sum(xs);
  GradedMap<K> f;
  for (int d = s.lo; d <= s.hi(); ++d) {
    ElementMatrix<K> m(s.rank_at(d), s.rank_at(d), s.algebra.zero());
    std::size_t off = 0;
    for (std::size_t k = 0; k < i; ++k) off += xs[k].rank_at(d);
    for (std::size_t r = 0; r < xs[i].rank_at(d); ++r) m(off + r, off + r) = s.term(d)[off + r];
    f.comps[d] = std::move(m);
  }
  return f;
}

/// Multiplicities of the basic projectives in e A.
template <class K>
std::vector<long> projective_multiplicities(const Algebra<K>& a, const Vec<K>& e) {
  auto ids = basic_idempotents(a);
  auto tops = simple_top_dims(a);
  auto rad = radical(a);
  std::vector<long> out;
  for (std::size_t c = 0; c < ids.size(); ++c) {
    std::size_t whole = sandwich(a, e, ids[c]).dim();
    Subspace<K> inner(a.dim());
    for (const auto& r : rad.basis()) inner.add(a.mul(a.mul(e, r), ids[c]));
    out.push_back(static_cast<long>((whole - inner.dim()) / tops[c]));
  }
  return out;
}

/// Alternating sum of the multiplicity vectors of the terms.
template <class K>
std::vector<long> k0_class(const PerfComplex<K>& x) {
  std::vector<long> v(basic_idempotents(x.algebra).size(), 0);
  for (int d = x.lo; d <= x.hi(); ++d)
    for (const auto& e : x.term(d)) {
      auto m = projective_multiplicities(x.algebra, e);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += (d % 2 == 0 ? 1 : -1) * m[i];
    }
  return v;
}

/// The basic indecomposable projectives as complexes in degree 0.
template <class K>
std::vector<PerfComplex<K>> projective_objects(const Algebra<K>& a) {
  std::vector<PerfComplex<K>> out;
  for (const auto& e : basic_idempotents(a)) out.push_back(projective_complex(a, {e}));
  return out;
}

struct Verdict {
  bool pass = false;
  std::string witness;
};

template <class K>
Verdict is_exceptional(const PerfComplex<K>& x) {
  auto p = derived_hom(x, x);
  if (!(p.dims.size() == 1 && p.at(0) == 1)) return {false, "self-Hom profile " + p.to_string()};
  return {true, "profile {0: 1}, End = k"};
}

template <class K>
Verdict is_w_exceptional(const PerfComplex<K>& x) {
  auto p = derived_hom(x, x);
  if (!p.concentrated_in_zero() || p.is_zero()) return {false, "self-Hom profile " + p.to_string()};
  auto e = end_algebra(x);
  auto dv = division_algebra_check(e);
  if (!dv.is_division) return {false, "End has a non-invertible nonzero element"};
  return {true, "End is a division algebra of dimension " + std::to_string(e.dim())};
}

template <class K>
Verdict is_semi_exceptional(const PerfComplex<K>& x) {
  auto p = derived_hom(x, x);
  if (!p.concentrated_in_zero() || p.is_zero()) return {false, "self-Hom profile " + p.to_string()};
  auto e = end_algebra(x);
  std::size_t r = radical_direct(e).dim();
  if (r != 0) return {false, "End has a radical of dimension " + std::to_string(r)};
  return {true, "End is semisimple of dimension " + std::to_string(e.dim())};
}

struct OrthogonalityFailure {
  std::size_t i = 0, j = 0;
  int degree = 0;
  std::size_t dim = 0;
  std::string to_string() const {
    return "Hom(E" + std::to_string(i) + ", E" + std::to_string(j) + "[" + std::to_string(degree) +
           "]) has dimension " + std::to_string(dim);
  }
};

/// Hom(E_i, E_j[l]) = 0 for all l whenever i > j; the first failure if any.
template <class K>
std::optional<OrthogonalityFailure> check_semiorthogonal(const std::vector<PerfComplex<K>>& objects) {
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto p = derived_hom(objects[i], objects[j]);
      if (!p.is_zero()) return OrthogonalityFailure{i, j, p.dims.begin()->first, p.dims.begin()->second};
    }
  return std::nullopt;
}

}  // namespace semiorth
