#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants: b_i * b_j = sum_k c[i][j][k] b_k.
//
// Quiver presentations: paths compose left to right (the first traversed
// arrow is written first) and algebras act on RIGHT modules. This is the
// only orientation used anywhere in the library.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semiorth/field.hpp"
#include "semiorth/matrix.hpp"

namespace semiorth {

enum class AlgebraErrc {
  NotAssociative,
  UnitFails,
  FieldMismatch,
  NotIdempotent,
  InfiniteDimensional,
  MalformedRelation,
  NotSemisimple,
  UnsupportedField,
  IdempotentLiftingFailed,
  AlgebraMismatch,
  ZeroModule,
  InvalidModule,
  NotChainMap,
  NotFormalInDegreeZero,
  InvalidCertificateStep,
  NotStrong,
  BimoduleMismatch,
  CornerMismatch,
  CornerNotSemiorthogonal,
  DegenerateParameters,
  ZeroFunctional,
  NotSurjective,
};

inline const char* errc_name(AlgebraErrc c) {
  switch (c) {
    case AlgebraErrc::NotAssociative: return "NotAssociative";
    case AlgebraErrc::UnitFails: return "UnitFails";
    case AlgebraErrc::FieldMismatch: return "FieldMismatch";
    case AlgebraErrc::NotIdempotent: return "NotIdempotent";
    case AlgebraErrc::InfiniteDimensional: return "InfiniteDimensional";
    case AlgebraErrc::MalformedRelation: return "MalformedRelation";
    case AlgebraErrc::NotSemisimple: return "NotSemisimple";
    case AlgebraErrc::UnsupportedField: return "UnsupportedField";
    case AlgebraErrc::IdempotentLiftingFailed: return "IdempotentLiftingFailed";
    case AlgebraErrc::AlgebraMismatch: return "AlgebraMismatch";
    case AlgebraErrc::ZeroModule: return "ZeroModule";
    case AlgebraErrc::InvalidModule: return "InvalidModule";
    case AlgebraErrc::NotChainMap: return "NotChainMap";
    case AlgebraErrc::NotFormalInDegreeZero: return "NotFormalInDegreeZero";
    case AlgebraErrc::InvalidCertificateStep: return "InvalidCertificateStep";
    case AlgebraErrc::NotStrong: return "NotStrong";
    case AlgebraErrc::BimoduleMismatch: return "BimoduleMismatch";
    case AlgebraErrc::CornerMismatch: return "CornerMismatch";
    case AlgebraErrc::CornerNotSemiorthogonal: return "CornerNotSemiorthogonal";
    case AlgebraErrc::DegenerateParameters: return "DegenerateParameters";
    case AlgebraErrc::ZeroFunctional: return "ZeroFunctional";
    case AlgebraErrc::NotSurjective: return "NotSurjective";
  }
  return "?";
}

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(AlgebraErrc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  AlgebraErrc code() const { return code_; }

 private:
  AlgebraErrc code_;
};

struct Arrow {
  std::string name, source, target;
};

/// A path written left to right in traversal order, with its coefficient.
template <class K>
struct PathTerm {
  K coeff;
  std::vector<std::string> path;
};

template <class K>
struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<PathTerm<K>>> relations;
};

template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

template <class K>
class Algebra;

/// A two-sided ideal, stored as a subspace in reduced echelon form.
template <class K>
struct Ideal {
  Subspace<K> space;
  std::size_t dim() const { return space.dim(); }
  const std::vector<Vec<K>>& basis() const { return space.basis(); }
};

template <class K>
struct AlgebraCache {
  std::once_flag radical_once, idempotent_once, generator_once, class_once;
  std::optional<Subspace<K>> radical;
  std::vector<Vec<K>> primitive_idempotents;
  std::vector<Vec<K>> generators;
  std::vector<std::size_t> projective_class;  // per primitive idempotent
  std::size_t class_count = 0;
};

template <class K>
class Algebra {
 public:
  /// Construction hints known from how the algebra was built.
  struct Hints {
    std::vector<Vec<K>> idempotents;  // complete orthogonal set (not necessarily primitive)
    std::vector<Vec<K>> generators;   // generate the algebra together with 1
    std::function<Subspace<K>()> radical;
  };

  Algebra() = default;

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec<K>& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<QuiverPresentation<K>>& presentation() const { return presentation_; }
  const Hints& hints() const { return hints_; }
  /// True when both handles share one construction (copies of the same algebra).
  bool same_instance(const Algebra& o) const { return table_ == o.table_; }
  AlgebraCache<K>& cache() const { return *cache_; }

  const SparseVec<K>& basis_product(std::size_t i, std::size_t j) const { return (*table_)[i * dim_ + j]; }

  Vec<K> basis(std::size_t i) const { return unit_vec<K>(dim_, i); }
  Vec<K> zero() const { return zero_vec<K>(dim_); }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> r(dim_, K(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        K xy = x[i] * y[j];
        for (const auto& [k, c] : (*table_)[i * dim_ + j]) r[k] += xy * c;
      }
    }
    return r;
  }

  /// Matrix of y -> x*y acting on row vectors (y L).
  Matrix<K> left_mult(const Vec<K>& x) const {
    Matrix<K> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, c] : (*table_)[i * dim_ + j]) m(j, k) += x[i] * c;
    }
    return m;
  }

  /// Matrix of y -> y*x acting on row vectors.
  Matrix<K> right_mult(const Vec<K>& x) const {
    Matrix<K> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(x[j])) continue;
      for (std::size_t i = 0; i < dim_; ++i)
        for (const auto& [k, c] : (*table_)[i * dim_ + j]) m(i, k) += x[j] * c;
    }
    return m;
  }

  bool is_idempotent(const Vec<K>& e) const { return mul(e, e) == e; }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*table_)[i * dim_ + j] != (*table_)[j * dim_ + i]) return false;
    return true;
  }

  /// Dense c[i][j][k] (for tests and serialization of small algebras).
  std::vector<std::vector<Vec<K>>> dense_table() const {
    std::vector<std::vector<Vec<K>>> t(dim_, std::vector<Vec<K>>(dim_, zero()));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, c] : (*table_)[i * dim_ + j]) t[i][j][k] = c;
    return t;
  }

  /// Checked construction from dense structure constants.
  static Algebra from_structure_constants(const Field& field, const std::vector<std::vector<Vec<K>>>& table,
                                          const Vec<K>& unit) {
    std::size_t n = table.size();
    std::vector<SparseVec<K>> sparse(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw DimensionError("structure constant table is not n x n x n");
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j].size() != n) throw DimensionError("structure constant table is not n x n x n");
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(table[i][j][k])) sparse[i * n + j].emplace_back(static_cast<std::uint32_t>(k), table[i][j][k]);
      }
    }
    if (unit.size() != n) throw DimensionError("unit vector has wrong length");
    Algebra a = from_sparse(field, n, std::move(sparse), unit, {});
    a.validate();
    return a;
  }

  /// Unchecked construction for algebras assembled from validated pieces.
  static Algebra from_sparse(const Field& field, std::size_t n, std::vector<SparseVec<K>> table, Vec<K> unit,
                             Hints hints, std::vector<std::string> labels = {}) {
    if constexpr (std::is_same_v<K, ModP>) {
      // integer literals carry no modulus; give every coefficient the field's
      auto fix = [&](ModP& x) {
        if (x.modulus() == 0) x = ModP(x.value(), field.p);
      };
      for (auto& sv : table)
        for (auto& entry : sv) fix(entry.second);
      for (auto& x : unit) fix(x);
      for (auto* vs : {&hints.idempotents, &hints.generators})
        for (auto& v : *vs)
          for (auto& x : v) fix(x);
    }
    Algebra a;
    a.field_ = field;
    a.dim_ = n;
    a.table_ = std::make_shared<const std::vector<SparseVec<K>>>(std::move(table));
    a.unit_ = std::move(unit);
    a.hints_ = std::move(hints);
    a.labels_ = std::move(labels);
    a.cache_ = std::make_shared<AlgebraCache<K>>();
    return a;
  }

  /// Verifies associativity on all basis triples and the unit law.
  void validate() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec<K> ei = basis(i);
      if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
        throw AlgebraError(AlgebraErrc::UnitFails, "unit is not a two-sided identity on basis element " +
                                                       std::to_string(i));
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& ij = (*table_)[i * dim_ + j];
        for (std::size_t k = 0; k < dim_; ++k) {
          Vec<K> lhs(dim_, K(0)), rhs(dim_, K(0));
          for (const auto& [m, c] : ij)
            for (const auto& [q, d] : (*table_)[m * dim_ + k]) lhs[q] += c * d;
          for (const auto& [m, c] : (*table_)[j * dim_ + k])
            for (const auto& [q, d] : (*table_)[i * dim_ + m]) rhs[q] += c * d;
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(b" << i << " b" << j << ") b" << k << " != b" << i << " (b" << j << " b" << k << ")";
            throw AlgebraError(AlgebraErrc::NotAssociative, os.str());
          }
        }
      }
  }

  Vec<K> to_dense(const SparseVec<K>& s) const {
    Vec<K> v(dim_, K(0));
    for (const auto& [k, c] : s) v[k] = c;
    return v;
  }

  void set_presentation(QuiverPresentation<K> p) { presentation_ = std::move(p); }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::string& name() const { return name_; }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<SparseVec<K>>> table_ = std::make_shared<std::vector<SparseVec<K>>>();
  Vec<K> unit_;
  Hints hints_;
  std::vector<std::string> labels_;
  std::string name_;
  std::optional<QuiverPresentation<K>> presentation_;
  std::shared_ptr<AlgebraCache<K>> cache_ = std::make_shared<AlgebraCache<K>>();
};

template <class K>
SparseVec<K> to_sparse(const Vec<K>& v) {
  SparseVec<K> s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) s.emplace_back(static_cast<std::uint32_t>(k), v[k]);
  return s;
}

/// Same structure constants? (Entrywise comparison of tables and units.)
template <class K>
bool same_table(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Elementary constructions
// ---------------------------------------------------------------------------

template <class K>
Algebra<K> field_algebra(const Field& f) {
  std::vector<SparseVec<K>> t(1);
  t[0].emplace_back(0, K(1));
  typename Algebra<K>::Hints h;
  h.idempotents = {Vec<K>{K(1)}};
  h.radical = [] { return Subspace<K>(1); };
  return Algebra<K>::from_sparse(f, 1, std::move(t), Vec<K>{K(1)}, std::move(h), {"1"});
}

/// The zero algebra (dim 0); the corner at e = 0.
template <class K>
Algebra<K> zero_algebra(const Field& f) {
  typename Algebra<K>::Hints h;
  h.radical = [] { return Subspace<K>(0); };
  return Algebra<K>::from_sparse(f, 0, {}, Vec<K>{}, std::move(h));
}

/// k[x]/(x^n) with basis 1, x, ..., x^(n-1).
template <class K>
Algebra<K> truncated_polynomial(const Field& f, std::size_t n) {
  std::vector<SparseVec<K>> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) t[i * n + j].emplace_back(static_cast<std::uint32_t>(i + j), K(1));
  typename Algebra<K>::Hints h;
  h.idempotents = {unit_vec<K>(n, 0)};
  if (n > 1) h.generators = {unit_vec<K>(n, 1)};
  h.radical = [n] {
    Subspace<K> s(n);
    for (std::size_t i = 1; i < n; ++i) s.add(unit_vec<K>(n, i));
    return s;
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  return Algebra<K>::from_sparse(f, n, std::move(t), unit_vec<K>(n, 0), std::move(h), std::move(labels));
}

/// Product algebra k^n (n orthogonal idempotents).
template <class K>
Algebra<K> split_semisimple_commutative(const Field& f, std::size_t n) {
  std::vector<SparseVec<K>> t(n * n);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i].emplace_back(static_cast<std::uint32_t>(i), K(1));
  typename Algebra<K>::Hints h;
  for (std::size_t i = 0; i < n; ++i) h.idempotents.push_back(unit_vec<K>(n, i));
  h.radical = [n] { return Subspace<K>(n); };
  Vec<K> unit(n, K(1));
  return Algebra<K>::from_sparse(f, n, std::move(t), unit, std::move(h));
}

/// Generalized quaternion algebra (a, b / k): i^2 = a, j^2 = b, ij = -ji = k.
template <class K>
Algebra<K> quaternion_algebra(const Field& f, const K& a, const K& b) {
  // basis 1, i, j, k
  std::vector<std::vector<Vec<K>>> t(4, std::vector<Vec<K>>(4, zero_vec<K>(4)));
  auto set = [&](int x, int y, int z, K c) { t[x][y][z] = c; };
  for (int x = 0; x < 4; ++x) {
    set(0, x, x, K(1));
    set(x, 0, x, K(1));
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, K(0) - a * b);
  set(1, 2, 3, K(1));
  set(2, 1, 3, K(-1));
  set(1, 3, 2, a);
  set(3, 1, 2, K(0) - a);
  set(2, 3, 1, K(0) - b);
  set(3, 2, 1, b);
  auto alg = Algebra<K>::from_structure_constants(f, t, unit_vec<K>(4, 0));
  alg.set_labels({"1", "i", "j", "k"});
  return alg;
}

// Defined in radical.hpp.
template <class K>
Ideal<K> radical(const Algebra<K>& a);

template <class K>
void require_same_field(const Algebra<K>& a, const Algebra<K>& b) {
  if (!(a.field() == b.field()))
    throw AlgebraError(AlgebraErrc::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

template <class K>
Algebra<K> opposite(const Algebra<K>& a) {
  std::size_t n = a.dim();
  std::vector<SparseVec<K>> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = a.basis_product(j, i);
  typename Algebra<K>::Hints h;
  h.idempotents = a.hints().idempotents;
  h.generators = a.hints().generators;
  h.radical = [a] { return radical(a).space; };
  return Algebra<K>::from_sparse(a.field(), n, std::move(t), a.unit(), std::move(h), a.labels());
}

/// Kronecker product of elements: index (i, j) -> i * dim(b) + j.
template <class K>
Vec<K> tensor_vec(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> r(x.size() * y.size(), K(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) r[i * y.size() + j] = x[i] * y[j];
  }
  return r;
}

template <class K>
Algebra<K> tensor_product(const Algebra<K>& a, const Algebra<K>& b) {
  require_same_field(a, b);
  std::size_t da = a.dim(), db = b.dim(), n = da * db;
  std::vector<SparseVec<K>> t(n * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      const auto& ab = a.basis_product(i, k);
      if (ab.empty()) continue;
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          const auto& bb = b.basis_product(j, l);
          if (bb.empty()) continue;
          auto& out = t[(i * db + j) * n + (k * db + l)];
          for (const auto& [m, c1] : ab)
            for (const auto& [q, c2] : bb) out.emplace_back(static_cast<std::uint32_t>(m * db + q), c1 * c2);
          std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    }
  typename Algebra<K>::Hints h;
  auto ia = a.hints().idempotents.empty() ? std::vector<Vec<K>>{a.unit()} : a.hints().idempotents;
  auto ib = b.hints().idempotents.empty() ? std::vector<Vec<K>>{b.unit()} : b.hints().idempotents;
  for (const auto& x : ia)
    for (const auto& y : ib) h.idempotents.push_back(tensor_vec(x, y));
  auto ga = a.hints().generators, gb = b.hints().generators;
  if (!ga.empty() || da == 1) {
    if (!gb.empty() || db == 1) {
      for (const auto& x : ia) h.generators.push_back(tensor_vec(x, b.unit()));
      for (const auto& g : ga) h.generators.push_back(tensor_vec(g, b.unit()));
      for (const auto& y : ib) h.generators.push_back(tensor_vec(a.unit(), y));
      for (const auto& g : gb) h.generators.push_back(tensor_vec(a.unit(), g));
    }
  }
  // Over a perfect field rad(A (x) B) = rad A (x) B + A (x) rad B.
  h.radical = [a, b] {
    std::size_t da = a.dim(), db = b.dim();
    Subspace<K> s(da * db);
    auto ra = radical(a), rb = radical(b);
    for (const auto& x : ra.basis())
      for (std::size_t j = 0; j < db; ++j) s.add(tensor_vec(x, b.basis(j)));
    for (std::size_t i = 0; i < da; ++i)
      for (const auto& y : rb.basis()) s.add(tensor_vec(a.basis(i), y));
    return s;
  };
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty())
    for (const auto& x : a.labels())
      for (const auto& y : b.labels()) labels.push_back(x + "(x)" + y);
  return Algebra<K>::from_sparse(a.field(), n, std::move(t), tensor_vec(a.unit(), b.unit()), std::move(h),
                                 std::move(labels));
}

/// A^op (x) A; its right modules are A-bimodules via m.(x (x) y) = x m y.
template <class K>
Algebra<K> enveloping(const Algebra<K>& a) {
  return tensor_product(opposite(a), a);
}

/// Basis of the subspace x A y spanned by x b_k y.
template <class K>
Subspace<K> sandwich(const Algebra<K>& a, const Vec<K>& x, const Vec<K>& y) {
  Subspace<K> s(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) s.add(a.mul(a.mul(x, a.basis(k)), y));
  return s;
}

/// The corner algebra e A e with unit e; the returned inclusion maps corner
/// coordinates to ambient coordinates.
template <class K>
struct Corner {
  Algebra<K> algebra;
  std::vector<Vec<K>> inclusion;  // image of each corner basis element in A
  Subspace<K> space;
};

template <class K>
Corner<K> corner(const Algebra<K>& a, const Vec<K>& e) {
  if (!a.is_idempotent(e)) throw AlgebraError(AlgebraErrc::NotIdempotent, "corner: e*e != e");
  Subspace<K> s = sandwich(a, e, e);
  std::size_t n = s.dim();
  const auto& bas = s.basis();
  std::vector<SparseVec<K>> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = to_sparse(s.coordinates(a.mul(bas[i], bas[j])));
  Vec<K> unit = n ? s.coordinates(e) : Vec<K>{};
  typename Algebra<K>::Hints h;
  {
    std::vector<Vec<K>> pieces;
    for (const auto& f : a.hints().idempotents) {
      Vec<K> g = a.mul(a.mul(e, f), e);
      if (!is_zero_vec(g)) pieces.push_back(std::move(g));
    }
    // Keep the hint only if it is a complete orthogonal idempotent set of eAe.
    bool ok = true;
    Vec<K> sum = a.zero();
    for (std::size_t i = 0; i < pieces.size() && ok; ++i) {
      for (std::size_t j = 0; j < pieces.size() && ok; ++j) {
        Vec<K> pq = a.mul(pieces[i], pieces[j]);
        ok = i == j ? pq == pieces[i] : is_zero_vec(pq);
      }
      sum = add(sum, pieces[i]);
    }
    if (ok && sum == e)
      for (const auto& g : pieces) h.idempotents.push_back(s.coordinates(g));
  }
  auto alg = Algebra<K>::from_sparse(a.field(), n, std::move(t), unit, std::move(h));
  if (n > 0 && n <= 48) alg.validate();
  return Corner<K>{std::move(alg), bas, std::move(s)};
}

}  // namespace semiorth
