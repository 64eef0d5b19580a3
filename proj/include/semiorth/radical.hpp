#pragma once

// Radical theory: Jacobson radical, its powers, the semisimple quotient,
// separability, primitive idempotents and algebra generators.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semiorth/algebra.hpp"
#include "semiorth/polynomial.hpp"

namespace semiorth {

/// Gram matrix of the trace form (x, y) -> Tr(L_{xy}) on basis elements.
template <class K>
Matrix<K> trace_form(const Algebra<K>& a) {
  std::size_t n = a.dim();
  Vec<K> tau(n, K(0));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.basis_product(m, j))
        if (k == j) tau[m] += c;
  Matrix<K> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : a.basis_product(i, j)) g(i, j) += c * tau[m];
  return g;
}

namespace detail {

inline std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % m);
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix int_matmul(const IntMatrix& x, const IntMatrix& y, std::int64_t mod) {
  std::size_t n = x.size();
  IntMatrix r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + mulmod(x[i][k], y[k][j], mod)) % mod;
    }
  return r;
}

inline IntMatrix int_matpow(IntMatrix base, std::uint64_t e, std::int64_t mod) {
  std::size_t n = base.size();
  IntMatrix r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1 % mod;
  while (e) {
    if (e & 1) r = int_matmul(r, base, mod);
    base = int_matmul(base, base, mod);
    e >>= 1;
  }
  return r;
}

/// Radical over Q: kernel of the trace form (Dickson).
inline Subspace<Rational> radical_char0(const Algebra<Rational>& a) {
  Subspace<Rational> s(a.dim());
  s.add_all(left_kernel_basis(trace_form(a)));
  return s;
}

/// Radical over F_p via the generalized trace functionals
///   g_i(x) = (Tr(L~_x^(p^i)) mod p^(i+1)) / p^i,
/// I_{-1} = A, I_i = {x in I_{i-1} : g_i(x y) = 0 for all y}, rad = I_l
/// with l = floor(log_p dim), where L~ is an integral lift of the regular
/// representation.
inline Subspace<ModP> radical_charp(const Algebra<ModP>& a) {
  std::size_t n = a.dim();
  std::int64_t p = a.field().p;
  std::vector<Vec<ModP>> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vec<ModP>(n, i));
  std::uint64_t pi = 1;  // p^i
  for (std::size_t level = 0; pi <= n; ++level) {
    std::int64_t mod = static_cast<std::int64_t>(pi) * p;
    std::size_t s = current.size();
    if (s == 0) break;
    Matrix<ModP> g(s, n);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<ModP> z = a.mul(current[j], a.basis(k));
        Matrix<ModP> lz = a.left_mult(z);
        IntMatrix lift(n, std::vector<std::int64_t>(n));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) lift[r][c] = lz(r, c).value();
        IntMatrix pw = int_matpow(std::move(lift), pi, mod);
        std::int64_t tr = 0;
        for (std::size_t r = 0; r < n; ++r) tr = (tr + pw[r][r]) % mod;
        if (tr % static_cast<std::int64_t>(pi) != 0)
          throw AlgebraError(AlgebraErrc::UnsupportedField, "generalized trace not divisible by p^i");
        g(j, k) = ModP(tr / static_cast<std::int64_t>(pi), a.field().p);
      }
    std::vector<Vec<ModP>> next;
    for (const auto& c : left_kernel_basis(g)) {
      Vec<ModP> x = zero_vec<ModP>(n);
      for (std::size_t j = 0; j < s; ++j) axpy(x, c[j], current[j]);
      next.push_back(std::move(x));
    }
    current = std::move(next);
    if (pi > n / static_cast<std::uint64_t>(p)) break;
    pi *= static_cast<std::uint64_t>(p);
  }
  Subspace<ModP> out(n);
  out.add_all(current);
  return out;
}

}  // namespace detail

/// Jacobson radical computed from the structure constants, ignoring hints.
template <class K>
Subspace<K> radical_direct(const Algebra<K>& a) {
  if constexpr (std::is_same_v<K, Rational>) {
    return detail::radical_char0(a);
  } else if constexpr (std::is_same_v<K, ModP>) {
    return detail::radical_charp(a);
  } else {
    throw AlgebraError(AlgebraErrc::UnsupportedField, "no radical algorithm for this scalar type");
  }
}

template <class K>
Ideal<K> radical(const Algebra<K>& a) {
  auto& cache = a.cache();
  std::call_once(cache.radical_once, [&] {
    cache.radical = a.hints().radical ? a.hints().radical() : radical_direct(a);
  });
  return Ideal<K>{*cache.radical};
}

template <class K>
bool is_semisimple(const Algebra<K>& a) {
  return radical(a).dim() == 0;
}

/// Span of products x*y with x in I, y in J.
template <class K>
Ideal<K> ideal_product(const Algebra<K>& a, const Ideal<K>& i, const Ideal<K>& j) {
  Subspace<K> s(a.dim());
  for (const auto& x : i.basis())
    for (const auto& y : j.basis()) s.add(a.mul(x, y));
  return Ideal<K>{std::move(s)};
}

/// r^0 = A, r^1, ..., r^n = 0 (the last entry is the zero ideal).
template <class K>
std::vector<Ideal<K>> radical_powers(const Algebra<K>& a) {
  Subspace<K> whole(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) whole.add(a.basis(i));
  std::vector<Ideal<K>> powers{Ideal<K>{whole}};
  Ideal<K> r = radical(a);
  powers.push_back(r);
  while (powers.back().dim() > 0) {
    Ideal<K> next = ideal_product(a, powers.back(), r);
    if (next.dim() == powers.back().dim())
      throw AlgebraError(AlgebraErrc::NotSemisimple, "radical is not nilpotent (internal error)");
    powers.push_back(std::move(next));
  }
  return powers;
}

/// Smallest n with r^n = 0; 1 exactly when A is semisimple.
template <class K>
std::size_t nilpotency_index(const Algebra<K>& a) {
  if (a.dim() == 0) return 1;
  return radical_powers(a).size() - 1;
}

template <class K>
struct SemisimpleQuotient {
  Algebra<K> algebra;
  QuotientSpace<K> quotient;  // project: A -> S, lift: section S -> A
  Vec<K> project(const Vec<K>& x) const { return quotient.project(x); }
  Vec<K> lift(const Vec<K>& s) const { return quotient.lift(s); }
  Matrix<K> projection_matrix() const {
    std::size_t n = quotient.kernel().ambient();
    Matrix<K> m(n, quotient.dim());
    for (std::size_t i = 0; i < n; ++i) m.set_row(i, quotient.project(unit_vec<K>(n, i)));
    return m;
  }
};

template <class K>
SemisimpleQuotient<K> semisimple_quotient(const Algebra<K>& a) {
  QuotientSpace<K> q(radical(a).space);
  std::size_t d = q.dim();
  std::vector<SparseVec<K>> t(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      t[i * d + j] = to_sparse(q.project(a.mul(q.lift(unit_vec<K>(d, i)), q.lift(unit_vec<K>(d, j)))));
  typename Algebra<K>::Hints h;
  for (const auto& e : a.hints().idempotents) {
    Vec<K> pe = q.project(e);
    if (!is_zero_vec(pe)) h.idempotents.push_back(pe);
  }
  h.radical = [d] { return Subspace<K>(d); };
  auto s = Algebra<K>::from_sparse(a.field(), d, std::move(t), q.project(a.unit()), std::move(h));
  return SemisimpleQuotient<K>{std::move(s), std::move(q)};
}

/// Separability of a semisimple algebra: A (x) A^op has zero radical.
template <class K>
bool is_separable(const Algebra<K>& a) {
  if (!is_semisimple(a)) throw AlgebraError(AlgebraErrc::NotSemisimple, "is_separable needs a semisimple input");
  return radical_direct(enveloping(a)).dim() == 0;
}

// ---------------------------------------------------------------------------
// Idempotents
// ---------------------------------------------------------------------------

/// Lifts an idempotent modulo the radical: y <- 3y^2 - 2y^3 until y^2 = y.
template <class K>
Vec<K> lift_idempotent(const Algebra<K>& a, Vec<K> y) {
  for (int iter = 0; iter < 64; ++iter) {
    Vec<K> y2 = a.mul(y, y);
    if (y2 == y) return y;
    Vec<K> y3 = a.mul(y2, y);
    y = sub(scale(K(3), y2), scale(K(2), y3));
  }
  throw AlgebraError(AlgebraErrc::IdempotentLiftingFailed, "Newton iteration did not converge");
}

namespace detail {

/// Minimal polynomial (low to high, monic) of x in the unital corner with
/// identity e.
template <class K>
Vec<K> minimal_polynomial(const Algebra<K>& a, const Vec<K>& e, const Vec<K>& x) {
  std::vector<Vec<K>> powers{e};
  while (true) {
    Vec<K> next = a.mul(powers.back(), x);
    Matrix<K> m(a.dim(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < a.dim(); ++r) m(r, c) = powers[c][r];
    if (auto sol = solve_linear(m, next)) {
      Vec<K> poly(powers.size() + 1, K(0));
      for (std::size_t c = 0; c < powers.size(); ++c) poly[c] = K(0) - (*sol)[c];
      poly.back() = K(1);
      return poly;
    }
    powers.push_back(std::move(next));
  }
}

template <class K>
Vec<K> eval_in_algebra(const Algebra<K>& a, const Vec<K>& e, const Vec<K>& poly, const Vec<K>& x) {
  Vec<K> acc = a.zero();
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = a.mul(acc, x);
    axpy(acc, poly[i], e);
  }
  return acc;
}

/// Tries to split the idempotent e of A (working modulo the radical).
template <class K>
std::optional<Vec<K>> split_idempotent(const Algebra<K>& a, const SemisimpleQuotient<K>& ss, const Vec<K>& e) {
  const Algebra<K>& s = ss.algebra;
  Vec<K> es = ss.project(e);
  Subspace<K> corner_space = sandwich(s, es, es);
  if (corner_space.dim() <= 1) return std::nullopt;
  std::vector<Vec<K>> candidates = corner_space.basis();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int extra = 0; extra < 8; ++extra) {
    Vec<K> v = s.zero();
    for (const auto& b : corner_space.basis()) axpy(v, K(coef(rng)), b);
    candidates.push_back(std::move(v));
  }
  for (const auto& x : candidates) {
    Vec<K> mp = minimal_polynomial(s, es, x);
    if (mp.size() <= 2) continue;
    auto root = find_root(mp, s.field());
    if (!root) continue;
    Vec<K> g = divide_by_linear(mp, *root);
    K gl = poly_eval(g, *root);
    Vec<K> f = scale(inverse(gl), eval_in_algebra(s, es, g, x));
    Vec<K> y = a.mul(a.mul(e, ss.lift(f)), e);
    return lift_idempotent(a, y);
  }
  return std::nullopt;
}

template <class K>
void refine(const Algebra<K>& a, const SemisimpleQuotient<K>& ss, const Vec<K>& e, std::vector<Vec<K>>& out) {
  if (auto f = split_idempotent(a, ss, e)) {
    refine(a, ss, *f, out);
    refine(a, ss, sub(e, *f), out);
  } else {
    out.push_back(e);
  }
}

}  // namespace detail

/// Complete set of orthogonal idempotents, primitive whenever the semisimple
/// quotient splits over the base field (division blocks are kept whole).
template <class K>
const std::vector<Vec<K>>& primitive_idempotents(const Algebra<K>& a) {
  auto& cache = a.cache();
  std::call_once(cache.idempotent_once, [&] {
    if (a.dim() == 0) return;
    std::vector<Vec<K>> seeds = a.hints().idempotents;
    if (seeds.empty()) seeds.push_back(a.unit());
    Ideal<K> rad = radical(a);
    std::vector<Vec<K>> out;
    std::optional<SemisimpleQuotient<K>> ss;
    for (const auto& e : seeds) {
      // dim eAe - dim e r e = dim of the corner of the semisimple quotient.
      std::size_t full = sandwich(a, e, e).dim();
      Subspace<K> er(a.dim());
      for (const auto& r : rad.basis()) er.add(a.mul(a.mul(e, r), e));
      if (full - er.dim() == 1) {
        out.push_back(e);
        continue;
      }
      if (!ss) ss = semisimple_quotient(a);
      detail::refine(a, *ss, e, out);
    }
    cache.primitive_idempotents = std::move(out);
  });
  return cache.primitive_idempotents;
}

/// Partition of the primitive idempotents into isomorphism classes
/// (e ~ f iff eAf * fAe is not inside the radical). Returns class ids.
template <class K>
const std::vector<std::size_t>& projective_classes(const Algebra<K>& a) {
  auto& cache = a.cache();
  std::call_once(cache.class_once, [&] {
    const auto& ids = primitive_idempotents(a);
    Ideal<K> rad = radical(a);
    std::vector<std::size_t> cls(ids.size(), ~std::size_t{0});
    std::size_t next = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (cls[i] != ~std::size_t{0}) continue;
      cls[i] = next;
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (cls[j] != ~std::size_t{0}) continue;
        auto x = sandwich(a, ids[i], ids[j]), y = sandwich(a, ids[j], ids[i]);
        bool iso = false;
        for (const auto& u : x.basis()) {
          for (const auto& v : y.basis())
            if (!rad.space.contains(a.mul(u, v))) {
              iso = true;
              break;
            }
          if (iso) break;
        }
        if (iso) cls[j] = next;
      }
      ++next;
    }
    cache.projective_class = std::move(cls);
    cache.class_count = next;
  });
  return cache.projective_class;
}

/// One primitive idempotent per isomorphism class, in first-occurrence order.
template <class K>
std::vector<Vec<K>> basic_idempotents(const Algebra<K>& a) {
  const auto& ids = primitive_idempotents(a);
  const auto& cls = projective_classes(a);
  std::vector<Vec<K>> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (cls[i] == out.size()) out.push_back(ids[i]);
  return out;
}

template <class K>
std::size_t simple_count(const Algebra<K>& a) {
  projective_classes(a);
  return a.cache().class_count;
}

/// Generators which, together with primitive_idempotents(a), generate A.
template <class K>
const std::vector<Vec<K>>& algebra_generators(const Algebra<K>& a) {
  auto& cache = a.cache();
  std::call_once(cache.generator_once, [&] {
    const auto& ids = primitive_idempotents(a);
    std::vector<Vec<K>> gens;
    auto is_id = [&](const Vec<K>& v) { return std::find(ids.begin(), ids.end(), v) != ids.end(); };
    if (!a.hints().generators.empty()) {
      for (const auto& g : a.hints().generators)
        if (!is_id(g)) gens.push_back(g);
      cache.generators = std::move(gens);
      return;
    }
    // Greedy: add pieces e_i b e_j not yet in the generated subalgebra.
    std::vector<Vec<K>> all_gens = ids;
    Subspace<K> sub(a.dim());
    std::vector<Vec<K>> words;
    auto close = [&](std::size_t first_new_gen) {
      // Right-multiply every word by new generators, and new words by all.
      std::size_t w = 0;
      std::vector<Vec<K>> queue;
      for (const auto& x : words)
        for (std::size_t g = first_new_gen; g < all_gens.size(); ++g) queue.push_back(a.mul(x, all_gens[g]));
      for (std::size_t g = first_new_gen; g < all_gens.size(); ++g) queue.push_back(all_gens[g]);
      while (w < queue.size()) {
        Vec<K> v = queue[w++];
        if (!sub.add(v)) continue;
        words.push_back(v);
        for (const auto& g : all_gens) queue.push_back(a.mul(v, g));
      }
    };
    sub.add(a.unit());
    words.push_back(a.unit());
    close(0);
    for (const auto& ei : ids)
      for (const auto& ej : ids)
        for (std::size_t k = 0; k < a.dim() && sub.dim() < a.dim(); ++k) {
          Vec<K> piece = a.mul(a.mul(ei, a.basis(k)), ej);
          if (sub.contains(piece)) continue;
          gens.push_back(piece);
          all_gens.push_back(piece);
          close(all_gens.size() - 1);
        }
    cache.generators = std::move(gens);
  });
  return cache.generators;
}

/// Division-algebra recognition for small algebras: radical zero, no
/// splitting idempotent, and every tested nonzero element invertible
/// (exhaustively over small F_p, otherwise basis plus seeded samples).
struct DivisionVerdict {
  bool is_division = false;
  bool exhaustive = false;
  std::string reason;
};

template <class K>
DivisionVerdict division_algebra_check(const Algebra<K>& a, std::uint64_t seed = 0) {
  DivisionVerdict v;
  if (a.dim() == 0) {
    v.reason = "zero algebra";
    return v;
  }
  if (a.dim() > 16) {
    v.reason = "dimension above 16: not tested";
    return v;
  }
  if (!is_semisimple(a)) {
    v.reason = "nonzero radical";
    return v;
  }
  if (primitive_idempotents(a).size() > 1) {
    v.reason = "splits into orthogonal idempotents";
    return v;
  }
  auto invertible = [&](const Vec<K>& x) { return !is_zero(determinant(a.left_mult(x))); };
  if constexpr (std::is_same_v<K, ModP>) {
    std::uint64_t p = a.field().p, total = 1;
    for (std::size_t i = 0; i < a.dim() && total <= 1000000; ++i) total *= p;
    if (total <= 1000000) {
      for (std::uint64_t code = 1; code < total; ++code) {
        Vec<K> x(a.dim());
        std::uint64_t c = code;
        for (std::size_t i = 0; i < a.dim(); ++i, c /= p) x[i] = ModP(static_cast<std::int64_t>(c % p), a.field().p);
        if (!invertible(x)) {
          v.reason = "found a nonzero non-invertible element";
          return v;
        }
      }
      v.is_division = true;
      v.exhaustive = true;
      v.reason = "every nonzero element invertible (exhaustive)";
      return v;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!invertible(a.basis(i))) {
      v.reason = "basis element " + std::to_string(i) + " is not invertible";
      return v;
    }
  for (int s = 0; s < 64; ++s) {
    Vec<K> x(a.dim());
    for (auto& c : x) c = a.field().template integer<K>(coef(rng));
    if (is_zero_vec(x)) continue;
    if (!invertible(x)) {
      v.reason = "sampled element is not invertible";
      return v;
    }
  }
  v.is_division = true;
  v.reason = "no zero divisor found (basis and 64 seeded samples)";
  return v;
}

}  // namespace semiorth
