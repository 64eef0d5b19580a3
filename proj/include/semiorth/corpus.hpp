#pragma once

// Shipped test inputs: small algebras covering the semisimple, local,
// hereditary, directed and division cases, and ten gluings built from them.

#include <string>
#include <vector>

#include "semiorth/gluing.hpp"
#include "semiorth/ncplane.hpp"
#include "semiorth/quiver.hpp"

namespace semiorth {

/// Linear quiver 1 -> 2 -> ... -> n; with zero_relations, all paths of length two vanish.
template <class K>
QuiverPresentation<K> linear_quiver_presentation(std::size_t n, bool zero_relations) {
  QuiverPresentation<K> p;
  for (std::size_t i = 1; i <= n; ++i) p.vertices.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) p.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  if (zero_relations)
    for (std::size_t i = 1; i + 1 < n; ++i)
      p.relations.push_back({PathTerm<K>{K(1), {"a" + std::to_string(i), "a" + std::to_string(i + 1)}}});
  return p;
}

template <class K>
struct NamedAlgebra {
  std::string name;
  Algebra<K> algebra;
};

/// The base corpus; quaternions only over Q.
template <class K>
std::vector<NamedAlgebra<K>> corpus_algebras(const Field& f) {
  std::vector<NamedAlgebra<K>> out;
  out.push_back({"k", field_algebra<K>(f)});
  out.push_back({"kxk", split_semisimple_commutative<K>(f, 2)});
  out.push_back({"dual2", truncated_polynomial<K>(f, 2)});
  out.push_back({"dual3", truncated_polynomial<K>(f, 3)});
  out.push_back({"dual4", truncated_polynomial<K>(f, 4)});
  out.push_back({"kronecker", from_quiver(f, kronecker_presentation<K>())});
  out.push_back({"a3_rel", from_quiver(f, linear_quiver_presentation<K>(3, true))});
  out.push_back({"plane", plane_algebra(commutative_tensor<K>(f))});
  if constexpr (std::is_same_v<K, Rational>) out.push_back({"quaternions", quaternion_algebra<K>(f, K(-1), K(-1))});
  return out;
}

template <class K>
struct NamedGluing {
  std::string name;
  Algebra<K> a, b;
  Bimodule<K> s;
};

template <class K>
std::vector<NamedGluing<K>> corpus_gluings(const Field& f) {
  auto k = field_algebra<K>(f);
  auto kk = split_semisimple_commutative<K>(f, 2);
  auto d2 = truncated_polynomial<K>(f, 2);
  auto d3 = truncated_polynomial<K>(f, 3);
  auto kron = from_quiver(f, kronecker_presentation<K>());
  auto reg_k = regular_module(k);
  auto simple_left = [](const Algebra<K>& b) { return simple_modules(opposite(b)).front(); };

  std::vector<NamedGluing<K>> out;
  out.push_back({"k|k|0", k, k, zero_bimodule(k, k)});
  out.push_back({"k|k|k", k, k, scalar_bimodule(k, reg_k, 1)});
  out.push_back({"k|k|k2", k, k, scalar_bimodule(k, reg_k, 2)});
  out.push_back({"k|k|k3", k, k, scalar_bimodule(k, reg_k, 3)});
  out.push_back({"dual2|k|k", d2, k, scalar_bimodule(k, simple_modules(d2).front(), 1)});
  out.push_back({"k|dual2|k", k, d2, outer_bimodule(d2, simple_left(d2), reg_k)});
  out.push_back({"kxk|k|k2", kk, k, scalar_bimodule(k, direct_sum(kk, simple_modules(kk)), 1)});
  {
    auto ps = indecomposable_projectives(kron);
    auto big = *std::max_element(ps.begin(), ps.end(), [](const auto& x, const auto& y) { return x.dim() < y.dim(); });
    out.push_back({"kronecker|k|P", kron, k, scalar_bimodule(k, big, 1)});
  }
  out.push_back({"dual2|dual2|dual2", d2, d2, regular_bimodule(d2)});
  if constexpr (std::is_same_v<K, Rational>) {
    auto h = quaternion_algebra<K>(f, K(-1), K(-1));
    out.push_back({"quaternions|k|H", h, k, scalar_bimodule(k, regular_module(h), 1)});
  } else {
    out.push_back({"dual3|dual2|k", d3, d2, outer_bimodule(d2, simple_left(d2), simple_modules(d3).front())});
  }
  return out;
}

}  // namespace semiorth
