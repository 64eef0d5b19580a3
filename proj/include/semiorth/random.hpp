#pragma once

// Seeded random modules and bimodules for property checks.

#include <random>
#include <vector>

#include "semiorth/gluing.hpp"

namespace semiorth {

/// Quotient of a random sum of basic projectives by a random cyclic submodule,
/// or that submodule itself.
template <class K>
RightModule<K> random_module(const Algebra<K>& a, std::mt19937_64& rng) {
  auto ids = basic_idempotents(a);
  std::vector<Vec<K>> chosen;
  std::size_t parts = 1 + rng() % 2;
  for (std::size_t i = 0; i < parts; ++i) chosen.push_back(ids[rng() % ids.size()]);
  auto p = realize_projective(a, chosen);
  std::vector<Vec<K>> gens;
  std::size_t ng = rng() % 3;
  for (std::size_t g = 0; g < ng; ++g) {
    Vec<K> v(p.dim(), K(0));
    for (auto& x : v) x = a.field().template integer<K>(static_cast<std::int64_t>(rng() % 5) - 2);
    if (rng() % 2) {
      auto rs = radical_submodule(p.module);
      v = rs.dim() ? rs.basis()[rng() % rs.dim()] : v;
    }
    gens.push_back(v);
  }
  Subspace<K> w = generated_submodule(p.module, gens);
  if (w.dim() > 0 && w.dim() < p.dim() && rng() % 3 == 0) return submodule(p.module, w).module;
  auto q = quotient_module(p.module, w).module;
  if (q.dim() == 0) return p.module;
  return q;
}

/// A bimodule {}_B S_A with dim S <= max_dim, drawn as a module over B^op (x) A.
template <class K>
Bimodule<K> random_bimodule(const Algebra<K>& b, const Algebra<K>& a, std::size_t max_dim, std::mt19937_64& rng) {
  auto env = tensor_product(opposite(b), a);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto m = random_module(env, rng);
    if (m.dim() <= max_dim) return bimodule_from_module(b, a, m);
  }
  throw AlgebraError(AlgebraErrc::InvalidModule, "no random bimodule of dimension <= " + std::to_string(max_dim));
}

}  // namespace semiorth
