#pragma once

// Small algebras used across the unit tests.

#include <functional>
#include <vector>

#include "semiorth/algebra.hpp"

namespace semiorth::testing {

/// Group algebra k[G] for a group given by its multiplication function on
/// {0..order-1} (0 is the identity).
template <class K>
Algebra<K> group_algebra(const Field& f, std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  std::vector<std::vector<Vec<K>>> t(order, std::vector<Vec<K>>(order, zero_vec<K>(order)));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) t[i][j][op(i, j)] = f.integer<K>(1);
  return Algebra<K>::from_structure_constants(f, t, unit_vec<K>(order, 0));
}

/// Full matrix algebra M_n(k) with matrix-unit basis E_ij at index i*n+j.
template <class K>
Algebra<K> matrix_algebra(const Field& f, std::size_t n) {
  std::size_t d = n * n;
  std::vector<std::vector<Vec<K>>> t(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t[i * n + j][j * n + l][i * n + l] = f.integer<K>(1);
  Vec<K> unit(d, K(0));
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.integer<K>(1);
  return Algebra<K>::from_structure_constants(f, t, unit);
}

/// Upper triangular n x n matrices (basis E_ij, i <= j, row-major order).
template <class K>
Algebra<K> upper_triangular(const Field& f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  std::size_t d = idx.size();
  auto pos = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < d; ++k)
      if (idx[k] == std::make_pair(i, j)) return k;
    return d;
  };
  std::vector<std::vector<Vec<K>>> t(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (idx[a].second == idx[b].first) t[a][b][pos(idx[a].first, idx[b].second)] = f.integer<K>(1);
  Vec<K> unit(d, K(0));
  for (std::size_t i = 0; i < n; ++i) unit[pos(i, i)] = f.integer<K>(1);
  return Algebra<K>::from_structure_constants(f, t, unit);
}

/// Q[x]/(x^2 - 2), basis 1, x.
inline Algebra<Rational> sqrt2_field() {
  std::vector<std::vector<Vec<Rational>>> t(2, std::vector<Vec<Rational>>(2, zero_vec<Rational>(2)));
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][0][1] = 1;
  t[1][1][0] = 2;
  return Algebra<Rational>::from_structure_constants(Field::rationals(), t, unit_vec<Rational>(2, 0));
}

}  // namespace semiorth::testing
