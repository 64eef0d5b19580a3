#pragma once

// Path algebras of quivers modulo admissible relations.
//
// Let J be the arrow ideal and I the ideal generated by the relations
// (every relation term has length >= 2). We look for the first m with
// J^m contained in I + J^(m+1); for admissible I this forces J^m to lie in
// I, and the algebra is (kQ / J^m) / image(I), computed by linear algebra
// on paths of length < m. Reduction pivots on the longest path, so the
// surviving basis consists of the shortest normal forms.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "semiorth/algebra.hpp"

namespace semiorth {

namespace detail {

struct QPath {
  std::vector<int> arrows;
  int source = 0, target = 0;
  std::size_t length() const { return arrows.size(); }
};

class PathTable {
 public:
  PathTable(std::size_t n_vertices, std::vector<std::pair<int, int>> arrow_ends)
      : ends_(std::move(arrow_ends)) {
    for (std::size_t v = 0; v < n_vertices; ++v) {
      QPath p;
      p.source = p.target = static_cast<int>(v);
      push(std::move(p));
    }
    level_start_ = {0, paths_.size()};
  }

  std::size_t max_length() const { return level_start_.size() - 2; }
  std::size_t size() const { return paths_.size(); }
  std::size_t count_up_to(std::size_t len) const { return level_start_[len + 1]; }
  const QPath& operator[](std::size_t i) const { return paths_[i]; }

  void extend_to(std::size_t len, std::size_t cap) {
    while (max_length() < len) {
      std::size_t from = level_start_[level_start_.size() - 2], to = level_start_.back();
      for (std::size_t i = from; i < to; ++i) {
        for (std::size_t a = 0; a < ends_.size(); ++a) {
          if (ends_[a].first != paths_[i].target) continue;
          QPath q = paths_[i];
          q.arrows.push_back(static_cast<int>(a));
          q.target = ends_[a].second;
          push(std::move(q));
          if (paths_.size() > cap)
            throw AlgebraError(AlgebraErrc::InfiniteDimensional, "path count exceeds " + std::to_string(cap));
        }
      }
      level_start_.push_back(paths_.size());
    }
  }

  /// Index of a path given by arrows (length >= 1) or of a vertex.
  std::size_t index_of_arrows(const std::vector<int>& arrows) const { return index_.at(arrows); }
  std::size_t vertex_index(int v) const { return static_cast<std::size_t>(v); }

 private:
  void push(QPath p) {
    if (!p.arrows.empty()) index_[p.arrows] = paths_.size();
    paths_.push_back(std::move(p));
  }

  std::vector<std::pair<int, int>> ends_;
  std::vector<QPath> paths_;
  std::vector<std::size_t> level_start_;
  std::map<std::vector<int>, std::size_t> index_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultMaxPathLength = 32;

template <class K>
Algebra<K> from_quiver(const Field& field, const QuiverPresentation<K>& pres,
                       std::size_t max_len = kDefaultMaxPathLength) {
  using detail::QPath;
  std::map<std::string, int> vidx, aidx;
  for (std::size_t v = 0; v < pres.vertices.size(); ++v)
    if (!vidx.emplace(pres.vertices[v], static_cast<int>(v)).second)
      throw AlgebraError(AlgebraErrc::MalformedRelation, "duplicate vertex '" + pres.vertices[v] + "'");
  if (pres.vertices.empty()) throw AlgebraError(AlgebraErrc::MalformedRelation, "quiver has no vertices");
  std::vector<std::pair<int, int>> ends;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const auto& ar = pres.arrows[a];
    if (!vidx.count(ar.source) || !vidx.count(ar.target))
      throw AlgebraError(AlgebraErrc::MalformedRelation, "arrow '" + ar.name + "' has an unknown endpoint");
    if (vidx.count(ar.name) || !aidx.emplace(ar.name, static_cast<int>(a)).second)
      throw AlgebraError(AlgebraErrc::MalformedRelation, "duplicate name '" + ar.name + "'");
    ends.emplace_back(vidx[ar.source], vidx[ar.target]);
  }

  struct Rel {
    std::vector<std::pair<K, std::vector<int>>> terms;
    int source, target;
    std::size_t min_len;
  };
  std::vector<Rel> rels;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    Rel rel{{}, -1, -1, ~std::size_t{0}};
    for (const auto& term : pres.relations[r]) {
      if (term.path.size() < 2)
        throw AlgebraError(AlgebraErrc::MalformedRelation,
                           "relation " + std::to_string(r) + " has a term of length < 2 (not admissible)");
      std::vector<int> arrows;
      for (const auto& name : term.path) {
        auto it = aidx.find(name);
        if (it == aidx.end())
          throw AlgebraError(AlgebraErrc::MalformedRelation,
                             "relation " + std::to_string(r) + " uses unknown arrow '" + name + "'");
        if (!arrows.empty() && ends[arrows.back()].second != ends[it->second].first)
          throw AlgebraError(AlgebraErrc::MalformedRelation,
                             "relation " + std::to_string(r) + " contains a non-composable path");
        arrows.push_back(it->second);
      }
      int s = ends[arrows.front()].first, t = ends[arrows.back()].second;
      if (rel.source == -1) {
        rel.source = s;
        rel.target = t;
      } else if (rel.source != s || rel.target != t) {
        throw AlgebraError(AlgebraErrc::MalformedRelation,
                           "relation " + std::to_string(r) + " mixes paths with different endpoints");
      }
      rel.min_len = std::min(rel.min_len, arrows.size());
      if (!is_zero(term.coeff)) rel.terms.emplace_back(term.coeff, std::move(arrows));
    }
    if (!rel.terms.empty()) rels.push_back(std::move(rel));
  }

  constexpr std::size_t kPathCap = 200000;
  detail::PathTable paths(pres.vertices.size(), ends);

  // Image of I in kQ / J^(bound+1), columns ordered longest path first.
  auto ideal_image = [&](std::size_t bound) {
    std::size_t n = paths.count_up_to(bound);
    auto col = [n](std::size_t i) { return n - 1 - i; };
    Subspace<K> img(n);
    for (const auto& rel : rels) {
      if (rel.min_len > bound) continue;
      for (std::size_t pi = 0; pi < paths.count_up_to(bound - rel.min_len); ++pi) {
        const QPath& p = paths[pi];
        if (p.target != rel.source) continue;
        for (std::size_t qi = 0; qi < paths.count_up_to(bound - rel.min_len - p.length()); ++qi) {
          const QPath& q = paths[qi];
          if (q.source != rel.target) continue;
          Vec<K> v(n, K(0));
          for (const auto& [c, arrows] : rel.terms) {
            std::size_t len = p.length() + arrows.size() + q.length();
            if (len > bound) continue;
            std::vector<int> w = p.arrows;
            w.insert(w.end(), arrows.begin(), arrows.end());
            w.insert(w.end(), q.arrows.begin(), q.arrows.end());
            v[col(paths.index_of_arrows(w))] += c;
          }
          img.add(v);
        }
      }
    }
    return img;
  };

  std::size_t m = 0;
  for (std::size_t cand = 1; cand <= max_len; ++cand) {
    paths.extend_to(cand, kPathCap);
    std::size_t lo = paths.count_up_to(cand - 1), hi = paths.count_up_to(cand);
    if (lo == hi) {
      m = cand;
      break;
    }
    Subspace<K> img = ideal_image(cand);
    bool all = true;
    for (std::size_t i = lo; i < hi && all; ++i) all = img.contains(unit_vec<K>(hi, hi - 1 - i));
    if (all) {
      m = cand;
      break;
    }
  }
  if (m == 0)
    throw AlgebraError(AlgebraErrc::InfiniteDimensional,
                       "J^m not inside the relation ideal for any m <= " + std::to_string(max_len));

  std::size_t bound = m - 1;
  std::size_t n_paths = paths.count_up_to(bound);
  QuotientSpace<K> quot(ideal_image(bound));
  auto col = [n_paths](std::size_t i) { return n_paths - 1 - i; };

  // Quotient coordinate t corresponds to column lifted_index(t), i.e. to path
  // n_paths - 1 - column; reorder so the basis follows path order.
  std::size_t dim = quot.dim();
  std::vector<std::size_t> basis_path(dim);
  for (std::size_t t = 0; t < dim; ++t) basis_path[t] = n_paths - 1 - quot.lifted_index(t);
  std::vector<std::size_t> order(dim);
  for (std::size_t t = 0; t < dim; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return basis_path[x] < basis_path[y]; });
  std::vector<std::size_t> position(dim);
  for (std::size_t t = 0; t < dim; ++t) position[order[t]] = t;

  auto reduce_path = [&](const std::vector<int>& arrows, int vertex) -> Vec<K> {
    Vec<K> out(dim, K(0));
    if (arrows.size() > bound) return out;
    Vec<K> v(n_paths, K(0));
    std::size_t idx = arrows.empty() ? paths.vertex_index(vertex) : paths.index_of_arrows(arrows);
    v[col(idx)] = K(1);
    Vec<K> q = quot.project(v);
    for (std::size_t t = 0; t < dim; ++t) out[position[t]] = q[t];
    return out;
  };

  std::vector<SparseVec<K>> table(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const QPath& p = paths[basis_path[order[x]]];
    for (std::size_t y = 0; y < dim; ++y) {
      const QPath& q = paths[basis_path[order[y]]];
      if (p.target != q.source) continue;
      if (p.length() == 0) {
        table[x * dim + y] = to_sparse(reduce_path(q.arrows, q.source));
      } else {
        std::vector<int> w = p.arrows;
        w.insert(w.end(), q.arrows.begin(), q.arrows.end());
        table[x * dim + y] = to_sparse(reduce_path(w, p.target));
      }
    }
  }

  typename Algebra<K>::Hints hints;
  Vec<K> unit(dim, K(0));
  std::vector<std::string> labels;
  std::vector<std::size_t> arrow_basis;
  for (std::size_t x = 0; x < dim; ++x) {
    const QPath& p = paths[basis_path[order[x]]];
    if (p.length() == 0) {
      unit[x] = K(1);
      hints.idempotents.push_back(unit_vec<K>(dim, x));
      labels.push_back(pres.vertices[p.source]);
    } else {
      std::string l;
      for (auto a : p.arrows) l += (l.empty() ? "" : "*") + pres.arrows[a].name;
      labels.push_back(l);
      if (p.length() == 1) arrow_basis.push_back(x);
    }
  }
  hints.generators = hints.idempotents;
  for (auto x : arrow_basis) hints.generators.push_back(unit_vec<K>(dim, x));
  std::size_t nv = pres.vertices.size();
  hints.radical = [dim, nv] {
    Subspace<K> s(dim);
    for (std::size_t x = nv; x < dim; ++x) s.add(unit_vec<K>(dim, x));
    return s;
  };
  auto alg = Algebra<K>::from_sparse(field, dim, std::move(table), std::move(unit), std::move(hints),
                                     std::move(labels));
  alg.set_presentation(pres);
  return alg;
}

/// Kronecker quiver v0 => v1 with arrows a, b.
template <class K>
QuiverPresentation<K> kronecker_presentation(std::size_t arrows = 2) {
  QuiverPresentation<K> p;
  p.vertices = {"v0", "v1"};
  for (std::size_t i = 0; i < arrows; ++i) p.arrows.push_back({std::string(1, char('a' + i)), "v0", "v1"});
  return p;
}

}  // namespace semiorth
