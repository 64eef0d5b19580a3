#pragma once

// Composition tensors mu : V (x) U -> W with dim U = dim V = 3, dim W = 6,
// their kernels T, slice ranks, degeneracy cubics, and the 15-dimensional
// quiver algebra F0 -U-> F1 -V-> F2 with relations T.
//
// V (x) U has basis x_v (x) x_u at index 3 v + u.

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "semiorth/gluing.hpp"
#include "semiorth/quiver.hpp"

namespace semiorth {

template <class K>
struct MuTensor {
  enum class Family { Commutative, Sklyanin, Custom };
  Field field;
  Family family = Family::Custom;
  std::vector<K> params;   // (a, b, c) for Sklyanin
  Matrix<K> mu;            // 9 x dim W, v (x) u -> mu row
  Matrix<K> t;             // dim T x 9, rows span the kernel (this is nu)

  std::size_t rank_mu() const { return rank(mu); }
  std::size_t dim_t() const { return t.rows(); }
};

namespace detail {

template <class K>
MuTensor<K> tensor_from_kernel(const Field& f, const std::vector<Vec<K>>& rows) {
  Subspace<K> s(9);
  for (const auto& r : rows) s.add(r);
  QuotientSpace<K> q(s);
  MuTensor<K> m;
  m.field = f;
  m.mu = Matrix<K>(9, q.dim());
  for (std::size_t i = 0; i < 9; ++i) m.mu.set_row(i, q.project(unit_vec<K>(9, i)));
  m.t = Matrix<K>::from_rows(rows, 9);
  return m;
}

}  // namespace detail

/// Symmetrization V (x) V -> S^2 V; T is the antisymmetric part.
template <class K>
MuTensor<K> commutative_tensor(const Field& f) {
  MuTensor<K> m;
  m.field = f;
  m.family = MuTensor<K>::Family::Commutative;
  m.mu = Matrix<K>(9, 6);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mono;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) mono[{i, j}] = mono.size();
  for (std::size_t v = 0; v < 3; ++v)
    for (std::size_t u = 0; u < 3; ++u) m.mu(3 * v + u, mono[{std::min(u, v), std::max(u, v)}]) = f.integer<K>(1);
  auto ker = kernel_basis(m.mu.transpose());
  m.t = Matrix<K>::from_rows(ker, 9);
  return m;
}

/// T spanned by a x_i (x) x_{i+1} + b x_{i+1} (x) x_i + c x_{i+2} (x) x_{i+2}, indices mod 3.
template <class K>
MuTensor<K> sklyanin_tensor(const Field& f, const K& a, const K& b, const K& c) {
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec<K> r(9, K(0));
    std::size_t j = (i + 1) % 3, l = (i + 2) % 3;
    r[3 * i + j] += a;
    r[3 * j + i] += b;
    r[3 * l + l] += c;
    rows.push_back(r);
  }
  if (rank(Matrix<K>::from_rows(rows, 9)) < 3)
    throw AlgebraError(AlgebraErrc::DegenerateParameters, "sklyanin_tensor: the three relations are dependent");
  auto m = detail::tensor_from_kernel(f, rows);
  m.family = MuTensor<K>::Family::Sklyanin;
  m.params = {a, b, c};
  return m;
}

/// Tensor with a user-given kernel (three vectors in V (x) U).
template <class K>
MuTensor<K> tensor_with_kernel(const Field& f, const std::vector<Vec<K>>& rows) {
  if (rows.size() != 3 || rank(Matrix<K>::from_rows(rows, 9)) != 3)
    throw AlgebraError(AlgebraErrc::DegenerateParameters, "kernel must be three independent vectors in V (x) U");
  return detail::tensor_from_kernel(f, rows);
}

enum class Side { U, V };

inline const char* side_name(Side s) { return s == Side::U ? "U" : "V"; }

/// nu_{v*} : T -> U (contract the V factor) or nu_{u*} : T -> V; rows indexed by T.
template <class K>
Matrix<K> contraction(const MuTensor<K>& m, Side side, const Vec<K>& f) {
  Matrix<K> r(m.t.rows(), 3);
  for (std::size_t i = 0; i < m.t.rows(); ++i)
    for (std::size_t v = 0; v < 3; ++v)
      for (std::size_t u = 0; u < 3; ++u) {
        const K& x = m.t(i, 3 * v + u);
        if (is_zero(x)) continue;
        if (side == Side::V) r(i, u) += x * f[v];
        else r(i, v) += x * f[u];
      }
  return r;
}

template <class K>
std::size_t slice_rank_profile(const MuTensor<K>& m, Side side, const Vec<K>& f) {
  if (f.size() != 3 || is_zero_vec(f)) throw AlgebraError(AlgebraErrc::ZeroFunctional, "slice rank needs a nonzero functional");
  return rank(contraction(m, side, f));
}

struct NondegeneracyVerdict {
  enum class Kind { FailsAt, PassesSampled, ProvedForFamily };
  Kind kind = Kind::PassesSampled;
  bool exhaustive = false;
  std::size_t checked = 0;  // functionals per side
  std::size_t min_rank = 3, max_rank = 0;
  Side witness_side = Side::V;
  std::vector<std::string> witness;  // the failing functional

  std::string to_string() const {
    switch (kind) {
      case Kind::FailsAt: {
        std::string s = "FailsAt(" + std::string(side_name(witness_side)) + "*, (";
        for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + witness[i];
        return s + "))";
      }
      case Kind::PassesSampled:
        return "PassesSampled(" + std::to_string(checked) + (exhaustive ? ", exhaustive)" : ")");
      case Kind::ProvedForFamily: return "ProvedForFamily";
    }
    return "";
  }
};

/// Exhaustive over F_p when p^3 <= 10^6; the commutative family is proved
/// (nu_{v*} sends x_i ^ x_j to v_i x_j - v_j x_i, rank 2 for v* != 0);
/// otherwise seeded sampling of small integer functionals.
template <class K>
NondegeneracyVerdict check_nondegenerate(const MuTensor<K>& m, std::size_t samples, std::uint64_t seed) {
  NondegeneracyVerdict out;
  auto test = [&](const Vec<K>& f) {
    for (Side s : {Side::V, Side::U}) {
      std::size_t r = rank(contraction(m, s, f));
      out.min_rank = std::min(out.min_rank, r);
      out.max_rank = std::max(out.max_rank, r);
      if (r < 2) {
        out.kind = NondegeneracyVerdict::Kind::FailsAt;
        out.witness_side = s;
        out.witness.clear();
        for (const auto& x : f) out.witness.push_back(to_string(x));
        return false;
      }
    }
    return true;
  };
  const Field& fld = m.field;
  if (fld.is_finite() && static_cast<std::uint64_t>(fld.p) * fld.p * fld.p <= 1000000u) {
    std::uint64_t p = fld.p, total = p * p * p;
    out.exhaustive = true;
    for (std::uint64_t code = 1; code < total; ++code) {
      Vec<K> f(3);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < 3; ++i, c /= p) f[i] = fld.integer<K>(static_cast<std::int64_t>(c % p));
      ++out.checked;
      if (!test(f)) return out;
    }
    out.kind = NondegeneracyVerdict::Kind::PassesSampled;
    return out;
  }
  if (m.family == MuTensor<K>::Family::Commutative) {
    out.kind = NondegeneracyVerdict::Kind::ProvedForFamily;
    out.min_rank = out.max_rank = 2;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec<K> f(3);
    do {
      for (auto& x : f) x = fld.integer<K>(static_cast<std::int64_t>(rng() % 21) - 10);
    } while (is_zero_vec(f));
    ++out.checked;
    if (!test(f)) return out;
  }
  out.kind = NondegeneracyVerdict::Kind::PassesSampled;
  return out;
}

/// Ternary cubic in the monomial order x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz.
template <class K>
struct Cubic {
  std::array<K, 10> coeffs{};

  static const std::array<std::array<int, 3>, 10>& monomials() {
    static const std::array<std::array<int, 3>, 10> m{{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {2, 0, 1},
                                                       {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1}}};
    return m;
  }
  static std::size_t index_of(const std::array<int, 3>& e) {
    const auto& m = monomials();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == e) return i;
    throw DimensionError("not a cubic monomial");
  }
  static std::string monomial_name(std::size_t i) {
    static const char* names[] = {"x^3", "y^3", "z^3", "x^2y", "x^2z", "xy^2", "y^2z", "xz^2", "yz^2", "xyz"};
    return names[i];
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!semiorth::is_zero(c)) return false;
    return true;
  }
  K eval(const Vec<K>& p) const {
    K s(0);
    const auto& m = monomials();
    for (std::size_t i = 0; i < 10; ++i) {
      K t = coeffs[i];
      for (std::size_t v = 0; v < 3; ++v)
        for (int e = 0; e < m[i][v]; ++e) t = t * p[v];
      s = s + t;
    }
    return s;
  }
  /// Leading nonzero coefficient scaled to 1.
  Cubic normalized() const {
    Cubic c = *this;
    for (const auto& x : coeffs)
      if (!semiorth::is_zero(x)) {
        K inv = inverse(x);
        for (auto& y : c.coeffs) y = y * inv;
        break;
      }
    return c;
  }
  std::vector<std::string> support() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < 10; ++i)
      if (!semiorth::is_zero(coeffs[i])) out.push_back(monomial_name(i));
    return out;
  }
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < 10; ++i) {
      if (semiorth::is_zero(coeffs[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + semiorth::to_string(coeffs[i]) + ")" + monomial_name(i);
    }
    return s;
  }
};

/// det of the 3x3 matrix of linear forms f -> contraction(m, side, f), expanded.
template <class K>
Cubic<K> gamma_cubic(const MuTensor<K>& m, Side side) {
  // entry(i, j) as a linear form: coefficient of f_k
  std::array<std::array<std::array<K, 3>, 3>, 3> lin{};
  for (std::size_t k = 0; k < 3; ++k) {
    auto c = contraction(m, side, unit_vec<K>(3, k));
    for (std::size_t i = 0; i < 3 && i < c.rows(); ++i)
      for (std::size_t j = 0; j < 3; ++j) lin[i][j][k] = c(i, j);
  }
  Cubic<K> out;
  for (auto& x : out.coeffs) x = K(0);
  if (m.t.rows() != 3) return out;
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int p = 0; p < 6; ++p) {
    K sign = p < 3 ? K(1) : K(-1);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t c = 0; c < 3; ++c) {
          K v = lin[0][perms[p][0]][a] * lin[1][perms[p][1]][b] * lin[2][perms[p][2]][c];
          if (is_zero(v)) continue;
          std::array<int, 3> e{0, 0, 0};
          ++e[a];
          ++e[b];
          ++e[c];
          auto& slot = out.coeffs[Cubic<K>::index_of(e)];
          slot = slot + sign * v;
        }
  }
  return out;
}

/// Vertices F0, F1, F2; arrows u0..u2 : F0 -> F1 and v0..v2 : F1 -> F2; relations T.
template <class K>
QuiverPresentation<K> plane_presentation(const MuTensor<K>& m) {
  QuiverPresentation<K> p;
  p.vertices = {"F0", "F1", "F2"};
  for (int i = 0; i < 3; ++i) p.arrows.push_back({"u" + std::to_string(i), "F0", "F1"});
  for (int i = 0; i < 3; ++i) p.arrows.push_back({"v" + std::to_string(i), "F1", "F2"});
  for (std::size_t r = 0; r < m.t.rows(); ++r) {
    std::vector<PathTerm<K>> rel;
    for (std::size_t v = 0; v < 3; ++v)
      for (std::size_t u = 0; u < 3; ++u)
        if (!is_zero(m.t(r, 3 * v + u)))
          rel.push_back(PathTerm<K>{m.t(r, 3 * v + u), {"u" + std::to_string(u), "v" + std::to_string(v)}});
    p.relations.push_back(std::move(rel));
  }
  return p;
}

template <class K>
Algebra<K> plane_algebra(const MuTensor<K>& m) {
  if (m.rank_mu() != 6) throw AlgebraError(AlgebraErrc::NotSurjective, "plane_algebra: mu has rank " + std::to_string(m.rank_mu()));
  return from_quiver(m.field, plane_presentation(m));
}

/// Vertex idempotents e_F0, e_F1, e_F2.
template <class K>
std::vector<Vec<K>> plane_vertices(const Algebra<K>& a) {
  return a.hints().idempotents;
}

struct PlaneReport {
  bool pass = false;
  std::string witness;
  std::size_t dim = 0, simples = 0;
  IntMatrix cartan;  // C_ij = dim Hom(E_i, E_j), E = (P_F2, P_F1, P_F0)
  long det = 0;
  DimensionBound gldim;
  bool exceptional = false, strong = false, semiorthogonal = false, round_trip = false;
  SODReport sod;
};

/// Collection order (P_F2, P_F1, P_F0): Hom from later to earlier vanishes.
template <class K>
PlaneReport verify_plane_algebra(const MuTensor<K>& m, std::size_t cutoff = kDefaultCutoff) {
  PlaneReport r;
  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };
  auto a = plane_algebra(m);
  r.dim = a.dim();
  r.simples = simple_count(a);
  auto vs = plane_vertices(a);
  std::vector<PerfComplex<K>> ps;
  for (const auto& e : vs) ps.push_back(projective_complex(a, {e}));
  r.gldim = global_dimension(a, cutoff);
  std::vector<PerfComplex<K>> order{ps[2], ps[1], ps[0]};
  r.cartan.assign(3, std::vector<long>(3, 0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.cartan[i][j] = static_cast<long>(derived_hom(order[i], order[j]).at(0));
  r.det = int_determinant(r.cartan);
  if (r.cartan != IntMatrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}) note("Cartan matrix is not [[1,3,6],[0,1,3],[0,0,1]]");
  r.exceptional = true;
  for (const auto& p : order)
    if (!is_exceptional(p).pass) r.exceptional = false;
  if (!r.exceptional) note("a vertex projective is not exceptional");
  r.semiorthogonal = !check_semiorthogonal(order).has_value();
  if (!r.semiorthogonal) note(check_semiorthogonal(order)->to_string());
  r.strong = true;
  for (const auto& x : order)
    for (const auto& y : order)
      if (!derived_hom(x, y).concentrated_in_zero()) r.strong = false;
  if (!r.strong) note("collection is not strong");
  if (r.semiorthogonal && r.strong) {
    auto ca = collection_algebra(order);
    IntMatrix c = cartan_matrix(ca.algebra, ca.idempotents);
    // e_i End e_j is Hom(E_j, E_i)
    bool same = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) same = same && c[i][j] == r.cartan[j][i];
    r.round_trip = ca.algebra.dim() == a.dim() && same;
    if (!r.round_trip) note("collection algebra has different Cartan data");
  }
  std::vector<std::vector<PerfComplex<K>>> blocks{{order[0]}, {order[1]}, {order[2]}};
  r.sod = verify_sod(blocks, trivial_certificate(order, order, {0, 1, 2}));
  if (!r.sod.pass) note(r.sod.witness);
  r.pass = r.dim == 15 && r.simples == 3 && r.det == 1 && r.cartan == IntMatrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}} && r.gldim == DimensionBound::finite_dim(2) && r.exceptional &&
           r.semiorthogonal && r.strong && r.round_trip && r.sod.pass;
  if (r.witness.empty() && !r.pass) note("dim " + std::to_string(r.dim) + ", gl.dim " + r.gldim.to_string());
  return r;
}

}  // namespace semiorth
