#pragma once

// One report builder per CLI verb. Every check carries an anchor; docs/anchors.md
// says in words what each anchor asserts.

#include <set>
#include <string>
#include <vector>

#include "semiorth/auslander.hpp"
#include "semiorth/io.hpp"
#include "semiorth/ncplane.hpp"

namespace semiorth {

namespace detail {

inline CheckStatus from_verdict(Verdict3 v) {
  switch (v) {
    case Verdict3::Holds: return CheckStatus::Pass;
    case Verdict3::Fails: return CheckStatus::Fail;
    case Verdict3::Inconclusive: return CheckStatus::Inconclusive;
  }
  return CheckStatus::Inconclusive;
}

inline Json profile_json(const DerivedHomProfile& p) {
  Json j = Json::object();
  for (const auto& [l, d] : p.dims) j[std::to_string(l)] = d;
  return j;
}

inline Json sod_json(const SODReport& s) {
  return Json{{"pass", s.pass},
              {"generation", s.generation},
              {"generation_detail", s.generation_detail},
              {"block_k0_ranks", s.block_k0_ranks},
              {"simple_count", s.simple_count},
              {"k0_additive", s.k0_additive},
              {"orthogonality", s.orthogonality}};
}

}  // namespace detail

template <class K>
Report analyze_report(const Algebra<K>& a, std::size_t cutoff) {
  Report r;
  r.command = "analyze";
  auto powers = radical_powers(a);
  auto rad = radical(a);
  std::size_t index = nilpotency_index(a);
  r.tables["field"] = a.field().name();
  r.tables["dim"] = a.dim();
  r.tables["radical_dim"] = rad.dim();
  r.tables["nilpotency_index"] = index;
  std::vector<std::size_t> power_dims;
  for (const auto& p : powers) power_dims.push_back(p.dim());
  r.tables["radical_power_dims"] = power_dims;
  r.tables["simples"] = simple_count(a);
  std::vector<std::size_t> sd;
  for (const auto& m : simple_modules(a)) sd.push_back(m.dim());
  r.tables["simple_dims"] = sd;
  auto cm = cartan_matrix(a);
  r.tables["cartan"] = int_matrix_to_json(cm);
  r.tables["cartan_det"] = int_determinant(cm);
  auto gl = global_dimension(a, cutoff);
  auto sm = is_smooth(a, cutoff);
  r.tables["gldim"] = gl.to_string();
  r.tables["smooth"] = sm.to_string();
  r.tables["semisimple"] = rad.dim() == 0;

  r.add("structure", true, "associativity and unit verified at construction", "algebra.structure");
  r.add("radical_nilpotent", powers.back().dim() == 0,
        "r^" + std::to_string(index) + " = 0, r^" + std::to_string(index ? index - 1 : 0) + " != 0", "algebra.radical");
  r.add("proper", is_proper(a, std::min<std::size_t>(cutoff, 4)), "Ext between simples finite in each degree",
        "homalg.proper");
  // smooth and regular agree for these algebras (perfect field)
  bool agree = gl.finite() == sm.finite() || gl.kind == DimensionBound::Kind::AtLeast || sm.kind == DimensionBound::Kind::AtLeast;
  r.add("smooth_matches_gldim", agree, "gl.dim " + gl.to_string() + ", pd of the diagonal " + sm.to_string(),
        "homalg.smooth");
  return r;
}

template <class K>
Report auslander_report(const Algebra<K>& lambda, std::size_t cutoff) {
  Report r;
  r.command = "auslander";
  auto d = build_auslander(lambda);
  r.tables["n"] = d.n;
  r.tables["gamma_dim"] = d.gamma.dim();
  r.tables["hom_dims"] = d.hom_dims;

  auto gl = verify_gldim(d, cutoff);
  r.tables["gldim"] = gl.gldim.to_string();
  r.tables["gldim_bound"] = gl.bound;
  r.add("gldim", gl.pass, "gl.dim " + gl.gldim.to_string() + ", bound n + 1 = " + std::to_string(gl.bound),
        "auslander.gldim");

  auto c = verify_collection(d);
  r.add("collection.k_p_vanishing", c.vanish_kp, c.vanish_kp ? "" : c.witness, "auslander.collection.kp");
  r.add("collection.k_k_vanishing", c.vanish_kk, c.vanish_kk ? "" : c.witness, "auslander.collection.kk");
  r.add("collection.concentrated", c.concentrated, c.concentrated ? "" : c.witness, "auslander.collection.concentrated");
  r.add("collection.semisimple_end", c.semisimple_end, c.semisimple_end ? "" : c.witness,
        "auslander.collection.semisimple");
  r.add("collection.quotient_map", c.quotient_map, c.quotient_map ? "" : c.witness, "auslander.collection.quotient");
  r.add("collection.generation", c.generation, c.sod.generation_detail, "auslander.collection.generation");
  r.tables["hom_profiles"] = c.profiles;
  r.tables["end_dims"] = c.end_dims;
  r.tables["end_kernel_dims"] = c.end_kernel_dims;
  r.tables["end_simple_counts"] = c.end_simple_counts;
  r.tables["sod"] = detail::sod_json(c.sod);

  auto rec = verify_endomorphism_recovery(d);
  r.add("end_recovers_lambda", rec.pass, rec.witness, "auslander.recovery");
  r.tables["end_pn_dim"] = rec.end_dim;
  r.tables["pn_self_hom"] = detail::profile_json(rec.self_hom);

  auto em = verify_embedding(d);
  r.add("embedding_fully_faithful", em.pass, em.pass ? std::to_string(em.pairs) + " pairs" : em.witness,
        "auslander.embedding");
  return r;
}

inline std::set<std::string> parse_verify_list(const std::string& s) {
  std::set<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

inline const std::set<std::string>& gluing_verifications() {
  static const std::set<std::string> all{"sod", "k0", "smooth", "regular", "roundtrip"};
  return all;
}

template <class K>
void add_gluing_sod_checks(Report& r, const GluedAlgebra<K>& g, bool sod, bool k0, std::size_t cutoff) {
  auto s = verify_gluing_sod(g, std::min<std::size_t>(cutoff, 6));
  r.tables["upper_corner_dim"] = s.upper_corner_dim;
  r.tables["cartan_a"] = int_matrix_to_json(s.cartan_a);
  r.tables["cartan_b"] = int_matrix_to_json(s.cartan_b);
  r.tables["cartan_c"] = int_matrix_to_json(s.cartan_c);
  r.tables["cartan_dets"] = std::vector<long>{s.det_a, s.det_b, s.det_c};
  r.tables["simples"] = std::vector<std::size_t>{s.simples_a, s.simples_b, s.simples_c};
  if (sod) {
    r.add("upper_corner_zero", s.upper_corner_dim == 0, "dim e_a C e_b = " + std::to_string(s.upper_corner_dim),
          "gluing.orthogonal");
    r.add("hom_b_to_a_vanishes", s.orthogonal, s.orthogonal ? "" : s.witness, "gluing.orthogonal");
    r.add("induced_a_fully_faithful", s.faithful_a, s.faithful_a ? "" : s.witness, "gluing.faithful");
    r.add("induced_b_fully_faithful", s.faithful_b, s.faithful_b ? "" : s.witness, "gluing.faithful");
    r.add("cartan_block_triangular", s.cartan_block_triangular, "", "gluing.cartan");
    r.add("cartan_det_multiplicative", s.upper_corner_dim == 0 && s.det_c == s.det_a * s.det_b,
          std::to_string(s.det_c) + " = " + std::to_string(s.det_a) + " * " + std::to_string(s.det_b), "gluing.cartan");
    r.add("induced_projectives_generate", s.sod.pass, s.sod.pass ? s.sod.generation_detail : s.sod.witness,
          "gluing.sod");
    r.tables["sod"] = detail::sod_json(s.sod);
  }
  if (k0)
    r.add("k0_additive", s.upper_corner_dim == 0 && s.k0_additive,
          std::to_string(s.simples_c) + " = " + std::to_string(s.simples_a) + " + " + std::to_string(s.simples_b),
          "gluing.k0");
}

template <class K>
Report gluing_report(const Algebra<K>& a, const Algebra<K>& b, const Bimodule<K>& s, const std::set<std::string>& verify,
                     std::size_t cutoff) {
  Report r;
  r.command = "glue";
  auto g = glue(a, b, s);
  r.tables["dims"] = Json{{"a", a.dim()}, {"b", b.dim()}, {"s", s.dim}, {"c", g.algebra.dim()}};
  if (verify.count("sod") || verify.count("k0")) add_gluing_sod_checks(r, g, verify.count("sod") > 0, verify.count("k0") > 0, cutoff);
  auto closure = [&](const ClosureReport& c, const char* name, const char* anchor) {
    r.tables[name] = Json{{"a", c.a.to_string()}, {"b", c.b.to_string()}, {"s", c.s.to_string()}, {"c", c.c.to_string()},
                          {"verdict", verdict_name(c.verdict)}};
    std::string w = c.witness.empty() ? std::string(name) + "(C) = " + c.c.to_string() : c.witness;
    r.add(name, detail::from_verdict(c.verdict), w, anchor);
  };
  if (verify.count("smooth")) closure(verify_smooth_gluing(g, cutoff), "smooth", "gluing.smooth");
  if (verify.count("regular")) closure(verify_regular_gluing(g, cutoff), "regular", "gluing.regular");
  if (verify.count("roundtrip")) {
    auto x = verify_split_of_glue(a, b, s);
    r.add("split_of_glue", x.pass, x.witness, "gluing.roundtrip");
    auto y = verify_glue_of_split(g.algebra, g.e_a);
    r.add("glue_of_split", y.pass, y.witness, "gluing.roundtrip");
  }
  return r;
}

template <class K>
Report split_report(const Algebra<K>& c, const Vec<K>& e_a, std::size_t cutoff) {
  Report r;
  r.command = "split";
  r.tables["e_a"] = vector_to_json(e_a);
  SplitData<K> d;
  try {
    d = split_gluing(c, e_a);
  } catch (const AlgebraError& e) {
    r.add("corner_semiorthogonal", false, e.what(), "gluing.split");
    return r;
  }
  r.add("corner_semiorthogonal", true, "e_a C e_b = 0", "gluing.split");
  r.tables["dims"] = Json{{"c", c.dim()}, {"a", d.a.algebra.dim()}, {"b", d.b.algebra.dim()}, {"s", d.s.dim}};
  auto y = verify_glue_of_split(c, e_a);
  r.add("glue_of_split", y.pass, y.witness, "gluing.roundtrip");
  auto g = glue(d.a.algebra, d.b.algebra, d.s);
  add_gluing_sod_checks(r, g, true, true, cutoff);
  return r;
}

/// Vertex projectives in the given order; vertex names come from a quiver presentation
/// or, failing that, indices into the basic idempotents.
template <class K>
std::vector<Vec<K>> choose_idempotents(const Algebra<K>& a, const std::vector<std::string>& order) {
  std::vector<Vec<K>> ids;
  std::vector<std::string> names;
  if (a.presentation()) {
    ids = a.hints().idempotents;
    names = a.presentation()->vertices;
  } else {
    ids = basic_idempotents(a);
    for (std::size_t i = 0; i < ids.size(); ++i) names.push_back(std::to_string(i));
  }
  if (order.empty()) return ids;
  std::vector<Vec<K>> out;
  for (const auto& o : order) {
    auto it = std::find(names.begin(), names.end(), o);
    if (it == names.end()) throw ParseError("--order", "unknown vertex '" + o + "'");
    out.push_back(ids[static_cast<std::size_t>(it - names.begin())]);
  }
  return out;
}

template <class K>
Report sod_report(const Algebra<K>& a, const std::vector<Vec<K>>& ids, std::size_t cutoff) {
  (void)cutoff;
  Report r;
  r.command = "sod";
  std::vector<PerfComplex<K>> objs;
  for (const auto& e : ids) objs.push_back(projective_complex(a, {e}));
  std::size_t n = objs.size();
  Json table = Json::array();
  bool strong = true;
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      auto p = derived_hom(objs[i], objs[j]);
      if (!p.concentrated_in_zero()) strong = false;
      row.push_back(detail::profile_json(p));
    }
    table.push_back(row);
  }
  r.tables["hom_profiles"] = table;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = is_exceptional(objs[i]);
    if (v.pass) {
      r.add("object_" + std::to_string(i) + "_exceptional", true, v.witness, "derived.exceptional");
    } else {
      auto w = is_w_exceptional(objs[i]);
      r.add("object_" + std::to_string(i) + "_w_exceptional", w.pass, w.witness, "derived.w_exceptional");
    }
  }
  auto orth = check_semiorthogonal(objs);
  r.add("semiorthogonal", !orth.has_value(), orth ? orth->to_string() : "", "sod.semiorthogonal");
  r.add("strong", strong, "", "sod.strong");
  std::vector<std::vector<PerfComplex<K>>> blocks;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    blocks.push_back({objs[i]});
    idx.push_back(i);
  }
  auto s = verify_sod(blocks, trivial_certificate(objs, objs, idx));
  r.add("generation", s.generation, s.generation ? s.generation_detail : s.witness, "sod.generation");
  r.add("k0_additive", s.k0_additive, "", "sod.k0");
  r.tables["sod"] = detail::sod_json(s);
  return r;
}

template <class K>
Report ncplane_report(const MuTensor<K>& m, std::size_t samples, std::uint64_t seed, std::size_t cutoff) {
  Report r;
  r.command = "ncplane";
  const char* fam = m.family == MuTensor<K>::Family::Commutative ? "commutative"
                    : m.family == MuTensor<K>::Family::Sklyanin  ? "sklyanin"
                                                                 : "custom";
  r.tables["family"] = fam;
  r.tables["field"] = m.field.name();
  if (!m.params.empty()) r.tables["params"] = vector_to_json(m.params);
  r.tables["T"] = matrix_to_json(m.t);
  r.tables["rank_mu"] = m.rank_mu();
  r.tables["dim_T"] = m.dim_t();
  auto prod = m.t * m.mu;
  bool vanish = true;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) vanish = vanish && is_zero(prod(i, j));
  r.add("tensor_shape", m.rank_mu() == 6 && m.dim_t() == 3 && vanish,
        "rank mu " + std::to_string(m.rank_mu()) + ", dim T " + std::to_string(m.dim_t()), "ncplane.shape");

  auto v = check_nondegenerate(m, samples, seed);
  CheckStatus st = CheckStatus::Pass;
  if (v.kind == NondegeneracyVerdict::Kind::FailsAt) st = CheckStatus::Fail;
  else if (v.kind == NondegeneracyVerdict::Kind::PassesSampled && !v.exhaustive) st = CheckStatus::Inconclusive;
  r.add("nondegenerate", st, v.to_string() + ", slice ranks " + std::to_string(v.min_rank) + ".." + std::to_string(v.max_rank),
        "ncplane.nondegenerate");

  auto gu = gamma_cubic(m, Side::U), gv = gamma_cubic(m, Side::V);
  auto cubic_json = [](const Cubic<K>& c) {
    Json j = Json::object();
    auto n = c.normalized();
    for (std::size_t i = 0; i < 10; ++i)
      if (!is_zero(n.coeffs[i])) j[Cubic<K>::monomial_name(i)] = to_string(n.coeffs[i]);
    return j;
  };
  r.tables["gamma_U"] = cubic_json(gu);
  r.tables["gamma_V"] = cubic_json(gv);
  r.add("cubics_agree_on_vanishing", gu.is_zero() == gv.is_zero(),
        std::string("Gamma_V ") + (gv.is_zero() ? "is the whole plane" : "is a cubic"), "ncplane.cubic");

  if (m.rank_mu() == 6) {
    auto p = verify_plane_algebra(m, cutoff);
    r.tables["plane"] = Json{{"dim", p.dim}, {"simples", p.simples}, {"cartan", int_matrix_to_json(p.cartan)},
                             {"det", p.det}, {"gldim", p.gldim.to_string()}};
    r.add("plane_algebra", p.pass, p.witness, "ncplane.algebra");
  }
  return r;
}

}  // namespace semiorth
