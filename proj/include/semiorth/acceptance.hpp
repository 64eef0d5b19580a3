#pragma once

// The shipped acceptance suite. Each criterion returns its checks plus wall
// times; the corpus verb serializes the checks only, so its output stays
// byte-stable.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "semiorth/corpus.hpp"
#include "semiorth/random.hpp"
#include "semiorth/reports.hpp"

namespace semiorth {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  Json tables = Json::object();
  // (label, seconds) and the limit each must stay under
  std::vector<std::pair<std::string, double>> timings;
  double limit_seconds = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::Pass) return false;
    return !checks.empty();
  }
  bool within_time() const {
    for (const auto& [label, t] : timings)
      if (t >= limit_seconds) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness, std::string anchor) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness), std::move(anchor)});
  }
  void absorb(const std::string& prefix, const Report& r) {
    for (auto c : r.checks) {
      c.name = prefix + "/" + c.name;
      checks.push_back(std::move(c));
    }
  }
};

namespace detail {

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class K>
void auslander_rows(CriterionResult& out, const Field& f, std::size_t cutoff) {
  const std::size_t expected[] = {0, 0, 5, 14, 30};
  for (std::size_t n = 2; n <= 4; ++n) {
    std::string label = "k[x]/(x^" + std::to_string(n) + ")/" + f.name();
    double t = timed([&] {
      auto lam = truncated_polynomial<K>(f, n);
      auto rep = auslander_report(lam, cutoff);
      std::size_t dim = rep.tables["gamma_dim"].template get<std::size_t>();
      out.add(label + "/gamma_dim", dim == expected[n], std::to_string(dim) + " (want " + std::to_string(expected[n]) + ")",
              "auslander.dim");
      for (const auto& c : rep.checks)
        if (c.name != "embedding_fully_faithful") out.checks.push_back({label + "/" + c.name, c.status, c.witness, c.anchor});
      out.tables[label] = Json{{"gamma_dim", dim}, {"gldim", rep.tables["gldim"]}, {"end_dims", rep.tables["end_dims"]}};
    });
    out.timings.emplace_back(label, t);
  }
}

}  // namespace detail

inline CriterionResult criterion_auslander(std::size_t cutoff = kDefaultCutoff) {
  CriterionResult r;
  r.id = 1;
  r.title = "Auslander algebras of k[x]/(x^n): dimension, gl.dim, collection, End(P_n)";
  r.limit_seconds = 5;  // per algebra
  detail::auslander_rows<Rational>(r, Field::rationals(), cutoff);
  detail::auslander_rows<ModP>(r, Field::prime(5), cutoff);
  return r;
}

inline CriterionResult criterion_gluing_sod(std::size_t cutoff = kDefaultCutoff) {
  CriterionResult r;
  r.id = 2;
  r.title = "Gluing SOD on ten corpus gluings";
  r.limit_seconds = 10;
  double t = detail::timed([&] {
    for (const auto& ng : corpus_gluings<Rational>(Field::rationals())) {
      Report rep;
      auto g = glue(ng.a, ng.b, ng.s);
      add_gluing_sod_checks(rep, g, true, true, cutoff);
      r.absorb(ng.name, rep);
      r.tables[ng.name] = Json{{"cartan_c", rep.tables["cartan_c"]}, {"cartan_dets", rep.tables["cartan_dets"]},
                               {"simples", rep.tables["simples"]}};
    }
  });
  r.timings.emplace_back("total", t);
  return r;
}

inline CriterionResult criterion_smooth_gluing(std::size_t cutoff = kDefaultCutoff) {
  CriterionResult r;
  r.id = 3;
  r.title = "smooth(C) iff smooth(A), smooth(B) and S perfect";
  r.limit_seconds = 30;
  double t = detail::timed([&] {
    std::size_t definitive = 0;
    for (const auto& ng : corpus_gluings<Rational>(Field::rationals())) {
      auto g = glue(ng.a, ng.b, ng.s);
      auto c = verify_smooth_gluing(g, cutoff);
      r.tables[ng.name] = Json{{"a", c.a.to_string()}, {"b", c.b.to_string()}, {"s", c.s.to_string()},
                               {"c", c.c.to_string()}, {"verdict", verdict_name(c.verdict)}};
      if (c.verdict != Verdict3::Inconclusive) ++definitive;
      r.checks.push_back({ng.name + "/biconditional",
                          c.verdict == Verdict3::Fails ? CheckStatus::Fail
                          : c.verdict == Verdict3::Holds ? CheckStatus::Pass
                                                         : CheckStatus::Inconclusive,
                          c.witness.empty() ? "smooth(C) = " + c.c.to_string() : c.witness, "gluing.smooth"});
      if (ng.name == "k|k|k2")
        r.add(ng.name + "/finite_1", c.c == DimensionBound::finite_dim(1), c.c.to_string(), "gluing.smooth");
      if (ng.name.find("dual2") != std::string::npos)
        r.add(ng.name + "/periodic", c.c.kind == DimensionBound::Kind::PeriodicHenceInfinite, c.c.to_string(),
              "gluing.smooth");
    }
    r.tables["definitive"] = definitive;
  });
  r.timings.emplace_back("total", t);
  return r;
}

inline CriterionResult criterion_round_trip(std::uint64_t seed) {
  CriterionResult r;
  r.id = 4;
  r.title = "split(glue) and glue(split) are identities up to multiplicative bijection";
  r.limit_seconds = 30;
  double t = detail::timed([&] {
    for (const auto& ng : corpus_gluings<Rational>(Field::rationals())) {
      auto x = verify_split_of_glue(ng.a, ng.b, ng.s);
      r.add(ng.name + "/split_of_glue", x.pass, x.witness, "gluing.roundtrip");
      auto g = glue(ng.a, ng.b, ng.s);
      auto y = verify_glue_of_split(g.algebra, g.e_a);
      r.add(ng.name + "/glue_of_split", y.pass, y.witness, "gluing.roundtrip");
    }
    auto f5 = Field::prime(5);
    std::mt19937_64 rng(seed);
    std::vector<Algebra<ModP>> parts{field_algebra<ModP>(f5), split_semisimple_commutative<ModP>(f5, 2),
                                     truncated_polynomial<ModP>(f5, 2)};
    std::size_t ok = 0;
    std::string first_bad;
    std::vector<std::size_t> dims;
    for (int i = 0; i < 50; ++i) {
      const auto& a = parts[rng() % parts.size()];
      const auto& b = parts[rng() % parts.size()];
      auto s = random_bimodule(b, a, 4, rng);
      dims.push_back(s.dim);
      auto x = verify_split_of_glue(a, b, s);
      auto g = glue(a, b, s);
      auto y = verify_glue_of_split(g.algebra, g.e_a);
      if (x.pass && y.pass) ++ok;
      else if (first_bad.empty()) first_bad = "sample " + std::to_string(i) + ": " + x.witness + y.witness;
    }
    r.add("random_F5/50_bimodules", ok == 50, ok == 50 ? "50/50" : first_bad, "gluing.roundtrip");
    r.tables["random_F5_dims"] = dims;
  });
  r.timings.emplace_back("total", t);
  return r;
}

inline CriterionResult criterion_plane(std::size_t cutoff = kDefaultCutoff) {
  CriterionResult r;
  r.id = 5;
  r.title = "Plane algebras: cubics, nondegeneracy, the 15-dimensional algebra";
  r.limit_seconds = 20;
  double t = detail::timed([&] {
    const Field q = Field::rationals();
    auto comm = commutative_tensor<Rational>(q);
    r.add("commutative/gamma_zero", gamma_cubic(comm, Side::V).is_zero() && gamma_cubic(comm, Side::U).is_zero(), "",
          "ncplane.cubic");
    auto sk = sklyanin_tensor<Rational>(q, Rational(1), Rational(2), Rational(3));
    auto g = gamma_cubic(sk, Side::V);
    auto sup = g.support();
    r.add("sklyanin_1_2_3/gamma_nonzero", !g.is_zero(), g.normalized().to_string(), "ncplane.cubic");
    r.add("sklyanin_1_2_3/support", sup == std::vector<std::string>{"x^3", "y^3", "z^3", "xyz"},
          g.normalized().to_string(), "ncplane.cubic");
    for (const auto& [name, m] : {std::pair{std::string("commutative"), comm}, std::pair{std::string("sklyanin_1_2_3"), sk}}) {
      auto p = verify_plane_algebra(m, cutoff);
      r.add(name + "/plane_algebra", p.pass && p.dim == 15 && p.simples == 3, p.witness, "ncplane.algebra");
      r.add(name + "/cartan", p.cartan == IntMatrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}, int_matrix_to_json(p.cartan).dump(),
            "ncplane.algebra");
      r.add(name + "/gldim_2", p.gldim == DimensionBound::finite_dim(2), p.gldim.to_string(), "ncplane.algebra");
    }
    for (std::uint32_t pr : {5u, 7u}) {
      auto f = Field::prime(pr);
      auto v = check_nondegenerate(commutative_tensor<ModP>(f), 0, 0);
      bool ok = v.exhaustive && v.kind == NondegeneracyVerdict::Kind::PassesSampled && v.checked == pr * pr * pr - 1 &&
                v.min_rank == 2 && v.max_rank == 2;
      r.add("commutative_" + f.name() + "/exhaustive_rank_2", ok,
            v.to_string() + ", ranks " + std::to_string(v.min_rank) + ".." + std::to_string(v.max_rank), "ncplane.nondegenerate");
    }
  });
  r.timings.emplace_back("total", t);
  return r;
}

inline CriterionResult criterion_derived_vs_ext(std::uint64_t seed) {
  CriterionResult r;
  r.id = 6;
  r.title = "derived_hom of resolved modules equals ext_dims in every degree";
  r.limit_seconds = 60;
  double t = detail::timed([&] {
    std::vector<NamedAlgebra<Rational>> algs;
    for (auto& na : corpus_algebras<Rational>(Field::rationals())) algs.push_back(na);
    std::mt19937_64 rng(seed);
    std::size_t pairs = 0, agree = 0, skipped = 0;
    std::string first_bad;
    Json per_algebra = Json::object();
    // draw modules until both have finite projective dimension; local
    // non-semisimple algebras only contribute their free modules
    auto draw = [&](const Algebra<Rational>& a, Resolution<Rational>& res) {
      for (int attempt = 0; attempt < 40; ++attempt) {
        auto m = random_module(a, rng);
        ResolutionOptions opt;
        opt.cutoff = 8;
        opt.stop_on_period = true;
        res = minimal_resolution(m, opt);
        if (res.status == ResolutionStatus::Complete) return true;
        ++skipped;
      }
      return false;
    };
    for (std::size_t i = 0; pairs < 100; ++i) {
      const auto& na = algs[i % algs.size()];
      Resolution<Rational> rm, rn;
      if (!draw(na.algebra, rm) || !draw(na.algebra, rn)) continue;
      auto x = complex_from_resolution(rm), y = complex_from_resolution(rn);
      auto p = derived_hom(x, y);
      std::size_t top = std::max(rm.length, rn.length) + 2;
      auto e = ext_dims(rm.module, rn.module, top);
      bool ok = true;
      for (int l = -static_cast<int>(top); l <= static_cast<int>(top); ++l) {
        std::size_t want = l < 0 ? 0 : e[static_cast<std::size_t>(l)];
        if (p.at(l) != want) ok = false;
      }
      for (const auto& [l, d] : p.dims)
        if (l < -static_cast<int>(top) || l > static_cast<int>(top)) ok = ok && d == 0;
      ++pairs;
      per_algebra[na.name] = per_algebra.value(na.name, 0) + 1;
      if (ok) ++agree;
      else if (first_bad.empty()) first_bad = na.name + " pair " + std::to_string(pairs) + ": " + p.to_string();
    }
    r.add("100_pairs", agree == 100, agree == 100 ? "100/100 agree" : first_bad, "derived.ext_agreement");
    r.tables["pairs_per_algebra"] = per_algebra;
    r.tables["infinite_pd_draws_skipped"] = skipped;
  });
  r.timings.emplace_back("total", t);
  return r;
}

inline CriterionResult criterion_exceptional() {
  CriterionResult r;
  r.id = 7;
  r.title = "exceptional, semi-exceptional and w-exceptional regular modules";
  r.limit_seconds = 1;
  double t = detail::timed([&] {
    const Field q = Field::rationals();
    auto reg = [](const Algebra<Rational>& a) { return projective_complex(a, {a.unit()}); };
    auto k = reg(field_algebra<Rational>(q));
    auto kk = reg(split_semisimple_commutative<Rational>(q, 2));
    auto h = reg(quaternion_algebra<Rational>(q, Rational(-1), Rational(-1)));
    r.add("k/exceptional", is_exceptional(k).pass, is_exceptional(k).witness, "derived.exceptional");
    auto e = is_exceptional(kk), w = is_w_exceptional(kk), s = is_semi_exceptional(kk);
    r.add("kxk/semi_exceptional_only", !e.pass && !w.pass && s.pass, s.witness, "derived.semi_exceptional");
    auto he = is_exceptional(h), hw = is_w_exceptional(h);
    r.add("quaternions/w_exceptional", !he.pass && hw.pass, hw.witness, "derived.w_exceptional");
  });
  r.timings.emplace_back("total", t);
  return r;
}

inline std::vector<std::function<CriterionResult()>> acceptance_criteria(std::uint64_t seed, std::size_t cutoff) {
  return {[=] { return criterion_auslander(cutoff); },   [=] { return criterion_gluing_sod(cutoff); },
          [=] { return criterion_smooth_gluing(cutoff); }, [=] { return criterion_round_trip(seed); },
          [=] { return criterion_plane(cutoff); },       [=] { return criterion_derived_vs_ext(seed); },
          [] { return criterion_exceptional(); }};
}

/// Everything above, without timings.
inline Report corpus_report(std::uint64_t seed, std::size_t cutoff) {
  Report r;
  r.command = "corpus";
  for (const auto& run : acceptance_criteria(seed, cutoff)) {
    auto c = run();
    std::string prefix = "c" + std::to_string(c.id);
    for (auto ch : c.checks) {
      ch.name = prefix + "/" + ch.name;
      r.checks.push_back(std::move(ch));
    }
    r.tables[prefix] = Json{{"title", c.title}, {"tables", c.tables}};
  }
  return r;
}

}  // namespace semiorth
