#pragma once

// Generation certificates and semi-orthogonal decomposition reports.
//
// A certificate is a list of steps, each building a complex from earlier
// ones, plus one witness per target: a closed degree-0 map u from the target
// to a step whose cone has vanishing self-Hom, so u is a homotopy
// equivalence. Once target j is witnessed, later steps may use it directly.

#include <set>
#include <string>
#include <vector>

#include "semiorth/complex.hpp"

namespace semiorth {

template <class K>
struct CertStep {
  enum class Kind { Generator, Shift, Sum, Cone, Summand, Target };
  Kind kind = Kind::Generator;
  std::size_t index = 0;            // generator index, or target index for Target
  std::vector<std::size_t> inputs;  // earlier step indices
  int shift = 0;
  GradedMap<K> map;                 // Cone: inputs[0] -> inputs[1]
  PerfComplex<K> summand;           // Summand: the retract Z
  GradedMap<K> include, project;    // Summand: Z -> inputs[0] -> Z
  std::string label;

  static CertStep generator(std::size_t i, std::string label = {}) {
    CertStep s;
    s.kind = Kind::Generator;
    s.index = i;
    s.label = std::move(label);
    return s;
  }
  static CertStep shifted(std::size_t step, int n) {
    CertStep s;
    s.kind = Kind::Shift;
    s.inputs = {step};
    s.shift = n;
    return s;
  }
  static CertStep sum(std::vector<std::size_t> steps) {
    CertStep s;
    s.kind = Kind::Sum;
    s.inputs = std::move(steps);
    return s;
  }
  static CertStep cone_of(std::size_t from, std::size_t to, GradedMap<K> f) {
    CertStep s;
    s.kind = Kind::Cone;
    s.inputs = {from, to};
    s.map = std::move(f);
    return s;
  }
  static CertStep summand_of(std::size_t step, PerfComplex<K> z, GradedMap<K> i, GradedMap<K> p) {
    CertStep s;
    s.kind = Kind::Summand;
    s.inputs = {step};
    s.summand = std::move(z);
    s.include = std::move(i);
    s.project = std::move(p);
    return s;
  }
  static CertStep target(std::size_t j) {
    CertStep s;
    s.kind = Kind::Target;
    s.index = j;
    return s;
  }
};

template <class K>
struct TargetWitness {
  std::size_t target = 0;
  std::size_t step = 0;  // complex reached by the certificate
  GradedMap<K> map;      // target -> step complex
};

/// Witnesses are replayed in order; a step of kind Target(j) may only follow the witness for j.
template <class K>
struct GenerationCertificate {
  std::vector<PerfComplex<K>> generators;
  std::vector<CertStep<K>> steps;
  std::vector<PerfComplex<K>> targets;
  std::vector<TargetWitness<K>> witnesses;
  std::vector<std::size_t> witness_after;  // witnesses[w] is checked once steps[0..witness_after[w]] exist
};

namespace detail {

inline std::string step_name(std::size_t i) { return "step " + std::to_string(i); }

template <class K>
bool is_boundary(const HomComplex<K>& h, const GradedMap<K>& f) {
  return h.boundaries(f.degree).contains(h.flatten(f));
}

}  // namespace detail

/// Replays the certificate; throws InvalidCertificateStep naming the first bad step.
template <class K>
void validate_certificate(const GenerationCertificate<K>& cert) {
  using Kind = typename CertStep<K>::Kind;
  auto fail = [](const std::string& where, const std::string& why) {
    throw AlgebraError(AlgebraErrc::InvalidCertificateStep, where + ": " + why);
  };
  std::vector<PerfComplex<K>> built;
  std::vector<bool> certified(cert.targets.size(), false);
  if (cert.witness_after.size() != cert.witnesses.size()) fail("certificate", "witness schedule has the wrong length");
  std::size_t next_witness = 0;

  auto check_witnesses = [&](std::size_t upto) {
    while (next_witness < cert.witnesses.size() && cert.witness_after[next_witness] <= upto) {
      const auto& w = cert.witnesses[next_witness];
      std::string where = "witness for target " + std::to_string(w.target);
      if (w.target >= cert.targets.size()) fail(where, "no such target");
      if (w.step >= built.size()) fail(where, "refers to a step not yet built");
      const auto& t = cert.targets[w.target];
      const auto& s = built[w.step];
      if (w.map.degree != 0 || !is_closed(t, s, w.map)) fail(where, "map is not a closed degree-0 map");
      auto c = cone(t, s, w.map);
      auto p = derived_hom(c, c);
      if (!p.is_zero()) fail(where, "cone of the witness map is not contractible, self-Hom " + p.to_string());
      certified[w.target] = true;
      ++next_witness;
    }
  };

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& st = cert.steps[i];
    std::string where = detail::step_name(i);
    for (auto in : st.inputs)
      if (in >= built.size()) fail(where, "input " + std::to_string(in) + " is not an earlier step");
    switch (st.kind) {
      case Kind::Generator:
        if (st.index >= cert.generators.size()) fail(where, "no such generator");
        built.push_back(cert.generators[st.index]);
        break;
      case Kind::Shift:
        if (st.inputs.size() != 1) fail(where, "shift takes one input");
        built.push_back(shift(built[st.inputs[0]], st.shift));
        break;
      case Kind::Sum: {
        if (st.inputs.empty()) fail(where, "empty sum");
        std::vector<PerfComplex<K>> parts;
        for (auto in : st.inputs) parts.push_back(built[in]);
        built.push_back(direct_sum(parts));
        break;
      }
      case Kind::Cone: {
        if (st.inputs.size() != 2) fail(where, "cone takes two inputs");
        const auto& x = built[st.inputs[0]];
        const auto& y = built[st.inputs[1]];
        if (st.map.degree != 0 || !is_closed(x, y, st.map)) fail(where, "cone map is not closed of degree 0");
        built.push_back(cone(x, y, st.map));
        break;
      }
      case Kind::Summand: {
        if (st.inputs.size() != 1) fail(where, "summand takes one input");
        const auto& n = built[st.inputs[0]];
        const auto& z = st.summand;
        if (!is_closed(z, n, st.include) || !is_closed(n, z, st.project) || st.include.degree != 0 ||
            st.project.degree != 0)
          fail(where, "retraction maps are not closed of degree 0");
        auto pi = compose_maps(z, n, z, st.project, st.include);
        auto diff = linear_combination(z, z, K(1), pi, K(-1), identity_map(z));
        HomComplex<K> h(z, z);
        if (!detail::is_boundary(h, diff)) fail(where, "p o i is not homotopic to the identity");
        built.push_back(z);
        break;
      }
      case Kind::Target:
        if (st.index >= cert.targets.size()) fail(where, "no such target");
        if (!certified[st.index]) fail(where, "target " + std::to_string(st.index) + " used before it is witnessed");
        built.push_back(cert.targets[st.index]);
        break;
    }
    check_witnesses(i);
  }
  if (next_witness != cert.witnesses.size()) fail("certificate", "witness refers to a step past the end");
  for (std::size_t t = 0; t < certified.size(); ++t)
    if (!certified[t]) fail("target " + std::to_string(t), "never witnessed");
}

/// Identity certificate when the generators are the targets themselves.
template <class K>
GenerationCertificate<K> trivial_certificate(const std::vector<PerfComplex<K>>& objects,
                                             const std::vector<PerfComplex<K>>& targets,
                                             const std::vector<std::size_t>& target_to_object) {
  GenerationCertificate<K> c;
  c.generators = objects;
  c.targets = targets;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    c.steps.push_back(CertStep<K>::generator(target_to_object[t]));
    c.witnesses.push_back({t, t, identity_map(targets[t])});
    c.witness_after.push_back(t);
  }
  return c;
}

struct SODReport {
  bool pass = false;
  std::string witness;
  std::vector<std::string> orthogonality;  // one line per verified pair
  bool generation = false;
  std::string generation_detail;
  std::vector<std::size_t> block_k0_ranks;
  std::size_t simple_count = 0;
  bool k0_additive = false;
};

/// K_0 rank of the block generated by some objects: the number of simple
/// End-modules when the sum of the objects has End in degree 0, else the
/// rank of the span of their classes.
template <class K>
std::size_t block_k0_rank(const std::vector<PerfComplex<K>>& block) {
  auto sum = direct_sum(block);
  auto p = derived_hom(sum, sum);
  if (p.concentrated_in_zero() && !p.is_zero()) return simple_count(end_algebra(sum));
  std::vector<Vec<Rational>> rows;
  for (const auto& x : block) {
    auto v = k0_class(x);
    Vec<Rational> r;
    for (auto c : v) r.push_back(Rational(c));
    rows.push_back(r);
  }
  if (rows.empty() || rows.front().empty()) return 0;
  return rank(Matrix<Rational>::from_rows(rows, rows.front().size()));
}

/// blocks[0], blocks[1], ... with Hom(later, earlier) = 0; the certificate must
/// reach every basic indecomposable projective from the objects. A malformed
/// certificate throws InvalidCertificateStep.
template <class K>
SODReport verify_sod(const std::vector<std::vector<PerfComplex<K>>>& blocks, const GenerationCertificate<K>& cert) {
  SODReport r;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  bool orth = true;
  for (std::size_t bi = 0; bi < blocks.size() && orth; ++bi)
    for (std::size_t bj = 0; bj < bi && orth; ++bj)
      for (std::size_t x = 0; x < blocks[bi].size() && orth; ++x)
        for (std::size_t y = 0; y < blocks[bj].size() && orth; ++y) {
          auto p = derived_hom(blocks[bi][x], blocks[bj][y]);
          std::string tag = "Hom(B" + std::to_string(bi) + "." + std::to_string(x) + ", B" + std::to_string(bj) + "." +
                            std::to_string(y) + "[*]) = " + p.to_string();
          r.orthogonality.push_back(tag);
          if (!p.is_zero()) {
            orth = false;
            r.witness = tag;
          }
        }

  const Algebra<K>& a = blocks.empty() || blocks.front().empty() ? cert.targets.front().algebra
                                                                  : blocks.front().front().algebra;
  // Every basic projective must occur as a summand of a target concentrated in one degree.
  auto ids = basic_idempotents(a);
  std::set<std::size_t> covered;
  for (const auto& t : cert.targets) {
    std::size_t nonzero = 0;
    for (const auto& term : t.terms) nonzero += term.empty() ? 0 : 1;
    if (nonzero != 1) continue;
    for (const auto& term : t.terms)
      for (const auto& e : term) {
        auto mult = projective_multiplicities(a, e);
        for (std::size_t c = 0; c < mult.size(); ++c)
          if (mult[c] > 0) covered.insert(c);
      }
  }
  validate_certificate(cert);
  if (covered.size() != ids.size()) {
    r.generation = false;
    r.generation_detail = "certificate targets miss some indecomposable projective";
  } else {
    r.generation = true;
    r.generation_detail = std::to_string(cert.targets.size()) + " projectives reached in " +
                          std::to_string(cert.steps.size()) + " steps";
  }

  r.simple_count = ids.size();
  std::size_t total = 0;
  for (const auto& b : blocks) {
    r.block_k0_ranks.push_back(block_k0_rank(b));
    total += r.block_k0_ranks.back();
  }
  r.k0_additive = total == r.simple_count;

  r.pass = orth && r.generation && r.k0_additive;
  if (r.witness.empty() && !r.generation) r.witness = r.generation_detail;
  if (r.witness.empty() && !r.k0_additive)
    r.witness = "K0 ranks sum to " + std::to_string(total) + ", simples " + std::to_string(r.simple_count);
  return r;
}

}  // namespace semiorth
