// semiorth: command-line front end.  Exit 0 = all checks pass, 1 = some check
// failed (report still printed), 2 = usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "semiorth/acceptance.hpp"

using namespace semiorth;

namespace {

struct Options {
  std::size_t cutoff = kDefaultCutoff;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::vector<std::string> files;
  std::string verify = "sod,k0,smooth";
  std::string vertices, idempotent, order;
  std::string sklyanin, field = "Q";
  bool commutative = false;
  std::size_t samples = 200;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

struct Input {
  std::string name, text;
};

std::vector<Input> read_inputs(const std::vector<std::string>& files) {
  std::vector<Input> out;
  for (const auto& f : files) out.push_back({std::filesystem::path(f).filename().string(), read_file(f)});
  return out;
}

void stamp(Report& r, const std::vector<Input>& in, const Options& o, const std::string& extra = {}) {
  std::uint64_t h = fnv1a(r.command);
  for (const auto& i : in) {
    r.inputs.push_back(i.name);
    h = fnv1a(std::string(1, '\0') + i.text, h);
  }
  h = fnv1a("|cutoff=" + std::to_string(o.cutoff) + ";seed=" + std::to_string(o.seed) + ";" + extra, h);
  r.digest = hex64(h);
}

int emit(const Report& r, const Options& o) {
  if (o.format == "text") std::cout << r.to_text();
  else std::cout << r.to_json().dump(2) << "\n";
  return r.any_failed() ? 1 : 0;
}

template <class K>
Algebra<K> load(const Input& in) {
  return parse_algebra<K>(in.text, in.name);
}

// Runs f.template operator()<K>() with K chosen by the first document's field.
template <class F>
int with_field(const Input& first, F&& f) {
  auto d = parse_algebra_document(first.text, first.name);
  if (d.field.is_finite()) return f.template operator()<ModP>();
  return f.template operator()<Rational>();
}

int cmd_analyze(const Options& o) {
  auto in = read_inputs(o.files);
  return with_field(in[0], [&]<class K>() {
    auto r = analyze_report(load<K>(in[0]), o.cutoff);
    stamp(r, in, o);
    return emit(r, o);
  });
}

int cmd_auslander(const Options& o) {
  auto in = read_inputs(o.files);
  return with_field(in[0], [&]<class K>() {
    auto r = auslander_report(load<K>(in[0]), o.cutoff);
    stamp(r, in, o);
    return emit(r, o);
  });
}

int cmd_glue(const Options& o) {
  auto in = read_inputs(o.files);
  auto verify = parse_verify_list(o.verify);
  for (const auto& v : verify)
    if (!gluing_verifications().count(v)) throw ParseError("--verify", "unknown check '" + v + "'");
  return with_field(in[0], [&]<class K>() {
    auto a = load<K>(in[0]);
    auto b = load<K>(in[1]);
    if (!(a.field() == b.field())) throw ValidationError("A and B are over different fields");
    auto s = parse_bimodule(b, a, in[2].text, in[2].name);
    auto r = gluing_report(a, b, s, verify, o.cutoff);
    stamp(r, in, o, o.verify);
    return emit(r, o);
  });
}

int cmd_split(const Options& o) {
  auto in = read_inputs(o.files);
  return with_field(in[0], [&]<class K>() {
    auto c = load<K>(in[0]);
    Vec<K> e(c.dim(), K(0));
    if (!o.idempotent.empty()) {
      auto parts = split_commas(o.idempotent);
      if (parts.size() != c.dim()) throw ParseError("--idempotent", "needs " + std::to_string(c.dim()) + " coordinates");
      for (std::size_t i = 0; i < parts.size(); ++i) e[i] = parse_scalar<K>(c.field(), Json(parts[i]), "--idempotent");
    } else if (!o.vertices.empty()) {
      for (const auto& v : choose_idempotents(c, split_commas(o.vertices))) e = add(e, v);
    } else {
      throw ParseError("split", "give --vertices or --idempotent for e_a");
    }
    auto r = split_report(c, e, o.cutoff);
    stamp(r, in, o, o.vertices + "|" + o.idempotent);
    return emit(r, o);
  });
}

int cmd_sod(const Options& o) {
  auto in = read_inputs(o.files);
  return with_field(in[0], [&]<class K>() {
    auto a = load<K>(in[0]);
    auto r = sod_report(a, choose_idempotents(a, split_commas(o.order)), o.cutoff);
    stamp(r, in, o, o.order);
    return emit(r, o);
  });
}

Field parse_field_flag(const std::string& s) {
  if (s == "Q") return Field::rationals();
  std::string digits = s;
  if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
  else if (digits.rfind("F", 0) == 0) digits = digits.substr(1);
  try {
    std::size_t used = 0;
    unsigned long p = std::stoul(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(s);
    return Field::prime(static_cast<std::uint32_t>(p));
  } catch (const std::exception&) {
    throw ParseError("--field", "expected Q, F<p> or a prime, got '" + s + "'");
  }
}

int cmd_ncplane(const Options& o) {
  Field f = parse_field_flag(o.field);
  if (o.commutative == !o.sklyanin.empty()) throw ParseError("ncplane", "give exactly one of --commutative, --sklyanin a,b,c");
  auto run = [&]<class K>() {
    MuTensor<K> m;
    if (o.commutative) {
      m = commutative_tensor<K>(f);
    } else {
      auto p = split_commas(o.sklyanin);
      if (p.size() != 3) throw ParseError("--sklyanin", "expected a,b,c");
      try {
        m = sklyanin_tensor<K>(f, parse_scalar<K>(f, Json(p[0]), "a"), parse_scalar<K>(f, Json(p[1]), "b"),
                               parse_scalar<K>(f, Json(p[2]), "c"));
      } catch (const AlgebraError& e) {
        throw ValidationError(e.what());
      }
    }
    auto r = ncplane_report(m, o.samples, o.seed, o.cutoff);
    stamp(r, {}, o, f.name() + "|" + (o.commutative ? std::string("commutative") : o.sklyanin) + "|" + std::to_string(o.samples));
    return emit(r, o);
  };
  if (f.is_finite()) return run.template operator()<ModP>();
  return run.template operator()<Rational>();
}

int cmd_corpus(const Options& o) {
  auto r = corpus_report(o.seed, o.cutoff);
  stamp(r, {}, o);
  return emit(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-orthogonal decompositions of finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cutoff", o.cutoff, "homological degree cutoff")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "radical, simples, Cartan matrix, gl.dim, smoothness");
  analyze->add_option("algebra", o.files)->required()->expected(1);
  auto* auslander = app.add_subcommand("auslander", "Auslander algebra of a local algebra and its collection");
  auslander->add_option("algebra", o.files)->required()->expected(1);
  auto* gl = app.add_subcommand("glue", "glue A and B along a B-A bimodule S");
  gl->add_option("files", o.files, "A.json B.json S.json")->required()->expected(3);
  gl->add_option("--verify", o.verify, "comma list from sod,k0,smooth,regular,roundtrip")->capture_default_str();
  auto* split = app.add_subcommand("split", "split an algebra along an idempotent with e_a C e_b = 0");
  split->add_option("algebra", o.files)->required()->expected(1);
  split->add_option("--vertices", o.vertices, "vertices whose idempotents sum to e_a");
  split->add_option("--idempotent", o.idempotent, "e_a as comma-separated coordinates");
  auto* sod = app.add_subcommand("sod", "projectives as an ordered collection");
  sod->add_option("algebra", o.files)->required()->expected(1);
  sod->add_option("--order", o.order, "comma list of vertices");
  auto* nc = app.add_subcommand("ncplane", "composition tensors and the plane algebra");
  nc->add_flag("--commutative", o.commutative);
  nc->add_option("--sklyanin", o.sklyanin, "a,b,c");
  nc->add_option("--field", o.field, "Q or F<p>")->capture_default_str();
  nc->add_option("--samples", o.samples)->capture_default_str();
  auto* corpus = app.add_subcommand("corpus", "run the shipped acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*auslander) return cmd_auslander(o);
    if (*gl) return cmd_glue(o);
    if (*split) return cmd_split(o);
    if (*sod) return cmd_sod(o);
    if (*nc) return cmd_ncplane(o);
    if (*corpus) return cmd_corpus(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
