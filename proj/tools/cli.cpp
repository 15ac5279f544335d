#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pbw/catalog.hpp"
#include "pbw/errors.hpp"
#include "pbw/parse.hpp"

namespace pbw::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string algebra;
  std::vector<std::string> exprs;
  std::string bracket;
  std::string derivation;
  std::string gamma;
  std::string purpose = "basic";
  std::vector<std::string> example_options;
  bool machine = false;
  std::uint64_t seed = 1;
  int budget = 50;
  int max_degree = 3;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  Document doc;
  Algebra alg;
};

Loaded load(const Options& o, bool validate = true) {
  Document doc = parse_document(slurp(o.algebra));
  Presentation p = presentation_from(doc);
  if (validate) validate_presentation(p, Purpose::basic).require();
  return {std::move(doc), Algebra(std::move(p))};
}

GeneratorBracket load_bracket(const Options& o, const Loaded& l) {
  if (!o.bracket.empty()) return parse_bracket_text(l.alg, slurp(o.bracket));
  if (l.doc.has_bracket) return bracket_from(l.doc, l.alg);
  throw UsageError("no bracket given (use --bracket)");
}

GammaDerivation load_derivation(const Options& o, const Loaded& l) {
  if (!o.derivation.empty()) return derivation_from(parse_document(slurp(o.derivation)), l.alg);
  if (l.doc.has_derivation) return derivation_from(l.doc, l.alg);
  throw UsageError("no derivation given (use --derivation)");
}

void print(std::ostream& out, std::ostream& err, const Presentation& p, const Element& f, bool machine) {
  if (machine) {
    out << format_element(p, f, OutputMode::machine);
    err << "terms=" << f.size() << "\n";
  } else {
    out << format_element(p, f, OutputMode::pretty) << "\n";
  }
}

void print_section(std::ostream& out, const Presentation& p, const std::string& name, const Element& f, bool machine) {
  if (machine) out << "[" << name << "]\n" << format_element(p, f, OutputMode::machine);
  else out << name << " = " << format_element(p, f, OutputMode::pretty) << "\n";
}

Element expr_at(const Options& o, const Algebra& alg, std::size_t k) {
  if (o.exprs.size() <= k) throw UsageError("missing expression argument");
  return parse_expression(alg, o.exprs[k]);
}

void need_exprs(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.exprs.size() < lo || o.exprs.size() > hi) throw UsageError("wrong number of expression arguments");
}

Purpose purpose_of(const std::string& s) {
  if (s == "basic") return Purpose::basic;
  if (s == "laurent") return Purpose::laurent;
  if (s == "poisson") return Purpose::poisson;
  throw UsageError("purpose must be basic, laurent or poisson");
}

int report_failure(std::ostream& out, const ValidationReport& rep, const Presentation& p, bool machine) {
  out << "invalid: " << rep.condition;
  if (!rep.indices.empty()) {
    out << " at (";
    for (std::size_t k = 0; k < rep.indices.size(); ++k) out << (k ? "," : "") << rep.indices[k];
    out << ")";
  }
  out << "\n";
  if (!rep.residual.is_zero()) print_section(out, p, "residual", rep.residual, machine);
  return 1;
}

int dispatch(const std::string& verb, const Options& o, std::ostream& out, std::ostream& err) {
  if (verb == "examples") {
    if (o.algebra == "list" || o.algebra.empty()) {
      need_exprs(o, 0, 0);
      for (const auto& k : catalog_keys()) {
        CatalogEntry e = build_example(k);
        out << k << "\t" << e.description << "\n";
      }
      return 0;
    }
    if (o.algebra != "show") throw UsageError("examples takes 'list' or 'show <key>'");
    need_exprs(o, 1, 1);
    ExampleOptions opts;
    for (const auto& kv : o.example_options) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--option expects key=value");
      opts[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    CatalogEntry e = build_example(o.exprs[0], opts);
    out << "# " << e.key << ": " << e.description << "\n";
    for (const auto& [k, v] : e.options) out << "# option " << k << " = " << v << "\n";
    out << "# laurent: " << (e.laurent ? "yes" : "no") << ", poisson: " << (e.poisson ? "yes" : "no") << "\n";
    out << format_presentation(e.presentation);
    return 0;
  }

  if (verb == "validate") {
    need_exprs(o, 0, 0);
    Loaded l = load(o, false);
    ValidationReport rep = validate_presentation(l.alg.presentation(), purpose_of(o.purpose));
    if (!rep) return report_failure(out, rep, l.alg.presentation(), o.machine);
    out << "valid (" << o.purpose << ")\n";
    return 0;
  }

  Loaded l = load(o);
  const Algebra& alg = l.alg;
  const Presentation& p = alg.presentation();
  std::mt19937_64 rng(o.seed);

  if (verb == "normalize") {
    need_exprs(o, 1, 1);
    print(out, err, p, expr_at(o, alg, 0), o.machine);
  } else if (verb == "mul") {
    need_exprs(o, 1, 64);
    Element acc = alg.one();
    for (std::size_t k = 0; k < o.exprs.size(); ++k) acc = alg.multiply(acc, expr_at(o, alg, k));
    print(out, err, p, acc, o.machine);
  } else if (verb == "commutator") {
    need_exprs(o, 2, 2);
    print(out, err, p, alg.commutator(expr_at(o, alg, 0), expr_at(o, alg, 1)), o.machine);
  } else if (verb == "bracket") {
    need_exprs(o, 2, 2);
    GeneratorBracket B = load_bracket(o, l);
    print(out, err, p, bracket_eval(B, expr_at(o, alg, 0), expr_at(o, alg, 1)), o.machine);
  } else if (verb == "classify") {
    need_exprs(o, 0, 0);
    GeneratorBracket B = load_bracket(o, l);
    try {
      ClassificationResult res = classify_bracket(B, rng);
      out << "xi = " << res.xi << "\n";
    } catch (const NotClassifiable& e) {
      out << "not classifiable at (" << e.i() << "," << e.j() << ")\n";
      err << e.what() << "\n";
      return 1;
    }
  } else if (verb == "verify-poisson") {
    need_exprs(o, 0, 0);
    GeneratorBracket B = load_bracket(o, l);
    PoissonReport rep = verify_poisson(B, rng, o.budget, o.max_degree);
    if (rep.ok) {
      out << "pass (" << rep.checked << " triples)\n";
      return 0;
    }
    out << "fail: " << rep.axiom << " (triple " << rep.checked << ")\n";
    print_section(out, p, "a", rep.a, o.machine);
    print_section(out, p, "b", rep.b, o.machine);
    print_section(out, p, "c", rep.c, o.machine);
    print_section(out, p, "residual", rep.residual, o.machine);
    return 1;
  } else if (verb == "check-derivation") {
    need_exprs(o, 0, 0);
    ValidationReport rep = check_derivation(alg, load_derivation(o, l));
    if (!rep) return report_failure(out, rep, p, o.machine);
    out << "valid\n";
  } else if (verb == "decompose-derivation") {
    need_exprs(o, 0, 0);
    GammaDerivation d = load_derivation(o, l);
    if (ValidationReport rep = check_derivation(alg, d); !rep) return report_failure(out, rep, p, o.machine);
    Decomposition dec = decompose_derivation(alg, d);
    print_section(out, p, "w", dec.w, o.machine);
    if (o.machine) out << "[lambda]\n";
    for (int j = 0; j < alg.n(); ++j) {
      if (o.machine) out << dec.lambdas[j] << "\n";
      else out << "lambda" << j + 1 << " = " << dec.lambdas[j] << "\n";
    }
  } else if (verb == "adjoint-preimage") {
    need_exprs(o, 1, 1);
    ToricAutomorphism g = ToricAutomorphism::identity(alg.n());
    if (!o.gamma.empty()) {
      std::vector<std::string> parts;
      std::stringstream ss(o.gamma);
      std::string item;
      while (std::getline(ss, item, ',')) parts.push_back(item);
      if (static_cast<int>(parts.size()) != alg.n()) throw UsageError("--gamma needs one scalar per generator");
      for (int k = 0; k < alg.n(); ++k) g.gammas[k] = parse_scalar(parts[k], p.params());
      validate_automorphism(p, g).require();
    }
    print(out, err, p, adjoint_preimage(alg, g, expr_at(o, alg, 0)), o.machine);
  } else if (verb == "localize") {
    need_exprs(o, 0, 0);
    bool with_bracket = !o.bracket.empty() || l.doc.has_bracket;
    GeneratorBracket B = with_bracket ? load_bracket(o, l) : GeneratorBracket(alg);
    GeneratorBracket ext = laurent_extend(B);
    out << format_presentation(ext.algebra().presentation());
    if (with_bracket) out << "\n" << format_bracket(ext);
  } else {
    throw UsageError("unknown command '" + verb + "'");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normal forms, derivations and Poisson brackets for quantum polynomial algebras", "pbw"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--machine", o.machine, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for sampled checks");

  auto file = [&](CLI::App* sub) { sub->add_option("algebra", o.algebra, "Presentation file")->required(); };
  auto exprs = [&](CLI::App* sub) { sub->add_option("exprs", o.exprs, "Expressions"); };
  auto bracket = [&](CLI::App* sub) { sub->add_option("--bracket", o.bracket, "Bracket file"); };
  auto derivation = [&](CLI::App* sub) { sub->add_option("--derivation", o.derivation, "Derivation file"); };

  for (auto [name, help] : std::vector<std::pair<const char*, const char*>>{
           {"normalize", "Normal form of an expression"},
           {"mul", "Normal form of a product"},
           {"commutator", "[a, b] = ab - ba"},
           {"bracket", "Evaluate {a, b} from a generator bracket table"},
           {"classify", "Find xi with {a,b} = xi[a,b]"},
           {"verify-poisson", "Sample the Poisson axioms"},
           {"check-derivation", "Check a gamma-derivation against the relations"},
           {"decompose-derivation", "Split a derivation into toric and inner parts"},
           {"adjoint-preimage", "Solve [ad_gamma w]x1 = v for w"},
           {"localize", "Invert x1 and carry a bracket along"},
           {"validate", "Validate a presentation for a purpose"},
           {"examples", "List or show catalog algebras"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    std::string verb = name;
    if (verb == "examples") {
      sub->add_option("action", o.algebra, "list | show");
      sub->add_option("key", o.exprs, "Catalog key");
      sub->add_option("--option,-o", o.example_options, "Builder option key=value");
      continue;
    }
    file(sub);
    if (verb == "normalize" || verb == "mul" || verb == "commutator" || verb == "bracket" || verb == "adjoint-preimage")
      exprs(sub);
    if (verb == "bracket" || verb == "classify" || verb == "verify-poisson" || verb == "localize") bracket(sub);
    if (verb == "check-derivation" || verb == "decompose-derivation") derivation(sub);
    if (verb == "verify-poisson") {
      sub->add_option("--budget", o.budget, "Triples to check")->check(CLI::PositiveNumber);
      sub->add_option("--max-degree", o.max_degree, "Degree bound for sampled elements")->check(CLI::NonNegativeNumber);
    }
    if (verb == "adjoint-preimage") sub->add_option("--gamma", o.gamma, "Comma-separated gamma_i");
    if (verb == "validate")
      sub->add_option("--purpose", o.purpose, "basic | laurent | poisson")->check(CLI::IsMember({"basic", "laurent", "poisson"}));
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  try {
    return dispatch(verb, o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnknownSymbol& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnknownExample& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidOptions& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pbw::cli
