// Acceptance run: one PASS/FAIL line per criterion. All checks are exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "golden_cases.hpp"
#include "support.hpp"

using namespace pbw;
using namespace pbw::test;

namespace {

constexpr double kAc1Seconds = 30.0;
constexpr double kAc2Seconds = 60.0;
constexpr int kAc1Monomials = 200;
constexpr int kAc1MaxExponent = 4;
constexpr int kAc2Triples = 200;
constexpr int kAc3Elements = 100;
constexpr int kAc4Samples = 50;
constexpr int kAc5Derivations = 30;
constexpr int kAc6Derivations = 30;
constexpr int kAc7Scalars = 10;
constexpr int kAc8Triples = 50;
constexpr int kAc8PowerLaws = 100;
constexpr int kAc9Pairs = 100;
constexpr int kAc10RoundTrips = 200;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Named {
  std::string name;
  Presentation p;
};

std::vector<Named> catalog() {
  std::vector<Named> out;
  for (const auto& k : catalog_keys()) out.push_back({k, build_example(k).presentation});
  return out;
}

/// Laurent-eligible catalog entries with x1 inverted.
std::vector<Named> localized() {
  std::vector<Named> out;
  for (const auto& k : catalog_keys()) {
    CatalogEntry e = build_example(k);
    if (!e.laurent) continue;
    e.presentation.set_r(1);
    out.push_back({k + "[x1^-1]", e.presentation});
  }
  return out;
}

std::vector<Named> poisson_eligible() {
  std::vector<Named> out;
  for (const auto& k : catalog_keys())
    if (CatalogEntry e = build_example(k); e.poisson) out.push_back({k, e.presentation});
  return out;
}

ToricAutomorphism random_toric(const Algebra& alg, std::mt19937_64& rng) {
  for (;;) {
    ToricAutomorphism g;
    for (int i = 0; i < alg.n(); ++i) g.gammas.push_back(random_scalar(rng));
    if (g.gammas[0] != Scalar(1) && validate_automorphism(alg.presentation(), g).ok) return g;
  }
}

Outcome ac1() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(101);
  std::vector<Named> algebras;
  for (auto& a : catalog())
    if (a.p.n() <= 4) algebras.push_back(a);
  for (auto& a : localized())
    if (a.p.n() <= 4) algebras.push_back(a);
  int checked = 0;
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    for (int s = 0; s < kAc1Monomials; ++s) {
      std::vector<int> e(alg.n());
      for (int k = 0; k < alg.n(); ++k)
        e[k] = std::uniform_int_distribution<int>(k < alg.r() ? -kAc1MaxExponent : 0, kAc1MaxExponent)(rng);
      Monomial a(e);
      int deg = a.degree();
      for (int i = 0; i < alg.n(); ++i) {
        Element r = alg.right_mul_generator(Element::monomial(a, Scalar(1)), i, 1);
        Scalar expect(1);
        for (int j = i + 1; j < alg.n(); ++j) expect *= p.q(i, j).pow(e[j]);
        Monomial target = a;
        ++target[i];
        auto [lm, lc] = leading_term(r);
        Element rest = r - Element::monomial(lm, lc);
        if (!(lm == target) || lc != expect)
          o.fail(name + ": leading term of " + format_monomial(p, a) + "*x" + std::to_string(i + 1));
        else if (!rest.is_zero() && rest.degree() >= deg + 1)
          o.fail(name + ": remainder degree for " + format_monomial(p, a) + "*x" + std::to_string(i + 1));
        ++checked;
      }
    }
  }
  double t = seconds_since(t0);
  if (t >= kAc1Seconds) o.fail("took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(checked) + " products over " + std::to_string(algebras.size()) + " algebras in " +
                       std::to_string(t) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(102);
  auto algebras = catalog();
  for (auto& a : localized()) algebras.push_back(a);
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    for (int k = 0; k < kAc2Triples; ++k) {
      Element a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
      if (alg.multiply(alg.multiply(a, b), c) != alg.multiply(a, alg.multiply(b, c))) {
        o.fail(name + ": triple " + std::to_string(k));
        break;
      }
    }
  }
  double t = seconds_since(t0);
  if (t >= kAc2Seconds) o.fail("took " + std::to_string(t) + " s");
  if (o.ok)
    o.detail = std::to_string(kAc2Triples) + " triples x " + std::to_string(algebras.size()) + " algebras in " +
               std::to_string(t) + " s";
  return o;
}

Outcome ac3() {
  Outcome o;
  std::mt19937_64 rng(103);
  auto algebras = localized();
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    Element x = alg.generator(0), xi = alg.generator(0, -1);
    if (alg.multiply(x, xi) != alg.one() || alg.multiply(xi, x) != alg.one()) o.fail(name + ": x1 x1^-1 != 1");
    for (int k = 0; k < kAc3Elements; ++k) {
      Element f = random_element(alg, rng);
      bool good = alg.multiply(alg.multiply(f, x), xi) == f && alg.multiply(alg.multiply(f, xi), x) == f &&
                  alg.multiply(x, alg.multiply(xi, f)) == f && alg.multiply(xi, alg.multiply(x, f)) == f;
      for (int i = 1; i < alg.n() && good; ++i)
        good = alg.multiply(alg.multiply(f, alg.generator(i)), xi) == alg.multiply(f, alg.multiply(alg.generator(i), xi));
      if (!good) {
        o.fail(name + ": element " + std::to_string(k));
        break;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(kAc3Elements) + " elements x " + std::to_string(algebras.size()) + " algebras";
  return o;
}

/// Keeps the terms rho X of f with 1 - gamma_1 c_X invertible, where
/// x1 X x1^-1 = c_X X is computed by multiplication.
Element admissible_part(const Algebra& alg, const ToricAutomorphism& g, const Element& f) {
  Element out = alg.zero();
  for (const auto& [m, c] : f.terms()) {
    Element conj = alg.multiply(alg.multiply(alg.generator(0), alg.monomial(m)), alg.generator(0, -1));
    Scalar cx = conj.coefficient(m);
    if (Scalar(1) - g.gammas[0] * cx != Scalar(0)) out.add_term(m, c);
  }
  return out;
}

Outcome ac4() {
  Outcome o;
  std::mt19937_64 rng(104);
  int checked = 0;
  for (const auto& [name, p] : localized()) {
    Algebra alg(p);
    for (const auto& g : {ToricAutomorphism::identity(alg.n()), random_toric(alg, rng)}) {
      int got = 0;
      while (got < kAc4Samples) {
        Element v = admissible_part(alg, g, random_element(alg, rng, {4, 4, true, false}));
        if (v.is_zero()) continue;
        ++got;
        ++checked;
        if (inner_apply(alg, g, adjoint_preimage(alg, g, v), alg.generator(0)) != v) {
          o.fail(name + ": v = " + format_element(p, v, OutputMode::pretty));
          break;
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " preimages, gamma = id and random toric";
  return o;
}

bool rebuilds(const Algebra& alg, const GammaDerivation& d, const Decomposition& dec) {
  for (int j = 0; j < alg.n(); ++j)
    if (d.u[j] != alg.generator(j) * dec.lambdas[j] + inner_apply(alg, d.gamma, dec.w, alg.generator(j))) return false;
  return true;
}

Outcome ac5() {
  Outcome o;
  std::mt19937_64 rng(105);
  auto algebras = localized();
  int per = (kAc5Derivations + static_cast<int>(algebras.size()) - 1) / static_cast<int>(algebras.size());
  int done = 0;
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    auto id = ToricAutomorphism::identity(alg.n());
    for (int k = 0; k < per && done < kAc5Derivations; ++k, ++done) {
      Element z = random_element(alg, rng);
      std::vector<Scalar> lambdas;
      for (int i = 0; i < alg.n(); ++i) lambdas.push_back(random_scalar(rng));
      // [ad z]x_i = z x_i - x_i z, and the literal commutator x_i z - z x_i
      GammaDerivation ad{id, {}}, literal{id, {}};
      for (int i = 0; i < alg.n(); ++i) {
        Element x = alg.generator(i);
        ad.u.push_back(x * lambdas[i] + alg.commutator(z, x));
        literal.u.push_back(x * lambdas[i] + alg.commutator(x, z));
      }
      Decomposition a = decompose_derivation(alg, ad);
      Decomposition b = decompose_derivation(alg, literal);
      if (a.lambdas != lambdas || b.lambdas != lambdas) o.fail(name + ": lambdas not recovered");
      else if (!rebuilds(alg, ad, a) || !rebuilds(alg, literal, b)) o.fail(name + ": nonzero residual");
      else if (!(a.w - z).as_scalar()) o.fail(name + ": w - z not a scalar");
      else if (!(b.w + z).as_scalar()) o.fail(name + ": literal form, w + z not a scalar");
    }
  }
  if (o.ok) o.detail = std::to_string(done) + " derivations; w - z scalar for [ad z]x_i, w + z scalar for x_i z - z x_i";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(106);
  auto algebras = localized();
  int per = (kAc6Derivations + static_cast<int>(algebras.size()) - 1) / static_cast<int>(algebras.size());
  int done = 0;
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    for (int k = 0; k < per && done < kAc6Derivations; ++k, ++done) {
      ToricAutomorphism g = random_toric(alg, rng);
      GammaDerivation d = inner_derivation(alg, g, random_element(alg, rng));
      Decomposition dec = decompose_derivation(alg, d);
      for (const auto& l : dec.lambdas)
        if (!l.is_zero()) o.fail(name + ": nonzero lambda");
      if (!rebuilds(alg, d, dec)) o.fail(name + ": reconstruction differs");
    }
  }
  if (o.ok) o.detail = std::to_string(done) + " inner gamma-derivations with gamma_1 != 1";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(107);
  auto algebras = poisson_eligible();
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    for (int k = 0; k < kAc7Scalars; ++k) {
      Scalar xi = random_scalar(rng, k % 2 ? p.params() : std::vector<std::string>{});
      if (classify_bracket(GeneratorBracket::commutator_multiple(alg, xi), rng).xi != xi)
        o.fail(name + ": xi = " + xi.to_string());
    }
  }
  Algebra sq(quantum_space(3));
  GeneratorBracket bad(sq);
  bad.set(0, 1, sq.commutator(sq.generator(0), sq.generator(1)));
  bad.set(0, 2, sq.commutator(sq.generator(0), sq.generator(2)) * Scalar(2));
  bad.set(1, 2, sq.commutator(sq.generator(1), sq.generator(2)));
  try {
    classify_bracket(bad, rng);
    o.fail("inconsistent table was classified");
  } catch (const NotClassifiable& e) {
    if (e.i() != 1 || e.j() != 3) o.fail("inconsistent table rejected at the wrong pair");
  }
  if (o.ok)
    o.detail = std::to_string(kAc7Scalars) + " scalars x " + std::to_string(algebras.size()) +
               " algebras; inconsistent table rejected at (1,3)";
  return o;
}

Outcome ac8() {
  Outcome o;
  std::mt19937_64 rng(108);
  auto algebras = poisson_eligible();
  for (const auto& [name, p] : algebras) {
    Algebra alg(p);
    auto B = GeneratorBracket::commutator_multiple(alg, random_scalar(rng, p.params()));
    PoissonReport rep = verify_poisson(B, rng, kAc8Triples);
    if (!rep.ok || rep.checked < kAc8Triples) o.fail(name + ": " + rep.axiom);
    std::uniform_int_distribution<int> exp(1, 4);
    for (int k = 0; k < kAc8PowerLaws; ++k) {
      Element a = random_element(alg, rng, {2, 2, false, false});
      if (!bracket_eval(B, alg.power(a, exp(rng)), alg.power(a, exp(rng))).is_zero()) {
        o.fail(name + ": {a^l, a^r} != 0");
        break;
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(kAc8Triples) + " triples and " + std::to_string(kAc8PowerLaws) + " power laws x " +
               std::to_string(algebras.size()) + " algebras";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::mt19937_64 rng(109);
  for (const auto& [name, p] : std::vector<Named>{{"quantum plane", quantum_plane()}, {"S_q n=3", quantum_space(3)}}) {
    Algebra alg(p);
    auto B = GeneratorBracket::commutator_multiple(alg, P("xi"));
    GeneratorBracket ext = laurent_extend(B);
    if (ext.algebra().r() != 1) o.fail(name + ": extension is not localized");
    for (int k = 0; k < kAc9Pairs; ++k) {
      Element a = random_element(alg, rng, {3, 3, false, false}), b = random_element(alg, rng, {3, 3, false, false});
      if (bracket_eval(ext, a, b) != bracket_eval(B, a, b)) {
        o.fail(name + ": pair " + std::to_string(k));
        break;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(kAc9Pairs) + " pairs on each of 2 algebras";
  return o;
}

Outcome ac10() {
  Outcome o;
  for (const auto& c : golden_cases()) {
    GoldenRun r = run_golden(c, PBW_TEST_DIR);
    GoldenRun again = run_golden(c, PBW_TEST_DIR);
    if (r.expected.empty()) o.fail(c.name + ": golden file missing");
    else if (r.code != c.exit_code || r.out != r.expected) o.fail(c.name + ": output differs from golden");
    else if (again.out != r.out) o.fail(c.name + ": nondeterministic");
  }
  std::mt19937_64 rng(110);
  std::vector<Named> algebras = catalog();
  for (auto& a : localized()) algebras.push_back(a);
  for (int k = 0; k < kAc10RoundTrips; ++k) {
    const auto& [name, p] = algebras[k % algebras.size()];
    Algebra alg(p);
    Element f = random_element(alg, rng, {4, 4, true, true});
    if (parse_expression(alg, format_element(p, f, OutputMode::pretty)) != f ||
        parse_machine(alg, format_element(p, f, OutputMode::machine)) != f) {
      o.fail(name + ": round trip of " + format_element(p, f, OutputMode::pretty));
      break;
    }
  }
  if (o.ok)
    o.detail = std::to_string(golden_cases().size()) + " golden commands, " + std::to_string(kAc10RoundTrips) +
               " round trips";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 leading coefficient of x^a x_i", ac1},
      {"AC2 associativity", ac2},
      {"AC3 Laurent consistency", ac3},
      {"AC4 adjoint preimage", ac4},
      {"AC5 decomposition round trip", ac5},
      {"AC6 gamma_1 != 1 derivations are inner", ac6},
      {"AC7 bracket classification", ac7},
      {"AC8 Poisson axioms", ac8},
      {"AC9 restriction of the extended bracket", ac9},
      {"AC10 CLI golden output and round trip", ac10},
  };
  int failed = 0;
  for (const auto& [label, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", label, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
