#include "pbw/poisson.hpp"

#include <map>
#include <mutex>

#include "pbw/errors.hpp"
#include "pbw/sampling.hpp"

namespace pbw {

namespace {

struct PairLess {
  bool operator()(const std::pair<Monomial, Monomial>& a, const std::pair<Monomial, Monomial>& b) const {
    if (a.first.exps() != b.first.exps()) return a.first.exps() < b.first.exps();
    return a.second.exps() < b.second.exps();
  }
};

using PairMemo = std::map<std::pair<Monomial, Monomial>, Element, PairLess>;

}  // namespace

struct GeneratorBracket::Memo {
  std::mutex mu;
  PairMemo pairs;
};

GeneratorBracket::GeneratorBracket(Algebra alg)
    : alg_(std::move(alg)),
      table_(static_cast<std::size_t>(alg_.n()) * alg_.n(), Element(alg_.n())),
      memo_(std::make_shared<Memo>()) {}

GeneratorBracket GeneratorBracket::commutator_multiple(const Algebra& alg, const Scalar& xi) {
  GeneratorBracket B(alg);
  for (int i = 0; i < alg.n(); ++i)
    for (int j = i + 1; j < alg.n(); ++j) B.set(i, j, alg.commutator(alg.generator(i), alg.generator(j)) * xi);
  return B;
}

Element GeneratorBracket::entry(int i, int j) const {
  if (i == j) return alg_.zero();
  if (i < j) return table_[static_cast<std::size_t>(i) * alg_.n() + j];
  return -table_[static_cast<std::size_t>(j) * alg_.n() + i];
}

void GeneratorBracket::set(int i, int j, Element b) {
  if (!(0 <= i && i < j && j < alg_.n())) throw std::out_of_range("bracket entry needs 0 <= i < j < n");
  for (const auto& [m, c] : b.terms())
    if (!alg_.admissible(m)) throw NotInvertible("bracket entry has a negative exponent outside the invertible block");
  if (b.is_zero()) b = alg_.zero();
  table_[static_cast<std::size_t>(i) * alg_.n() + j] = std::move(b);
  memo_ = std::make_shared<Memo>();
}

GeneratorBracket GeneratorBracket::scaled(const Scalar& c) const {
  GeneratorBracket B(alg_);
  for (int i = 0; i < alg_.n(); ++i)
    for (int j = i + 1; j < alg_.n(); ++j) B.set(i, j, entry(i, j) * c);
  return B;
}

GeneratorBracket GeneratorBracket::rebased(Algebra alg) const {
  if (alg.n() != alg_.n()) throw Error("rebased bracket needs the same generator count");
  GeneratorBracket B(std::move(alg));
  B.table_ = table_;
  return B;
}

namespace {

struct Evaluator {
  const GeneratorBracket& B;
  const Algebra& alg;
  PairMemo& memo;
  std::mutex& mu;

  Element gen(int k, int s, int l, int t) {
    if (s < 0) {
      Element inv = alg.generator(k, -1);
      return -alg.multiply(alg.multiply(inv, gen(k, 1, l, t)), inv);
    }
    if (t < 0) {
      Element inv = alg.generator(l, -1);
      return -alg.multiply(alg.multiply(inv, gen(k, 1, l, 1)), inv);
    }
    return B.entry(k, l);
  }

  // {x_k^s, Y}: peel Y's leftmost factor h, {g, hY'} = {g,h}Y' + h{g,Y'}.
  Element left_gen(int k, int s, const Monomial& y) {
    int l = y.first_index();
    if (l < 0) return alg.zero();
    int t = y[l] > 0 ? 1 : -1;
    Monomial rest = y;
    rest[l] -= t;
    Element out = alg.multiply(gen(k, s, l, t), Element::monomial(rest));
    out += alg.multiply(alg.generator(l, t), left_gen(k, s, rest));
    return out;
  }

  // {gX', Y} = {g,Y}X' + g{X',Y}.
  Element mono(const Monomial& x, const Monomial& y) {
    int k = x.first_index();
    if (k < 0 || y.is_one()) return alg.zero();
    auto key = std::make_pair(x, y);
    {
      std::lock_guard lock(mu);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    int s = x[k] > 0 ? 1 : -1;
    Monomial rest = x;
    rest[k] -= s;
    Element out = alg.multiply(left_gen(k, s, y), Element::monomial(rest));
    out += alg.multiply(alg.generator(k, s), mono(rest, y));
    std::lock_guard lock(mu);
    memo.emplace(std::move(key), out);
    return out;
  }
};

Element leibniz_residual(const GeneratorBracket& B, const Element& a, const Element& b, const Element& c) {
  const Algebra& alg = B.algebra();
  return bracket_eval(B, alg.multiply(a, b), c) - alg.multiply(bracket_eval(B, a, c), b) -
         alg.multiply(a, bracket_eval(B, b, c));
}

bool check_triple(const GeneratorBracket& B, const Element& a, const Element& b, const Element& c, PoissonReport& rep) {
  ++rep.checked;
  auto fail = [&](const char* axiom, Element res) {
    rep = PoissonReport{false, axiom, a, b, c, std::move(res), rep.checked};
    return false;
  };
  if (Element r = bracket_eval(B, a, b) + bracket_eval(B, b, a); !r.is_zero()) return fail("antisymmetry", r);
  if (Element r = leibniz_residual(B, a, b, c); !r.is_zero()) return fail("leibniz", r);
  Element jac = bracket_eval(B, a, bracket_eval(B, b, c)) + bracket_eval(B, b, bracket_eval(B, c, a)) +
                bracket_eval(B, c, bracket_eval(B, a, b));
  if (!jac.is_zero()) return fail("jacobi", jac);
  return true;
}

}  // namespace

Element bracket_eval(const GeneratorBracket& B, const Element& a, const Element& b) {
  const Algebra& alg = B.alg_;
  auto memo = B.memo_;
  Evaluator ev{B, alg, memo->pairs, memo->mu};
  Element out(alg.n());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      if (x.is_one() || y.is_one()) continue;
      out += ev.mono(x, y) * (cx * cy);
    }
  return out;
}

PoissonReport verify_poisson(const GeneratorBracket& B, std::mt19937_64& rng, int budget, int max_degree) {
  const Algebra& alg = B.algebra();
  const int n = alg.n();
  PoissonReport rep;
  rep.a = rep.b = rep.c = rep.residual = alg.zero();
  std::vector<Element> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(alg.generator(i));
    if (i < alg.r()) gens.push_back(alg.generator(i, -1));
  }
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        if (rep.checked >= budget) return rep;
        if (!check_triple(B, a, b, c, rep)) return rep;
      }
  SampleShape shape{2, max_degree, true, false};
  while (rep.checked < budget) {
    Element a = random_element(alg, rng, shape), b = random_element(alg, rng, shape), c = random_element(alg, rng, shape);
    if (!check_triple(B, a, b, c, rep)) return rep;
  }
  return rep;
}

ClassificationResult classify_bracket(const GeneratorBracket& B, std::mt19937_64& rng, int samples) {
  const Algebra& alg = B.algebra();
  const Presentation& p = alg.presentation();
  const int n = alg.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.q(i, j).is_one())
        throw ValidationFailure("classification needs q_ij != 1 at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
  ClassificationResult out;
  bool found = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Element c = alg.commutator(alg.generator(i), alg.generator(j));
      Element b = B.entry(i, j);
      if (c.is_zero()) {
        if (!b.is_zero()) throw NotClassifiable(i + 1, j + 1, "nonzero bracket on a commuting pair");
        continue;
      }
      if (!found) {
        auto [m, lc] = leading_term(c);
        out.xi = b.coefficient(m) / lc;
        found = true;
      }
      if (b != c * out.xi) {
        throw NotClassifiable(i + 1, j + 1, out.certified_pairs.empty()
                                                ? "bracket is not a scalar multiple of the commutator"
                                                : "pair needs a different multiple xi = " + out.xi.to_string());
      }
      out.certified_pairs.emplace_back(i + 1, j + 1);
    }
  if (!found) throw AllCommutatorsZero();
  SampleShape shape{2, 3, true, false};
  for (int k = 0; k < samples; ++k) {
    Element a = random_element(alg, rng, shape), b = random_element(alg, rng, shape);
    if (bracket_eval(B, a, b) != alg.commutator(a, b) * out.xi)
      throw Error("spot check of {a,b} = xi[a,b] failed on a sampled pair");
  }
  return out;
}

GeneratorBracket laurent_extend(const GeneratorBracket& B) {
  const Presentation& p = B.algebra().presentation();
  if (p.r() != 0) throw ValidationFailure("localization expects r = 0");
  validate_presentation(p, Purpose::laurent).require();
  Presentation local = p;
  local.set_r(1);
  validate_presentation(local, Purpose::basic).require();
  return B.rebased(Algebra(std::move(local)));
}

}  // namespace pbw
