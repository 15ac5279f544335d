#include "pbw/derivations.hpp"

#include <functional>
#include <map>
#include <optional>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

std::string pos(std::vector<int> idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

void require_laurent_block(const Algebra& alg) {
  const Presentation& p = alg.presentation();
  if (p.r() < 1) throw ValidationFailure("x1 must be invertible (r >= 1)");
  for (int j = 1; j < p.n(); ++j)
    if (!p.is_pure(0, j)) throw ValidationFailure("p_1j must vanish at " + pos({1, j + 1}));
}

void require_arity(const Algebra& alg, const GammaDerivation& d) {
  if (static_cast<int>(d.gamma.gammas.size()) != alg.n() || static_cast<int>(d.u.size()) != alg.n())
    throw ValidationFailure("derivation must give gamma_i and u_i for every generator");
}

// c with x_1 X x_1^-1 = c X; requires p_1j = 0.
Scalar conjugation_factor(const Algebra& alg, const Monomial& x) {
  Element conj = alg.multiply(alg.multiply(alg.generator(0), Element::monomial(x)), alg.generator(0, -1));
  if (conj.size() != 1 || !(conj.terms().begin()->first == x))
    throw HypothesisViolation("x1 does not q-commute with the monomial");
  return conj.terms().begin()->second;
}

bool pure_first_power(const Monomial& m) {
  for (int k = 1; k < m.size(); ++k)
    if (m[k] != 0) return false;
  return true;
}

}  // namespace

bool ToricAutomorphism::is_identity() const {
  for (const auto& g : gammas)
    if (!g.is_one()) return false;
  return true;
}

Scalar ToricAutomorphism::factor(const Monomial& m) const {
  Scalar f(1);
  for (int k = 0; k < m.size(); ++k)
    if (m[k] != 0) f *= gammas.at(k).pow(m[k]);
  return f;
}

Element ToricAutomorphism::apply(const Element& f) const {
  Element out(f.arity());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c * factor(m));
  return out;
}

ValidationReport validate_automorphism(const Presentation& p, const ToricAutomorphism& g) {
  const int n = p.n();
  if (static_cast<int>(g.gammas.size()) != n) return ValidationReport::failure("gamma must have one entry per generator");
  for (int i = 0; i < n; ++i)
    if (g.gammas[i].is_zero()) return ValidationReport::failure("gamma_i must be nonzero", {i + 1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar gij = g.gammas[i] * g.gammas[j];
      if (!(p.c0(i, j) * (Scalar(1) - gij)).is_zero())
        return ValidationReport::failure("a_ij^(0)(1 - gamma_i gamma_j) must vanish", {i + 1, j + 1, 0});
      for (int t = 0; t < n; ++t)
        if (!(p.c(i, j, t) * (g.gammas[t] - gij)).is_zero())
          return ValidationReport::failure("a_ij^(t)(gamma_t - gamma_i gamma_j) must vanish", {i + 1, j + 1, t + 1});
    }
  return {};
}

Element apply_derivation(const Algebra& alg, const GammaDerivation& d, const Element& f) {
  require_arity(alg, d);
  const int n = alg.n();
  std::map<Monomial, Element, DeglexGreater> memo;
  std::vector<std::optional<Element>> du_inv(n);  // d(x_i^-1), filled lazily

  auto d_gen = [&](int k, int s) -> const Element& {
    if (s > 0) return d.u[k];
    if (!du_inv[k]) {
      Element inv = alg.generator(k, -1);
      du_inv[k] = alg.multiply(alg.multiply(inv, d.u[k]), inv) * (-d.gamma.gammas[k].inverse());
    }
    return *du_inv[k];
  };

  std::function<Element(const Monomial&)> d_mono = [&](const Monomial& m) -> Element {
    int k = m.first_index();
    if (k < 0) return alg.zero();
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    int s = m[k] > 0 ? 1 : -1;
    Monomial rest = m;
    rest[k] -= s;
    Element gk = alg.generator(k, s);
    Element out = alg.multiply(d_gen(k, s), Element::monomial(rest));
    out += alg.multiply(gk, d_mono(rest)) * d.gamma.gammas[k].pow(s);
    memo.emplace(m, out);
    return out;
  };

  Element out(n);
  for (const auto& [m, c] : f.terms()) out += d_mono(m) * c;
  return out;
}

Element inner_apply(const Algebra& alg, const ToricAutomorphism& g, const Element& u, const Element& a) {
  return alg.multiply(u, a) - alg.multiply(g.apply(a), u);
}

GammaDerivation inner_derivation(const Algebra& alg, const ToricAutomorphism& g, const Element& w) {
  GammaDerivation d{g, {}};
  for (int i = 0; i < alg.n(); ++i) d.u.push_back(inner_apply(alg, g, w, alg.generator(i)));
  return d;
}

ValidationReport check_derivation(const Algebra& alg, const GammaDerivation& d) {
  const Presentation& p = alg.presentation();
  const int n = p.n();
  if (auto rep = validate_automorphism(p, d.gamma); !rep) return rep;
  if (static_cast<int>(d.u.size()) != n) return ValidationReport::failure("u must have one entry per generator");
  for (int i = 0; i < n; ++i)
    for (const auto& [m, c] : d.u[i].terms())
      if (!alg.admissible(m)) return ValidationReport::failure("u_i has a negative exponent outside the invertible block", {i + 1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Element xi = alg.generator(i), xj = alg.generator(j);
      Element lhs = alg.multiply(d.u[j], xi) + alg.multiply(xj, d.u[i]) * d.gamma.gammas[j];
      Element res = lhs - apply_derivation(alg, d, alg.multiply(xj, xi));
      if (!res.is_zero()) return ValidationReport::failure("relation not respected", {i + 1, j + 1}, res);
    }
  for (int i = 0; i < p.r(); ++i) {
    Element xi = alg.generator(i), inv = alg.generator(i, -1);
    Element res = apply_derivation(alg, d, alg.multiply(xi, inv));
    Element left = alg.multiply(apply_derivation(alg, d, inv), xi) +
                   alg.multiply(inv, d.u[i]) * d.gamma.gammas[i].inverse();
    if (!res.is_zero() || !left.is_zero())
      return ValidationReport::failure("inverse relation not respected", {i + 1}, res.is_zero() ? left : res);
  }
  return {};
}

Element adjoint_preimage(const Algebra& alg, const ToricAutomorphism& g, const Element& v) {
  require_laurent_block(alg);
  if (static_cast<int>(g.gammas.size()) != alg.n()) throw ValidationFailure("gamma must have one entry per generator");
  const Scalar& g1 = g.gammas[0];
  Element inv = alg.generator(0, -1);
  Element w = alg.zero();
  for (const auto& [x, rho] : v.terms()) {
    if (!alg.admissible(x)) throw NotInvertible("negative exponent outside the invertible block");
    Scalar unit = Scalar(1) - g1 * conjugation_factor(alg, x);
    if (unit.is_zero()) {
      std::string why = g1.is_one() && pure_first_power(x) ? "gamma_1 = 1 and the monomial is a pure x1 power"
                                                           : "1 - gamma_1 c_X vanishes";
      std::string exps;
      for (int k = 0; k < x.size(); ++k) exps += (k ? " " : "") + std::to_string(x[k]);
      throw HypothesisViolation(why + " at monomial [" + exps + "]");
    }
    w += alg.multiply(Element::monomial(x), inv) * (rho / unit);
  }
  return w;
}

Decomposition decompose_derivation(const Algebra& alg, const GammaDerivation& d) {
  require_laurent_block(alg);
  require_arity(alg, d);
  const int n = alg.n();
  if (auto rep = validate_automorphism(alg.presentation(), d.gamma); !rep) rep.require();
  const ToricAutomorphism& g = d.gamma;
  Decomposition out{alg.zero(), std::vector<Scalar>(n)};

  if (!g.gammas[0].is_one()) {
    out.w = adjoint_preimage(alg, g, d.u[0]);
  } else if (g.is_identity()) {
    Element rest = alg.zero();
    for (const auto& [m, c] : d.u[0].terms())
      if (!pure_first_power(m)) rest.add_term(m, c);
    try {
      out.w = adjoint_preimage(alg, g, rest);
    } catch (const HypothesisViolation& e) {
      throw DecompositionFailure(std::string("cannot solve the x1 component: ") + e.what());
    }
    if (n >= 2) {
      Element bar2 = d.u[1] - inner_apply(alg, g, out.w, alg.generator(1));
      Element corr = alg.zero();
      for (const auto& [m, rho] : bar2.terms()) {
        bool shape = m[1] == 1 && m[0] != 0;
        for (int k = 2; k < n && shape; ++k) shape = m[k] == 0;
        if (!shape) continue;
        Monomial xk = Monomial::generator(n, 0, m[0]);
        Element swapped = alg.multiply(alg.generator(1), Element::monomial(xk));
        Scalar ck = swapped.coefficient(m);
        if (swapped.size() != 1 || (Scalar(1) - ck).is_zero())
          throw DecompositionFailure("x2 does not q-commute with a power of x1 by a factor other than 1");
        corr.add_term(xk, rho / (Scalar(1) - ck));
      }
      out.w += corr;
    }
    for (int j = 0; j < n; ++j) {
      Element t = d.u[j] - inner_apply(alg, g, out.w, alg.generator(j));
      out.lambdas[j] = t.coefficient(Monomial::generator(n, j));
    }
  } else {
    throw HypothesisViolation("gamma_1 = 1 but gamma is not the identity");
  }

  for (int j = 0; j < n; ++j) {
    Element xj = alg.generator(j);
    Element res = d.u[j] - xj * out.lambdas[j] - inner_apply(alg, g, out.w, xj);
    if (!res.is_zero()) {
      std::string text;
      for (const auto& [m, c] : res.terms()) {
        text += " " + c.to_string() + "*[";
        for (int k = 0; k < n; ++k) text += (k ? " " : "") + std::to_string(m[k]);
        text += "]";
      }
      throw DecompositionFailure("residual at u_" + std::to_string(j + 1) + ":" + text);
    }
  }
  return out;
}

}  // namespace pbw
