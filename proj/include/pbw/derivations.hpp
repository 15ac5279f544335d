#pragma once

#include <vector>

#include "pbw/algebra.hpp"

namespace pbw {

/// gamma(x_i) = gamma_i x_i, fixing scalars.
struct ToricAutomorphism {
  std::vector<Scalar> gammas;

  static ToricAutomorphism identity(int n) { return {std::vector<Scalar>(n, Scalar(1))}; }
  bool is_identity() const;
  /// prod gamma_i^{m_i}
  Scalar factor(const Monomial& m) const;
  Element apply(const Element& f) const;
};

/// Checks nonzero gammas and a_ij^(t)(gamma_t - gamma_i gamma_j) = 0,
/// a_ij^(0)(1 - gamma_i gamma_j) = 0.
ValidationReport validate_automorphism(const Presentation& p, const ToricAutomorphism& g);

/// A gamma-derivation given by its generator images u_i = d(x_i).
struct GammaDerivation {
  ToricAutomorphism gamma;
  std::vector<Element> u;
};

/// d(f) via the twisted Leibniz rule d(ab) = d(a)b + gamma(a)d(b),
/// splitting off the leftmost generator factor of each monomial.
Element apply_derivation(const Algebra& alg, const GammaDerivation& d, const Element& f);

/// [ad_gamma u]a = ua - gamma(a)u
Element inner_apply(const Algebra& alg, const ToricAutomorphism& g, const Element& u, const Element& a);

/// The derivation with u_i = [ad_gamma w]x_i.
GammaDerivation inner_derivation(const Algebra& alg, const ToricAutomorphism& g, const Element& w);

/// Each relation x_j x_i = q_ij x_i x_j + p_ij must be respected by d, and
/// d(x_i x_i^-1) = d(x_i^-1 x_i) = 0 for invertible x_i. A failure carries
/// the pair and the residual.
ValidationReport check_derivation(const Algebra& alg, const GammaDerivation& d);

/// w with [ad_gamma w]x_1 = v, built term by term as
/// (1 - gamma_1 c_X)^-1 rho X x_1^-1 where x_1 X x_1^-1 = c_X X.
Element adjoint_preimage(const Algebra& alg, const ToricAutomorphism& g, const Element& v);

struct Decomposition {
  Element w;
  std::vector<Scalar> lambdas;
};

/// gamma = id: u_j = lambda_j x_j + [ad w]x_j. gamma_1 != 1: lambda = 0 and
/// u_j = [ad_gamma w]x_j. Throws DecompositionFailure when the rebuilt
/// derivation differs from d.
Decomposition decompose_derivation(const Algebra& alg, const GammaDerivation& d);

}  // namespace pbw
