#pragma once

#include <random>

#include "pbw/algebra.hpp"
#include "pbw/catalog.hpp"
#include "pbw/derivations.hpp"
#include "pbw/errors.hpp"
#include "pbw/parse.hpp"
#include "pbw/poisson.hpp"
#include "pbw/sampling.hpp"

namespace pbw::test {

inline Scalar P(const char* name) { return Scalar::param(name); }

inline Presentation quantum_plane(int r = 0) {
  Presentation p(2, r, {"x1", "x2"}, {"q"});
  p.set_q(0, 1, P("q"));
  return p;
}

/// x_i x_j = q_ij x_j x_i with independent q_ij.
inline Presentation quantum_space(int n, int r = 0) {
  Presentation p = build_example("quantum_space", {{"n", std::to_string(n)}}).presentation;
  p.set_r(r);
  return p;
}

/// xy - gamma yx = z, yz = alpha zy, zx = alpha xz.
inline Presentation skew3d() { return build_example("skew3d").presentation; }

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

inline Element E(const Algebra& alg, const char* src) { return parse_expression(alg, src); }

}  // namespace pbw::test
