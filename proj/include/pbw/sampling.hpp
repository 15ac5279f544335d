#pragma once

#include <random>
#include <string>
#include <vector>

#include "pbw/algebra.hpp"

namespace pbw {

/// Seeded random sources for property checks. All draws go through the
/// caller's engine so reports are reproducible.
struct SampleShape {
  int max_terms = 3;
  int max_degree = 3;  ///< bound on sum |a_i| per monomial
  bool negatives = true;  ///< allow negative exponents within the invertible block
  bool parametric = false;  ///< coefficients may involve the presentation parameters
};

/// Exponents are spread over the generators with sum |a_i| <= max_degree.
Monomial random_monomial(const Algebra& alg, std::mt19937_64& rng, int max_degree, bool negatives);

/// Nonzero small rational, or when params is nonempty a ratio of sparse
/// polynomials in them.
Scalar random_scalar(std::mt19937_64& rng, const std::vector<std::string>& params = {});

Element random_element(const Algebra& alg, std::mt19937_64& rng, const SampleShape& shape = {});

}  // namespace pbw
