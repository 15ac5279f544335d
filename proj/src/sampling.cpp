#include "pbw/sampling.hpp"

namespace pbw {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_poly(std::mt19937_64& rng, const std::vector<std::string>& params) {
  Scalar out;
  int terms = uniform(rng, 1, 2);
  for (int k = 0; k < terms; ++k) {
    Scalar t(uniform(rng, 1, 4) * (uniform(rng, 0, 1) ? 1 : -1));
    for (const auto& p : params)
      if (int e = uniform(rng, 0, 2) - 1; e > 0) t *= Scalar::param(p).pow(e);
    out += t;
  }
  return out.is_zero() ? Scalar(1) : out;
}

}  // namespace

Monomial random_monomial(const Algebra& alg, std::mt19937_64& rng, int max_degree, bool negatives) {
  Monomial m = Monomial::one(alg.n());
  if (alg.n() == 0) return m;
  int budget = uniform(rng, 0, max_degree);
  for (int s = 0; s < budget; ++s) {
    int k = uniform(rng, 0, alg.n() - 1);
    bool neg = negatives && k < alg.r() && uniform(rng, 0, 2) == 0;
    // Walking toward zero would waste budget; pick the direction by the current sign.
    if (m[k] < 0 || (m[k] == 0 && neg)) --m[k];
    else ++m[k];
  }
  return m;
}

Scalar random_scalar(std::mt19937_64& rng, const std::vector<std::string>& params) {
  if (params.empty()) {
    int num = uniform(rng, 1, 9) * (uniform(rng, 0, 1) ? 1 : -1);
    return Scalar(num) / Scalar(uniform(rng, 1, 5));
  }
  Scalar num = random_poly(rng, params);
  Scalar den = uniform(rng, 0, 1) ? random_poly(rng, params) : Scalar(uniform(rng, 1, 3));
  return num / den;
}

Element random_element(const Algebra& alg, std::mt19937_64& rng, const SampleShape& shape) {
  Element e(alg.n());
  int terms = uniform(rng, 1, std::max(1, shape.max_terms));
  static const std::vector<std::string> none;
  for (int k = 0; k < terms; ++k)
    e.add_term(random_monomial(alg, rng, shape.max_degree, shape.negatives),
               random_scalar(rng, shape.parametric ? alg.presentation().params() : none));
  return e;
}

}  // namespace pbw
