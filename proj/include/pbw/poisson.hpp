#pragma once

#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "pbw/algebra.hpp"

namespace pbw {

/// Table B_ij = {x_i, x_j} for i < j; {x_j, x_i} = -B_ij and {x_i, x_i} = 0.
class GeneratorBracket {
 public:
  explicit GeneratorBracket(Algebra alg);
  /// B = xi [.,.] on generators.
  static GeneratorBracket commutator_multiple(const Algebra& alg, const Scalar& xi);

  const Algebra& algebra() const { return alg_; }
  /// {x_i, x_j} for any pair.
  Element entry(int i, int j) const;
  void set(int i, int j, Element b);
  GeneratorBracket scaled(const Scalar& c) const;
  /// Same table over another presentation with the same generators.
  GeneratorBracket rebased(Algebra alg) const;

 private:
  friend Element bracket_eval(const GeneratorBracket&, const Element&, const Element&);
  struct Memo;
  Algebra alg_;
  std::vector<Element> table_;  // n*n, row i < column j
  std::shared_ptr<Memo> memo_;
};

/// Bilinear extension by the Leibniz rule in both slots, peeling leftmost
/// generator factors; {x^-1, s} = -x^-1 {x, s} x^-1.
Element bracket_eval(const GeneratorBracket& B, const Element& a, const Element& b);

struct PoissonReport {
  bool ok = true;
  std::string axiom;  ///< "antisymmetry", "leibniz" or "jacobi" on failure
  Element a, b, c;  ///< the counterexample triple
  Element residual;
  int checked = 0;  ///< triples examined
};

/// Generator triples first, then random triples until `budget` triples
/// have been examined. Stops at the first counterexample.
PoissonReport verify_poisson(const GeneratorBracket& B, std::mt19937_64& rng, int budget = 50, int max_degree = 3);

struct ClassificationResult {
  Scalar xi;
  std::vector<std::pair<int, int>> certified_pairs;  ///< 1-based
};

/// Finds xi with B_ij = xi [x_i, x_j] for every pair, then spot-checks
/// bracket_eval(a, b) = xi [a, b] on `samples` random pairs.
ClassificationResult classify_bracket(const GeneratorBracket& B, std::mt19937_64& rng, int samples = 10);

/// Localization at the powers of x_1: same relations with r = 1 and the
/// same generator table.
GeneratorBracket laurent_extend(const GeneratorBracket& B);

}  // namespace pbw
