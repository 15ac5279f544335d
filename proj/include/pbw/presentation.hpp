#pragma once

#include <string>
#include <vector>

#include "pbw/element.hpp"
#include "pbw/scalar.hpp"

namespace pbw {

/// Generators x_1..x_n (0-based here) of which the first r are invertible,
/// with relations x_j x_i = q_ij x_i x_j + a_ij^(0) + sum_t a_ij^(t) x_t
/// for i < j. Pairs never set commute (q = 1, no constants).
class Presentation {
 public:
  Presentation() = default;
  Presentation(int n, int r, std::vector<std::string> gen_names, std::vector<std::string> params);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<std::string>& gen_names() const { return gens_; }
  const std::vector<std::string>& params() const { return params_; }

  const Scalar& q(int i, int j) const { return q_[pair(i, j)]; }
  const Scalar& c0(int i, int j) const { return c0_[pair(i, j)]; }
  const Scalar& c(int i, int j, int t) const { return c_[pair(i, j) * n_ + t]; }
  void set_q(int i, int j, Scalar v) { q_[pair(i, j)] = std::move(v); }
  void set_c0(int i, int j, Scalar v) { c0_[pair(i, j)] = std::move(v); }
  void set_c(int i, int j, int t, Scalar v) { c_[pair(i, j) * n_ + t] = std::move(v); }
  void set_r(int r) { r_ = r; }

  /// p_ij = a_ij^(0) + sum_t a_ij^(t) x_t as an element.
  Element lower_part(int i, int j) const;
  /// True when the (i,j) relation has no constant or linear terms.
  bool is_pure(int i, int j) const;
  /// Every generator name followed by every parameter name must be unique.
  int generator_index(const std::string& name) const;

  bool operator==(const Presentation& o) const;

 private:
  std::size_t pair(int i, int j) const;
  int n_ = 0;
  int r_ = 0;
  std::vector<std::string> gens_;
  std::vector<std::string> params_;
  std::vector<Scalar> q_;
  std::vector<Scalar> c0_;
  std::vector<Scalar> c_;
};

enum class Purpose { basic, laurent, poisson };

struct ValidationReport {
  bool ok = true;
  std::string condition;  ///< first violated condition, empty when ok
  std::vector<int> indices;  ///< 1-based indices naming the violation
  Element residual;  ///< nonzero witness, when the check produces one

  explicit operator bool() const { return ok; }
  /// Throws ValidationFailure carrying the condition when not ok.
  void require() const;
  static ValidationReport failure(std::string condition, std::vector<int> indices = {}, Element residual = {});
};

/// basic: structure, the zero pattern on invertible pairs and resolvable
/// overlaps x_k x_j x_i; laurent: additionally p_1j = 0 for every j;
/// poisson: additionally q_ij != 1 for every i < j.
ValidationReport validate_presentation(const Presentation& p, Purpose purpose);

const char* to_string(Purpose p);

}  // namespace pbw
