#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pbw/scalar.hpp"

namespace pbw {

/// Exponent vector x_1^{a_1} ... x_n^{a_n}; entries past r must be >= 0.
/// Generator indices are 0-based throughout the C++ API.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial generator(int n, int i, int power = 1);

  int size() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[i]; }
  int& operator[](int i) { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }
  /// |a| = a_1 + ... + a_n; may be negative.
  int degree() const;
  bool is_one() const;
  /// Index of the last / first nonzero exponent, or -1.
  int last_index() const;
  int first_index() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Degree first, then the leftmost differing exponent; larger wins.
std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b);

struct DeglexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return deglex_compare(a, b) > 0; }
};

/// Finite Scalar-linear combination of normal-form monomials. Iteration
/// runs in descending deglex order; zero coefficients are never stored.
class Element {
 public:
  using TermMap = std::map<Monomial, Scalar, DeglexGreater>;

  Element() = default;
  explicit Element(int n) : n_(n) {}
  static Element constant(int n, const Scalar& c);
  static Element monomial(const Monomial& m, const Scalar& c = Scalar(1));
  /// Builds from a term list in any order; repeated monomials are summed.
  static Element from_terms(int n, const std::vector<std::pair<Monomial, Scalar>>& terms);

  int arity() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;
  /// The coefficient if the element lies in A, otherwise nothing.
  std::optional<Scalar> as_scalar() const;
  /// Degree of the leading monomial; throws ZeroElement on zero.
  int degree() const;

  void add_term(const Monomial& m, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  bool operator==(const Element& o) const { return terms_ == o.terms_ && (terms_.empty() || n_ == o.n_); }

 private:
  void adopt_arity(const Element& o);
  int n_ = 0;
  TermMap terms_;
};

/// it(f): the deglex-maximal monomial and its coefficient.
std::pair<Monomial, Scalar> leading_term(const Element& f);

}  // namespace pbw
