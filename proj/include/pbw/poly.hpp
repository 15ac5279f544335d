#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pbw {

/// Process-wide table of formal parameter names. The id order is the
/// variable order used by every polynomial; it is fixed at first interning.
class ParamTable {
 public:
  static std::size_t intern(std::string_view name);
  static std::string name(std::size_t id);
  /// Returns false when the name has never been interned.
  static bool lookup(std::string_view name, std::size_t& id);
};

/// Exponent vector over parameter ids, trailing zeros trimmed. Plain
/// lexicographic comparison of trimmed vectors is the lex monomial order.
using ParamExponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q in the formal parameters.
/// Terms are kept strictly descending in lex order with no zero coefficient.
class Poly {
 public:
  struct Term {
    ParamExponents exps;
    mpq_class coeff;
    bool operator==(const Term& o) const { return exps == o.exps && coeff == o.coeff; }
  };

  Poly() = default;
  Poly(long c);  // NOLINT: implicit constants are convenient
  explicit Poly(const mpq_class& c);
  static Poly variable(std::size_t id, std::uint32_t power = 1);
  static Poly monomial(ParamExponents exps, mpq_class coeff);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exps.empty() && terms_[0].coeff == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  mpq_class constant_value() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly shifted(const ParamExponents& m) const;  // multiply by a monomial
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Exact quotient; throws std::logic_error if b does not divide *this.
  Poly exact_div(const Poly& b) const;
  /// Scales so that the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  /// Coefficients as a polynomial in `var`: result[k] multiplies var^k.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  /// Smallest variable id present, or npos for constants.
  std::size_t first_variable() const;
  /// Componentwise minimum exponent over all terms.
  ParamExponents min_exponents() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Monic gcd over Q; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace pbw
