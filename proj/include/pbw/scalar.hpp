#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pbw/poly.hpp"

namespace pbw {

/// Element of the coefficient field Q(t_1, ..., t_m).
///
/// Canonical form: gcd(num, den) = 1 and den is monic under the lex order
/// of the parameter table, so two Scalars are equal iff their fields are.
/// Zero is 0/1.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT
  explicit Scalar(const mpq_class& c) : num_(c), den_(1) {}
  explicit Scalar(Poly p) : num_(std::move(p)), den_(1) {}
  /// num/den, canonicalized. Throws DivisionByZero when den = 0.
  Scalar(Poly num, Poly den);

  /// The formal parameter with the given name (interned on first use).
  static Scalar param(std::string_view name);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// True for a nonzero polynomial numerator with a negative leading coefficient.
  bool looks_negative() const { return !num_.is_zero() && num_.leading().coeff < 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  Scalar inverse() const;
  Scalar pow(long k) const;

  /// Re-parseable text: "q+1", "1/q^2", "(q-1)/(q*t)", "1/2*q".
  std::string to_string() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

/// In the field every nonzero element is a unit.
inline bool unit_check(const Scalar& a) { return !a.is_zero(); }

/// Re-normalizes an arbitrary fraction; used by tests to check idempotence.
Scalar canonicalize(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pbw
