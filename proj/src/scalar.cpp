#include "pbw/scalar.hpp"

#include <ostream>

#include "pbw/errors.hpp"

namespace pbw {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

Scalar Scalar::param(std::string_view name) { return Scalar(Poly::variable(ParamTable::intern(name))); }

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (den_.leading().coeff != 1) {
    mpq_class c = 1 / den_.leading().coeff;
    num_ = num_.scaled(c);
    den_ = den_.scaled(c);
  }
}

Scalar canonicalize(const Scalar& s) { return Scalar(s.num(), s.den()); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly da = den_.exact_div(g);
  Poly db = o.den_.exact_div(g);
  num_ = num_ * db + o.num_ * da;
  den_ = den_ * db;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  if (den_.leading().coeff != 1) {
    mpq_class c = 1 / den_.leading().coeff;
    num_ = num_.scaled(c);
    den_ = den_.scaled(c);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s;
  mpq_class c = 1 / num_.leading().coeff;
  s.num_ = den_.scaled(c);
  s.den_ = num_.scaled(c);
  return s;
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pbw
