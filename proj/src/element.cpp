#include "pbw/element.hpp"

#include <numeric>

#include "pbw/errors.hpp"

namespace pbw {

Monomial Monomial::generator(int n, int i, int power) {
  Monomial m = one(n);
  m.exps_.at(i) = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const { return last_index() < 0; }

int Monomial::last_index() const {
  for (int k = size() - 1; k >= 0; --k)
    if (exps_[k] != 0) return k;
  return -1;
}

int Monomial::first_index() const {
  for (int k = 0; k < size(); ++k)
    if (exps_[k] != 0) return k;
  return -1;
}

std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps() <=> b.exps();
}

Element Element::constant(int n, const Scalar& c) {
  Element e(n);
  e.add_term(Monomial::one(n), c);
  return e;
}

Element Element::monomial(const Monomial& m, const Scalar& c) {
  Element e(m.size());
  e.add_term(m, c);
  return e;
}

Element Element::from_terms(int n, const std::vector<std::pair<Monomial, Scalar>>& terms) {
  Element e(n);
  for (const auto& [m, c] : terms) e.add_term(m, c);
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<Scalar> Element::as_scalar() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

int Element::degree() const {
  if (terms_.empty()) throw ZeroElement();
  return terms_.begin()->first.degree();
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (n_ == 0) n_ = m.size();
  if (m.size() != n_) throw Error("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::adopt_arity(const Element& o) {
  if (n_ == 0) n_ = o.n_;
  else if (o.n_ != 0 && o.n_ != n_) throw Error("element arity mismatch");
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

Element& Element::operator+=(const Element& o) {
  adopt_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  adopt_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::pair<Monomial, Scalar> leading_term(const Element& f) {
  if (f.is_zero()) throw ZeroElement();
  return *f.terms().begin();
}

}  // namespace pbw
