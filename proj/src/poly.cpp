#include "pbw/poly.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pbw {

namespace {

struct ParamStore {
  std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::size_t> ids;
};

ParamStore& store() {
  static ParamStore s;
  return s;
}

void trim(ParamExponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

bool lex_greater(const ParamExponents& a, const ParamExponents& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParamExponents add_exps(const ParamExponents& a, const ParamExponents& b) {
  const ParamExponents& longer = a.size() >= b.size() ? a : b;
  const ParamExponents& shorter = a.size() >= b.size() ? b : a;
  ParamExponents out = longer;
  for (std::size_t k = 0; k < shorter.size(); ++k) out[k] += shorter[k];
  return out;
}

// Returns false if b does not divide a.
bool sub_exps(const ParamExponents& a, const ParamExponents& b, ParamExponents& out) {
  if (b.size() > a.size()) return false;
  out = a;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (out[k] < b[k]) return false;
    out[k] -= b[k];
  }
  trim(out);
  return true;
}

}  // namespace

std::size_t ParamTable::intern(std::string_view name) {
  auto& s = store();
  std::lock_guard lock(s.mu);
  auto it = s.ids.find(std::string(name));
  if (it != s.ids.end()) return it->second;
  std::size_t id = s.names.size();
  s.names.emplace_back(name);
  s.ids.emplace(std::string(name), id);
  return id;
}

std::string ParamTable::name(std::size_t id) {
  auto& s = store();
  std::lock_guard lock(s.mu);
  return s.names.at(id);
}

bool ParamTable::lookup(std::string_view name, std::size_t& id) {
  auto& s = store();
  std::lock_guard lock(s.mu);
  auto it = s.ids.find(std::string(name));
  if (it == s.ids.end()) return false;
  id = it->second;
  return true;
}

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({{}, mpq_class(c)});
}

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.push_back({{}, c});
}

Poly Poly::variable(std::size_t id, std::uint32_t power) {
  ParamExponents e(id + 1, 0);
  e[id] = power;
  trim(e);
  return monomial(std::move(e), 1);
}

Poly Poly::monomial(ParamExponents exps, mpq_class coeff) {
  Poly p;
  trim(exps);
  if (coeff != 0) p.terms_.push_back({std::move(exps), std::move(coeff)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) trim(t.exps);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_greater(a.exps, b.exps); });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

mpq_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_.back().exps.empty()) return 0;
  return terms_.back().coeff;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->exps == b->exps) {
      mpq_class c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exps, std::move(c)});
      ++a;
      ++b;
    } else if (lex_greater(a->exps, b->exps)) {
      out.push_back(std::move(*a++));
    } else {
      out.push_back(*b++);
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].exps).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].exps).scaled(b.terms_[0].coeff);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({add_exps(s.exps, t.exps), s.coeff * t.coeff});
  return Poly::from_terms(std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly p = *this;
  if (c != 1)
    for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::shifted(const ParamExponents& m) const {
  if (m.empty()) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.exps = add_exps(t.exps, m);
  return p;  // multiplying by a monomial preserves the order
}

Poly Poly::exact_div(const Poly& b) const {
  if (b.is_zero()) throw std::logic_error("Poly::exact_div by zero");
  if (b.is_constant()) return scaled(1 / b.terms_[0].coeff);
  if (b == *this) return Poly(1);
  Poly r = *this;
  std::vector<Term> quot;
  const Term& lb = b.leading();
  while (!r.is_zero()) {
    ParamExponents e;
    if (!sub_exps(r.leading().exps, lb.exps, e)) throw std::logic_error("Poly::exact_div: not divisible");
    mpq_class c = r.leading().coeff / lb.coeff;
    r -= b.shifted(e).scaled(c);
    quot.push_back({std::move(e), std::move(c)});
  }
  return from_terms(std::move(quot));
}

Poly Poly::monic() const {
  if (is_zero() || leading().coeff == 1) return *this;
  return scaled(1 / leading().coeff);
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    if (var < t.exps.size()) d = std::max(d, t.exps[var]);
  return d;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    std::uint32_t k = var < t.exps.size() ? t.exps[var] : 0;
    Term s = t;
    if (var < s.exps.size()) s.exps[var] = 0;
    buckets[k].push_back(std::move(s));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

std::size_t Poly::first_variable() const {
  std::size_t best = std::string::npos;
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < t.exps.size() && k < best; ++k)
      if (t.exps[k] != 0) {
        best = k;
        break;
      }
  return best;
}

ParamExponents Poly::min_exponents() const {
  if (terms_.empty()) return {};
  ParamExponents m = terms_[0].exps;
  for (const auto& t : terms_) {
    m.resize(std::min(m.size(), t.exps.size()));
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.exps[k]);
  }
  trim(m);
  return m;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.exps.empty()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (t.exps[k] == 0) continue;
      if (wrote) os << '*';
      os << ParamTable::name(k);
      if (t.exps[k] != 1) os << '^' << t.exps[k];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

Poly content_in(const Poly& a, std::size_t v) {
  Poly g;
  for (const auto& c : a.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_in(const Poly& a, std::size_t v) { return a.exact_div(content_in(a, v)); }

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t v) {
  const std::uint32_t db = b.degree_in(v);
  const Poly lb = b.coefficients_in(v)[db];
  Poly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    std::uint32_t dr = r.degree_in(v);
    Poly lr = r.coefficients_in(v)[dr];
    r = r * lb - (lr * b) * Poly::variable(v, dr - db);
  }
  return r;
}

// Both inputs primitive with respect to v and involving v.
Poly primitive_euclid(Poly a, Poly b, std::size_t v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    Poly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return Poly(1);
    a = std::move(b);
    b = primitive_in(r, v);
  }
}

ParamExponents min_exps(const ParamExponents& a, const ParamExponents& b) {
  ParamExponents m(std::min(a.size(), b.size()));
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(a[k], b[k]);
  trim(m);
  return m;
}

Poly shift_down(const Poly& a, const ParamExponents& m) {
  if (m.empty()) return a;
  std::vector<Poly::Term> ts = a.terms();
  for (auto& t : ts) {
    ParamExponents e;
    sub_exps(t.exps, m, e);
    t.exps = std::move(e);
  }
  return Poly::from_terms(std::move(ts));
}

Poly gcd_no_monomial_content(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();
  std::size_t v = std::min(a.first_variable(), b.first_variable());
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = gcd(ca, cb);
  Poly g = primitive_euclid(a.exact_div(ca), b.exact_div(cb), v);
  return (c * g).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();
  if (a.is_monomial()) return Poly::monomial(min_exps(a.leading().exps, b.min_exponents()), 1);
  if (b.is_monomial()) return Poly::monomial(min_exps(b.leading().exps, a.min_exponents()), 1);
  ParamExponents ma = a.min_exponents();
  ParamExponents mb = b.min_exponents();
  Poly g = gcd_no_monomial_content(shift_down(a, ma), shift_down(b, mb));
  return g.shifted(min_exps(ma, mb));
}

}  // namespace pbw
