#include "pbw/algebra.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

std::size_t hash_exps(const std::vector<int>& v, std::size_t seed) {
  for (int e : v) seed ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

struct GenKey {
  Monomial a;
  int i;
  int s;
  bool operator==(const GenKey&) const = default;
};

struct GenKeyHash {
  std::size_t operator()(const GenKey& k) const { return hash_exps(k.a.exps(), k.i * 2 + (k.s > 0)); }
};

struct PairKey {
  Monomial a;
  Monomial b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const { return hash_exps(k.b.exps(), hash_exps(k.a.exps(), 17)); }
};

Monomial add(const Monomial& a, const Monomial& b) {
  std::vector<int> e = a.exps();
  for (int k = 0; k < b.size(); ++k) e[k] += b[k];
  return Monomial(std::move(e));
}

}  // namespace

struct Algebra::Cache {
  std::mutex mu;
  std::map<std::tuple<int, int, int, int>, SwapRule> swaps;
  std::unordered_map<GenKey, Element, GenKeyHash> gen;
  std::unordered_map<PairKey, Element, PairKeyHash> prod;
};

Algebra::Algebra(Presentation p) : Algebra(std::make_shared<const Presentation>(std::move(p))) {}

Algebra::Algebra(std::shared_ptr<const Presentation> p) : p_(std::move(p)), cache_(std::make_shared<Cache>()) {
  if (p_->r() < 0 || p_->r() > p_->n()) throw ValidationFailure("invertible count r must satisfy 0 <= r <= n");
}

Element Algebra::generator(int i, int s) const {
  if (i < 0 || i >= n()) throw std::out_of_range("generator index");
  if (s < 0 && i >= r()) throw NotInvertible("generator x" + std::to_string(i + 1) + " is not invertible");
  return Element::monomial(Monomial::generator(n(), i, s));
}

Element Algebra::monomial(const Monomial& m, const Scalar& c) const {
  if (!admissible(m)) throw NotInvertible("negative exponent outside the invertible block");
  return Element::monomial(m, c);
}

bool Algebra::admissible(const Monomial& m) const {
  if (m.size() != n()) return false;
  for (int k = r(); k < n(); ++k)
    if (m[k] < 0) return false;
  return true;
}

const SwapRule& Algebra::derive_swap(int j, int i, int sj, int si) const {
  auto key = std::make_tuple(j, i, sj, si);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->swaps.find(key);
    if (it != cache_->swaps.end()) return it->second;
  }
  if (!(0 <= i && i < j && j < n())) throw std::out_of_range("swap rule needs 0 <= i < j < n");
  if ((sj < 0 && j >= r()) || (si < 0 && i >= r()))
    throw NotInvertible("inverse of a generator outside the invertible block");
  Element rhs = compute_swap(j, i, sj, si);
  std::lock_guard lock(cache_->mu);
  auto [it, _] = cache_->swaps.try_emplace(key, SwapRule{j, i, sj, si, std::move(rhs)});
  return it->second;
}

Element Algebra::compute_swap(int j, int i, int sj, int si) const {
  const Presentation& p = *p_;
  const Scalar& q = p.q(i, j);
  auto pair_name = [&] { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  if (q.is_zero()) throw NDependenceViolation("q" + pair_name() + " is zero");
  Element low = p.lower_part(i, j);

  Monomial xij = Monomial::one(n());
  xij[i] = si;
  xij[j] = sj;
  if (sj > 0 && si > 0) return Element::monomial(xij, q) + low;

  // Moving an inverse across needs p_ij to live on generators left of x_i.
  if (!low.is_zero()) {
    if (i == 0 && !p.c0(i, j).is_zero())
      throw UnsupportedRelation("relation " + pair_name() + " has a constant term next to an inverse");
    for (int t = i; t < n(); ++t)
      if (!p.c(i, j, t).is_zero())
        throw UnsupportedRelation("relation " + pair_name() + " involves x" + std::to_string(t + 1) +
                                  " next to an inverse");
  }
  Scalar qi = q.inverse();
  if (sj > 0) {  // x_j x_i^-1 = q^-1 x_i^-1 x_j - q^-1 x_i^-1 p x_i^-1
    Element inv = generator(i, -1);
    return Element::monomial(xij, qi) - multiply(multiply(inv, low), inv) * qi;
  }
  if (si > 0) {  // x_j^-1 x_i = q^-1 x_i x_j^-1 - q^-1 x_j^-1 p x_j^-1
    Element inv = generator(j, -1);
    return Element::monomial(xij, qi) - multiply(multiply(inv, low), inv) * qi;
  }
  if (!low.is_zero())
    throw UnsupportedRelation("relation " + pair_name() + " between two inverted generators has lower terms");
  return Element::monomial(xij, q);
}

const Element& Algebra::mono_times_gen(const Monomial& a, int i, int s) const {
  GenKey key{a, i, s};
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->gen.find(key);
    if (it != cache_->gen.end()) return it->second;
  }
  Element v = compute_mono_times_gen(a, i, s);
  std::lock_guard lock(cache_->mu);
  return cache_->gen.try_emplace(std::move(key), std::move(v)).first->second;
}

Element Algebra::compute_mono_times_gen(const Monomial& a, int i, int s) const {
  int k = a.last_index();
  if (k <= i) {
    Monomial m = a;
    m[i] += s;
    return Element::monomial(m);
  }
  int sigma = a[k] > 0 ? 1 : -1;
  Monomial rest = a;
  rest[k] -= sigma;
  Element out(n());
  for (const auto& [m, c] : derive_swap(k, i, sigma, s).rhs.terms())
    for (const auto& [mm, cc] : monomial_product(rest, m).terms()) out.add_term(mm, c * cc);
  return out;
}

const Element& Algebra::monomial_product(const Monomial& a, const Monomial& b) const {
  PairKey key{a, b};
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->prod.find(key);
    if (it != cache_->prod.end()) return it->second;
  }
  Element v = compute_monomial_product(a, b);
  std::lock_guard lock(cache_->mu);
  return cache_->prod.try_emplace(std::move(key), std::move(v)).first->second;
}

Element Algebra::compute_monomial_product(const Monomial& a, const Monomial& b) const {
  int lo = b.first_index();
  if (lo < 0) return Element::monomial(a);
  if (a.last_index() <= lo) return Element::monomial(add(a, b));
  // Peel the last generator power of b: x^a x^b = (x^a x^b') x_t^{b_t}.
  int t = b.last_index();
  Monomial head = b;
  head[t] = 0;
  Element acc = monomial_product(a, head);
  int s = b[t] > 0 ? 1 : -1;
  for (int e = 0; e < std::abs(b[t]); ++e) acc = right_mul_generator(acc, t, s);
  return acc;
}

Element Algebra::right_mul_generator(const Element& f, int i, int s) const {
  if (s < 0 && i >= r()) throw NotInvertible("generator x" + std::to_string(i + 1) + " is not invertible");
  Element out(n());
  for (const auto& [m, c] : f.terms())
    for (const auto& [mm, cc] : mono_times_gen(m, i, s).terms()) out.add_term(mm, c * cc);
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  Element out(n());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Scalar c = ca * cb;
      for (const auto& [m, cm] : monomial_product(ma, mb).terms()) out.add_term(m, c * cm);
    }
  return out;
}

Element Algebra::commutator(const Element& a, const Element& b) const { return multiply(a, b) - multiply(b, a); }

Element Algebra::monomial_inverse(const Monomial& m) const {
  for (int k = r(); k < m.size(); ++k)
    if (m[k] != 0) throw NotInvertible("generator x" + std::to_string(k + 1) + " is not invertible");
  Element acc = one();
  for (int k = m.size() - 1; k >= 0; --k)
    for (int e = 0; e < std::abs(m[k]); ++e) acc = right_mul_generator(acc, k, m[k] > 0 ? -1 : 1);
  return acc;
}

Element Algebra::power(const Element& f, int k) const {
  if (k < 0) {
    if (f.size() != 1) throw NotInvertible("only invertible monomial terms have negative powers");
    const auto& [m, c] = *f.terms().begin();
    return power(monomial_inverse(m) * c.inverse(), -k);
  }
  Element result = one(), base = f;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

}  // namespace pbw
