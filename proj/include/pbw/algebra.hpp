#pragma once

#include <memory>

#include "pbw/element.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

/// Normal form of x_j^{sj} x_i^{si} for i < j.
struct SwapRule {
  int j = 0;
  int i = 0;
  int sj = 1;
  int si = 1;
  Element rhs;
};

/// Normal-form arithmetic over one presentation. Copies share the swap-rule
/// and product caches; the caches are pure memos and safe to populate
/// from several threads.
class Algebra {
 public:
  explicit Algebra(Presentation p);
  explicit Algebra(std::shared_ptr<const Presentation> p);

  const Presentation& presentation() const { return *p_; }
  int n() const { return p_->n(); }
  int r() const { return p_->r(); }

  Element zero() const { return Element(n()); }
  Element one() const { return constant(Scalar(1)); }
  Element constant(const Scalar& c) const { return Element::constant(n(), c); }
  /// x_i^s; s = -1 needs i < r.
  Element generator(int i, int s = 1) const;
  Element monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;

  const SwapRule& derive_swap(int j, int i, int sj, int si) const;
  Element right_mul_generator(const Element& f, int i, int s) const;
  Element multiply(const Element& a, const Element& b) const;
  Element commutator(const Element& a, const Element& b) const;
  /// f^k; negative k only for a nonzero multiple of an invertible monomial.
  Element power(const Element& f, int k) const;
  Element monomial_inverse(const Monomial& m) const;
  /// Normal form of x^a x^b.
  const Element& monomial_product(const Monomial& a, const Monomial& b) const;

  /// Checks that the exponent signs of m fit Z^r x N^(n-r).
  bool admissible(const Monomial& m) const;

 private:
  struct Cache;
  const Element& mono_times_gen(const Monomial& a, int i, int s) const;
  Element compute_swap(int j, int i, int sj, int si) const;
  Element compute_mono_times_gen(const Monomial& a, int i, int s) const;
  Element compute_monomial_product(const Monomial& a, const Monomial& b) const;

  std::shared_ptr<const Presentation> p_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace pbw
