#include "pbw/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pbw/errors.hpp"

namespace pbw {

Presentation::Presentation(int n, int r, std::vector<std::string> gen_names, std::vector<std::string> params)
    : n_(n), r_(r), gens_(std::move(gen_names)), params_(std::move(params)) {
  if (n < 0) throw InvalidOptions("negative generator count");
  if (static_cast<int>(gens_.size()) != n) throw InvalidOptions("generator name count differs from n");
  q_.assign(static_cast<std::size_t>(n) * n, Scalar(1));
  c0_.assign(static_cast<std::size_t>(n) * n, Scalar());
  c_.assign(static_cast<std::size_t>(n) * n * n, Scalar());
}

std::size_t Presentation::pair(int i, int j) const {
  if (i < 0 || j >= n_ || i >= j) throw std::out_of_range("relation index pair must satisfy 0 <= i < j < n");
  return static_cast<std::size_t>(i) * n_ + j;
}

Element Presentation::lower_part(int i, int j) const {
  Element p(n_);
  p.add_term(Monomial::one(n_), c0(i, j));
  for (int t = 0; t < n_; ++t) p.add_term(Monomial::generator(n_, t), c(i, j, t));
  return p;
}

bool Presentation::is_pure(int i, int j) const { return lower_part(i, j).is_zero(); }

int Presentation::generator_index(const std::string& name) const {
  auto it = std::find(gens_.begin(), gens_.end(), name);
  return it == gens_.end() ? -1 : static_cast<int>(it - gens_.begin());
}

bool Presentation::operator==(const Presentation& o) const {
  return n_ == o.n_ && r_ == o.r_ && gens_ == o.gens_ && params_ == o.params_ && q_ == o.q_ && c0_ == o.c0_ &&
         c_ == o.c_;
}

void ValidationReport::require() const {
  if (ok) return;
  std::string msg = condition;
  if (!indices.empty()) {
    msg += " at (";
    for (std::size_t k = 0; k < indices.size(); ++k) msg += (k ? "," : "") + std::to_string(indices[k]);
    msg += ")";
  }
  throw ValidationFailure(msg);
}

ValidationReport ValidationReport::failure(std::string condition, std::vector<int> indices, Element residual) {
  return {false, std::move(condition), std::move(indices), std::move(residual)};
}

const char* to_string(Purpose p) {
  switch (p) {
    case Purpose::basic: return "basic";
    case Purpose::laurent: return "laurent";
    case Purpose::poisson: return "poisson";
  }
  return "?";
}

}  // namespace pbw
