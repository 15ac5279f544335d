#include <set>

#include "pbw/algebra.hpp"
#include "pbw/errors.hpp"
#include "pbw/presentation.hpp"

namespace pbw {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

void collect_vars(const Poly& p, std::set<std::size_t>& out) {
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < t.exps.size(); ++v)
      if (t.exps[v]) out.insert(v);
}

void collect_vars(const Scalar& s, std::set<std::size_t>& out) {
  collect_vars(s.num(), out);
  collect_vars(s.den(), out);
}

std::vector<int> signs_for(int i, int r) { return i < r ? std::vector<int>{1, -1} : std::vector<int>{1}; }

ValidationReport structural(const Presentation& p) {
  const int n = p.n(), r = p.r();
  if (r < 0 || r > n) return ValidationReport::failure("r must satisfy 0 <= r <= n", {r});
  std::set<std::string> names;
  for (int k = 0; k < n; ++k) {
    const auto& g = p.gen_names()[k];
    if (!valid_identifier(g)) return ValidationReport::failure("generator name is not an identifier", {k + 1});
    if (!names.insert(g).second) return ValidationReport::failure("duplicate generator name", {k + 1});
  }
  std::set<std::size_t> declared;
  for (std::size_t k = 0; k < p.params().size(); ++k) {
    const auto& t = p.params()[k];
    if (!valid_identifier(t)) return ValidationReport::failure("parameter name is not an identifier", {int(k) + 1});
    if (!names.insert(t).second) return ValidationReport::failure("duplicate parameter name", {int(k) + 1});
    declared.insert(ParamTable::intern(t));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::set<std::size_t> used;
      collect_vars(p.q(i, j), used);
      collect_vars(p.c0(i, j), used);
      for (int t = 0; t < n; ++t) collect_vars(p.c(i, j, t), used);
      for (std::size_t v : used)
        if (!declared.count(v)) return ValidationReport::failure("undeclared parameter " + ParamTable::name(v), {i + 1, j + 1});
      if (p.q(i, j).is_zero()) return ValidationReport::failure("q_ij must be nonzero", {i + 1, j + 1});
    }
  for (int j = 1; j < n && r >= 1; ++j)
    if (!p.c0(0, j).is_zero()) return ValidationReport::failure("a_1j^(0) must vanish when r >= 1", {1, j + 1});
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int t = i; t < n; ++t)
        if (!p.c(i, j, t).is_zero())
          return ValidationReport::failure("a_ij^(t) must vanish for t >= i when i <= r", {i + 1, j + 1, t + 1});
      if (j < r && !p.is_pure(i, j))
        return ValidationReport::failure("relation between two invertible generators must be pure", {i + 1, j + 1});
    }
  return {};
}

ValidationReport overlaps(const Presentation& p) {
  const int n = p.n(), r = p.r();
  Algebra alg(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : signs_for(i, r))
        for (int sj : signs_for(j, r)) {
          Element xi = alg.generator(i, si), xj = alg.generator(j, sj);
          Element prod = alg.multiply(xj, xi);
          if (i < r && alg.multiply(prod, alg.generator(i, -si)) != xj)
            return ValidationReport::failure("inverse round trip fails", {j + 1, i + 1});
          if (j < r && alg.multiply(alg.generator(j, -sj), prod) != xi)
            return ValidationReport::failure("inverse round trip fails", {j + 1, i + 1});
          for (int k = j + 1; k < n; ++k)
            for (int sk : signs_for(k, r)) {
              Element xk = alg.generator(k, sk);
              if (alg.multiply(alg.multiply(xk, xj), xi) != alg.multiply(xk, prod))
                return ValidationReport::failure("overlap x_k x_j x_i does not resolve", {k + 1, j + 1, i + 1});
            }
        }
  return {};
}

}  // namespace

ValidationReport validate_presentation(const Presentation& p, Purpose purpose) {
  if (auto rep = structural(p); !rep) return rep;
  try {
    if (auto rep = overlaps(p); !rep) return rep;
  } catch (const Error& e) {
    return ValidationReport::failure(std::string("rewriting failed: ") + e.what());
  }
  if (purpose == Purpose::basic) return {};
  for (int j = 1; j < p.n(); ++j)
    if (!p.is_pure(0, j)) return ValidationReport::failure("p_1j must vanish", {1, j + 1});
  if (purpose == Purpose::laurent) return {};
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j)
      if (p.q(i, j).is_one()) return ValidationReport::failure("q_ij must differ from 1", {i + 1, j + 1});
  return {};
}

}  // namespace pbw
