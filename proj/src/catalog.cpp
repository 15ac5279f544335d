#include "pbw/catalog.hpp"

#include <charconv>
#include <set>

#include "pbw/algebra.hpp"
#include "pbw/errors.hpp"
#include "pbw/parse.hpp"

namespace pbw {

namespace {

int int_option(const ExampleOptions& o, const std::string& key, int fallback, int lo, int hi) {
  auto it = o.find(key);
  if (it == o.end()) return fallback;
  int v = 0;
  const auto& s = it->second;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InvalidOptions("option " + key + " must be an integer");
  if (v < lo || v > hi)
    throw InvalidOptions("option " + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

void allow_only(const ExampleOptions& o, std::set<std::string> keys) {
  for (const auto& [k, v] : o)
    if (!keys.count(k)) throw InvalidOptions("unknown option '" + k + "'");
}

std::string idx(int k) { return std::to_string(k); }

Presentation q_plane(const std::string& a, const std::string& b, const Scalar& q, std::vector<std::string> params) {
  Presentation p(2, 0, {a, b}, std::move(params));
  p.set_q(0, 1, q);
  return p;
}

Presentation q_dilatation(int nt, int mh) {
  std::vector<std::string> gens;
  for (int k = 1; k <= nt; ++k) gens.push_back("t" + idx(k));
  for (int k = 1; k <= mh; ++k) gens.push_back("H" + idx(k));
  Presentation p(nt + mh, 0, gens, {"q"});
  for (int k = 0; k < nt; ++k) p.set_q(k, nt + k, Scalar::param("q"));
  return p;
}

Presentation weyl(int n) {
  std::vector<std::string> gens, params;
  for (int k = 1; k <= n; ++k) gens.push_back("x" + idx(k));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) params.push_back("l" + idx(i) + idx(j));
  Presentation p(n, 0, gens, params);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.set_q(i, j, Scalar::param("l" + idx(i + 1) + idx(j + 1)));
  return p;
}

Presentation quantum_space(int n) {
  std::vector<std::string> gens, params;
  for (int k = 1; k <= n; ++k) gens.push_back("x" + idx(k));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) params.push_back("q" + idx(i) + idx(j));
  Presentation p(n, 0, gens, params);
  // x_i x_j = q_ij x_j x_i, i.e. x_j x_i = q_ij^-1 x_i x_j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.set_q(i, j, Scalar::param("q" + idx(i + 1) + idx(j + 1)).inverse());
  return p;
}

// yz - alpha zy = 0, zx - beta xz = 0, xy - gamma yx = v. The overlap zyx
// resolves only if alpha/beta satisfy the constraints forced by v, so the
// dependent ones are fixed instead of being free parameters.
Presentation skew3d(const std::string& vtext) {
  Presentation base(3, 0, {"x", "y", "z"}, {});
  Element v = parse_expression(Algebra(base), vtext);
  Scalar v0, vx, vy, vz;
  for (const auto& [m, c] : v.terms()) {
    if (m.degree() > 1 || m.first_index() != m.last_index() || (m.first_index() >= 0 && m[m.first_index()] != 1))
      throw InvalidOptions("v must be an affine combination of 1, x, y, z");
    int k = m.first_index();
    (k < 0 ? v0 : k == 0 ? vx : k == 1 ? vy : vz) = c;
  }
  bool a_one = !vx.is_zero(), b_one = !vy.is_zero(), ab_one = !v0.is_zero() || !vz.is_zero();
  if (ab_one && (a_one || b_one)) a_one = b_one = true;
  Scalar alpha = a_one ? Scalar(1) : Scalar::param("alpha");
  Scalar beta = b_one ? Scalar(1) : ab_one ? alpha : Scalar::param("beta");
  Scalar gamma = Scalar::param("gamma");
  std::vector<std::string> params;
  if (!a_one) params.push_back("alpha");
  if (!b_one && !ab_one) params.push_back("beta");
  params.push_back("gamma");
  Presentation p(3, 0, {"x", "y", "z"}, params);
  Scalar gi = gamma.inverse();
  p.set_q(0, 1, gi);
  p.set_c0(0, 1, -gi * v0);
  p.set_c(0, 1, 0, -gi * vx);
  p.set_c(0, 1, 1, -gi * vy);
  p.set_c(0, 1, 2, -gi * vz);
  p.set_q(0, 2, beta);
  p.set_q(1, 2, alpha.inverse());
  return p;
}

Presentation witten() {
  Scalar xi1 = Scalar::param("xi1"), xi3 = Scalar::param("xi3"), xi5 = Scalar::param("xi5");
  Presentation p(3, 0, {"x", "y", "z"}, {"xi1", "xi3", "xi5"});
  p.set_q(0, 1, xi5);            // yx = xi5 xy
  p.set_q(0, 2, xi1.inverse());  // xz = xi1 zx
  p.set_q(1, 2, xi3);            // zy = xi3 yz
  return p;
}

}  // namespace

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys{"q_differential", "q_dilatation", "weyl", "skew3d",
                                             "quantum_space", "witten", "symplectic"};
  return keys;
}

CatalogEntry build_example(const std::string& key, const ExampleOptions& options) {
  CatalogEntry e;
  e.key = key;
  if (key == "q_differential") {
    allow_only(options, {});
    e.description = "q-differentiable operators with h = 0: xy = q yx";
    e.presentation = q_plane("y", "x", Scalar::param("q"), {"q"});
  } else if (key == "q_dilatation") {
    allow_only(options, {"n", "m"});
    int m = int_option(options, "m", 1, 1, 8);
    int n = int_option(options, "n", 1, 1, m);
    e.options = {{"n", idx(n)}, {"m", idx(m)}};
    e.description = "linear partial q-dilatation operators: H_i t_i = q t_i H_i";
    e.presentation = q_dilatation(n, m);
  } else if (key == "weyl") {
    allow_only(options, {"n"});
    int n = int_option(options, "n", 3, 2, 6);
    e.options = {{"n", idx(n)}};
    e.description = "multiplicative analogue of the Weyl algebra: x_j x_i = l_ij x_i x_j";
    e.presentation = weyl(n);
  } else if (key == "skew3d") {
    allow_only(options, {"v"});
    std::string v = options.count("v") ? options.at("v") : "z";
    e.options = {{"v", v}};
    e.description = "3-dimensional skew polynomial algebra: yz = alpha zy, zx = beta xz, xy - gamma yx = v";
    e.presentation = skew3d(v);
  } else if (key == "quantum_space") {
    allow_only(options, {"n"});
    int n = int_option(options, "n", 3, 2, 6);
    e.options = {{"n", idx(n)}};
    e.description = "quantum space S_q: x_i x_j = q_ij x_j x_i";
    e.presentation = quantum_space(n);
  } else if (key == "witten") {
    allow_only(options, {});
    e.description = "Witten deformation with xi2 = xi4 = xi6 = xi7 = 0";
    e.presentation = witten();
  } else if (key == "symplectic") {
    allow_only(options, {"n"});
    int_option(options, "n", 1, 1, 1);
    e.options = {{"n", "1"}};
    e.description = "quantum symplectic space, n = 1: x1 y1 = q^2 y1 x1";
    e.presentation = q_plane("y1", "x1", Scalar::param("q").pow(2), {"q"});
  } else {
    throw UnknownExample(key);
  }
  validate_presentation(e.presentation, Purpose::basic).require();
  e.laurent = validate_presentation(e.presentation, Purpose::laurent).ok;
  e.poisson = validate_presentation(e.presentation, Purpose::poisson).ok;
  return e;
}

}  // namespace pbw
