#include <gtest/gtest.h>

#include "golden_cases.hpp"
#include "support.hpp"

using namespace pbw;
using namespace pbw::test;

TEST(Parse, Examples) {
  Algebra sq(quantum_space(3));
  Element f = E(sq, "q12*x1*x2 - x3");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(mono({1, 1, 0})), P("q12"));
  EXPECT_EQ(f.coefficient(mono({0, 0, 1})), Scalar(-1));

  Algebra qp(quantum_plane());
  EXPECT_EQ(E(qp, "x2*x1"), Element::monomial(mono({1, 1}), P("q")));
  EXPECT_EQ(E(qp, "(x1 + 1)^2"), E(qp, "x1^2 + 2*x1 + 1"));
  EXPECT_EQ(E(qp, "x1/(q+1)"), qp.generator(0) * (P("q") + Scalar(1)).inverse());

  Algebra lq(quantum_plane(1));
  EXPECT_EQ(E(lq, "x1^-1*x1"), lq.one());
  EXPECT_EQ(E(lq, "x1^-2"), lq.generator(0, -2));
}

TEST(Parse, Errors) {
  Algebra qp(quantum_plane());
  EXPECT_THROW(E(qp, "x1 x2"), SyntaxError);
  EXPECT_THROW(E(qp, "x1 +"), SyntaxError);
  EXPECT_THROW(E(qp, "(x1"), SyntaxError);
  EXPECT_THROW(E(qp, "x1/x2"), SyntaxError);
  EXPECT_THROW(E(qp, "x3"), UnknownSymbol);
  EXPECT_THROW(E(qp, "x1^-1"), NotInvertible);
  EXPECT_THROW(E(qp, "x1/0"), DivisionByZero);
  try {
    E(qp, "x1 * * x2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Format, Examples) {
  Algebra sq(quantum_space(3));
  const Presentation& p = sq.presentation();
  EXPECT_EQ(format_element(p, Element::monomial(mono({1, 1, 0}), P("q12")), OutputMode::machine), "q12\t1 1 0\n");
  EXPECT_EQ(format_element(p, sq.zero(), OutputMode::machine), "");
  EXPECT_EQ(format_element(p, sq.zero(), OutputMode::pretty), "0");
  EXPECT_EQ(format_element(p, E(sq, "x1*x2 - 2*x3"), OutputMode::pretty), "x1*x2 - 2*x3");
  EXPECT_EQ(format_monomial(p, mono({0, 0, 0})), "1");
  Algebra lq(quantum_plane(1));
  EXPECT_EQ(format_monomial(lq.presentation(), mono({-1, 2})), "x1^-1*x2^2");
}

TEST(Document, Errors) {
  EXPECT_THROW(parse_presentation("n = 2\nrel 2 1 = { c0 = \"1\" }\n"), SyntaxError);
  EXPECT_THROW(parse_presentation("n = 2\nrel 1 2 = { q = \"2\" }\n"), SyntaxError);
  EXPECT_THROW(parse_presentation("n = 2\nrel 2 1 = { q = \"t\" }\n"), UnknownSymbol);
  Presentation p = parse_presentation("n = 2\n# commuting\n");
  EXPECT_EQ(p.q(0, 1), Scalar(1));
}

TEST(CliProperties, RoundTrips) {
  std::mt19937_64 rng(61);
  for (const auto& k : catalog_keys()) {
    CatalogEntry e = build_example(k);
    Presentation p = e.presentation;
    if (e.laurent) p.set_r(1);
    Algebra alg(p);
    for (int t = 0; t < 30; ++t) {
      Element f = random_element(alg, rng, {4, 4, true, true});
      EXPECT_EQ(parse_expression(alg, format_element(p, f, OutputMode::pretty)), f) << k;
      EXPECT_EQ(parse_machine(alg, format_element(p, f, OutputMode::machine)), f) << k;
    }
  }
}

TEST(Cli, Golden) {
  for (const auto& c : golden_cases()) {
    GoldenRun r = run_golden(c, PBW_TEST_DIR);
    EXPECT_EQ(r.code, c.exit_code) << c.name;
    EXPECT_FALSE(r.expected.empty()) << c.name;
    EXPECT_EQ(r.out, r.expected) << c.name;
    EXPECT_EQ(run_golden(c, PBW_TEST_DIR).out, r.out) << c.name;
  }
}

TEST(Cli, ExitCodes) {
  std::ostringstream out, err;
  std::string dir = PBW_TEST_DIR;
  EXPECT_EQ(cli::run({"normalize", dir + "/data/quantum_plane.alg", "x1 x2"}, out, err), 2);
  EXPECT_EQ(cli::run({"normalize", dir + "/data/quantum_plane.alg", "x1^-1"}, out, err), 2);
  EXPECT_EQ(cli::run({"examples", "show", "nope"}, out, err), 2);
  EXPECT_EQ(cli::run({"frobnicate"}, out, err), 2);
  EXPECT_EQ(cli::run({"check-derivation", dir + "/data/quantum_plane.alg", "--derivation", dir + "/data/broken.der"},
                     out, err),
            1);
  EXPECT_EQ(cli::run({"validate", dir + "/data/skew3d.alg", "--purpose", "poisson"}, out, err), 1);
  EXPECT_EQ(cli::run({"validate", dir + "/data/sq3.alg", "--purpose", "poisson"}, out, err), 0);
}
