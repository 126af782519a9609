#include <nmono/nondeg.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace nmono;
using namespace nmono::testing;

TEST_CASE("monomial faces are certified non-degenerate") {
  Polynomial f = parse_polynomial("x^2 + y^3 + 1", 2, false);
  NewtonAtInfinity N = gamma_infinity(f);
  const Face& vx = N.P.supporting_face(iv({-1, 0}));
  REQUIRE(vx.dim == 0);
  FaceCheck c = check_face(f, N.P, vx);
  CHECK(c.verdict == Verdict::NonDegenerateCertified);
}

TEST_CASE("square-free edge is certified non-degenerate") {
  Polynomial f = parse_polynomial("x^2 + y^3", 2, false);
  NewtonAtInfinity N = gamma_infinity(f);
  const Face& edge = N.P.supporting_face(iv({-3, -2}));
  REQUIRE(edge.dim == 1);
  CHECK(check_face(f, N.P, edge).verdict == Verdict::NonDegenerateCertified);
}

TEST_CASE("squared factor on an edge is certified degenerate") {
  Polynomial f = parse_polynomial("x^2 + 2*x*y + y^2", 2, false);  // (x+y)^2
  NewtonAtInfinity N = gamma_infinity(f);
  const Face& edge = N.P.supporting_face(iv({-1, -1}));
  REQUIRE(edge.dim == 1);
  FaceCheck c = check_face(f, N.P, edge);
  CHECK(c.verdict == Verdict::DegenerateCertified);
  CHECK(c.detail.find("gcd") != std::string::npos);

  // stability under scaling by a nonzero rational
  Polynomial g = f;
  for (auto& [e, co] : g.terms) co *= Rat(3, 7);
  CHECK(check_face(g, N.P, edge).verdict == Verdict::DegenerateCertified);
}

TEST_CASE("check_all aggregates and n = 2 stays exact") {
  Polynomial f = parse_polynomial("x^2 + y^3", 2, false);
  NewtonAtInfinity N = gamma_infinity(f);
  NondegStatus s = check_all(f, N);
  CHECK(s.overall == Verdict::NonDegenerateCertified);
  for (const FaceCheck& c : s.faces)
    CHECK((c.verdict == Verdict::NonDegenerateCertified ||
           c.verdict == Verdict::DegenerateCertified));

  // a repeated edge factor propagates to the overall verdict
  Polynomial g = parse_polynomial("x^2 + 2*x*y + y^2", 2, false);
  NewtonAtInfinity M = gamma_infinity(g);
  CHECK(check_all(g, M).overall == Verdict::DegenerateCertified);
}

TEST_CASE("faces of dimension >= 2 are tri-state") {
  Polynomial f = parse_polynomial("x^2 + y^2 + x*y*z", 3, false);
  NewtonAtInfinity N = gamma_infinity(f);
  REQUIRE(N.full_dim);
  NondegStatus s = check_all(f, N);
  bool saw_probable = false;
  for (const FaceCheck& c : s.faces)
    if (c.verdict == Verdict::ProbablyNonDegenerate) saw_probable = true;
  // generic coefficients: no certificates above dimension 1, only "probably"
  CHECK(saw_probable);
  CHECK(s.overall == Verdict::ProbablyNonDegenerate);
}

TEST_CASE("modular search finds real singular loci in dimension 2") {
  // (x + y + z)^2: the facet at infinity carries a non-reduced face part
  Polynomial f =
      parse_polynomial("x^2 + y^2 + z^2 + 2*x*y + 2*x*z + 2*y*z", 3, false);
  NewtonAtInfinity N = gamma_infinity(f);
  REQUIRE(N.full_dim);
  const Face& facet = N.P.supporting_face(iv({-1, -1, -1}));
  REQUIRE(facet.dim == 2);
  NondegOptions opt;
  opt.trials = 64;
  opt.seed = 12345;
  FaceCheck c = check_face(f, N.P, facet, opt);
  CHECK(c.verdict == Verdict::LikelyDegenerate);
  REQUIRE(c.witness);
  // the recorded seed reproduces the witness
  FaceCheck c2 = check_face(f, N.P, facet, opt);
  REQUIRE(c2.witness);
  CHECK(c.witness->prime == c2.witness->prime);
  CHECK(c.witness->point == c2.witness->point);
  CHECK(c.witness->trial == c2.witness->trial);
}

TEST_CASE("check_face rejects faces through the origin") {
  Polynomial f = parse_polynomial("x^2 + y^3", 2, false);
  NewtonAtInfinity N = gamma_infinity(f);
  for (const Face& face : N.P.faces)
    if (face.contains_origin) {
      CHECK_THROWS_AS(check_face(f, N.P, face), domain_error);
      break;
    }
}
