#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "casson/checks.hpp"
#include "casson/cocycle.hpp"

using namespace casson;

namespace {
HomologyVector a(int g, int i) { return HomologyVector::basis_a(g, i); }
HomologyVector b(int g, int i) { return HomologyVector::basis_b(g, i); }
ExteriorCubeVector mono(int g, Triple t, long c = 1) {
  return ExteriorCubeVector::monomial(g, t, Int(c));
}
}  // namespace

TEST_CASE("pairing of the top A and B monomials is -1") {
  CHECK(j_pairing(mono(3, {0, 1, 2}), mono(3, {3, 4, 5})) == -1);
  CHECK(j_pairing(mono(4, {0, 1, 2}), mono(4, {4, 5, 6})) == -1);
}

TEST_CASE("left slot without a W_A part pairs to zero") {
  CHECK(j_pairing(mono(3, {0, 3, 4}) + mono(3, {3, 4, 5}), mono(3, {3, 4, 5})) ==
        0);
}

TEST_CASE("the worked example pairs to -1, so the cocycle gives 2") {
  const ExteriorCubeVector tau_a =
      wedge3(a(3, 0), b(3, 0) - a(3, 2), a(3, 1));
  const ExteriorCubeVector tau_b =
      wedge3(a(3, 0) + b(3, 2), b(3, 0), b(3, 1));
  CHECK(j_pairing(tau_a, tau_b) == -1);
  CHECK(casson_cocycle(tau_a, tau_b) == -2);
  CHECK(-casson_cocycle(tau_a, tau_b) == 2);
}

TEST_CASE("transpose pairing") {
  CHECK(jt_pairing(mono(3, {3, 4, 5}), mono(3, {0, 1, 2})) == -1);
  CHECK(jt_pairing(mono(3, {0, 1, 2}), mono(3, {3, 4, 5})) == 0);
  checks::Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const ExteriorCubeVector u = checks::random_cube(rng, 3);
    const ExteriorCubeVector v = checks::random_cube(rng, 3);
    CHECK(jt_pairing(u, v) == j_pairing(v, u));
  }
}

TEST_CASE("cocycle value basics") {
  checks::Rng rng(19);
  const ExteriorCubeVector v = checks::random_cube(rng, 3);
  CHECK(casson_cocycle(ExteriorCubeVector(3), v) == 0);
  CHECK(casson_cocycle(v, v) == Int(2) * j_pairing(v, v));
  // Two W_AB elements never pair.
  CHECK(casson_cocycle(mono(3, {0, 1, 3}), mono(3, {0, 4, 5})) == 0);
}

TEST_CASE("vanishing is exhaustive over monomial pairs at g = 3") {
  CHECK(checks::check_pairing_vanishing_exhaustive(3).pass);
}

TEST_CASE("bilinearity and the 2-cocycle identity hold") {
  CHECK(checks::check_pairing_bilinear(3, 120, checks::kDefaultSeed).pass);
  CHECK(checks::check_cocycle_identity(3, 120, checks::kDefaultSeed).pass);
}

TEST_CASE("GL invariance and stabilization") {
  CHECK(checks::check_pairing_gl_invariance(3, 120, checks::kDefaultSeed).pass);
  CHECK(checks::check_pairing_stabilization(3, 120, checks::kDefaultSeed).pass);
}

TEST_CASE("dense form route matches the sparse pairing") {
  const BilinearForm jf = j_form(3);
  const BilinearForm jt = jt_form(3);
  checks::Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    const ExteriorCubeVector u = checks::random_cube(rng, 3);
    const ExteriorCubeVector v = checks::random_cube(rng, 3);
    CHECK(jf.eval(u, v) == j_pairing(u, v));
    CHECK(jt.eval(u, v) == jt_pairing(u, v));
  }
}

TEST_CASE("monomial pairing equals the omega determinant route") {
  CHECK(
      checks::check_pairing_determinant_route(3, 120, checks::kDefaultSeed).pass);
}

TEST_CASE("uniqueness certificate at desk scale") {
  for (int g : {3, 4}) {
    const UniquenessReport rep = uniqueness_certificate(g);
    CHECK(rep.dimension == 1);
    CHECK(rep.matches_pairing);
    REQUIRE(rep.basis.size() == 1);
    const IntMat& gen = rep.basis.front().matrix();
    const BilinearForm jf = j_form(g);
    CHECK((equal(gen, jf.matrix()) || equal(gen, IntMat(-jf.matrix()))));
  }
  CHECK_THROWS_AS(uniqueness_certificate(5), ValidationError);
}

TEST_CASE("relaxed solve admits the transpose as well") {
  for (int g : {3, 4}) {
    const RelaxedUniquenessReport rep = relaxed_invariance_basis(g);
    CHECK(rep.dimension == 2);
    CHECK(rep.contains_pairing);
    CHECK(rep.contains_transpose);
  }
}

TEST_CASE("minus identity certificate counts all monomials") {
  CHECK(minus_id_check(3).checked == 20);
  CHECK(minus_id_check(4).checked == 56);
  CHECK(minus_id_check(5).checked == 120);
  CHECK(minus_id_check(3).all_negated());
  CHECK(minus_id_check(4).all_negated());
  CHECK(minus_id_check(5).all_negated());
  CHECK_THROWS_AS(minus_id_check(2), ValidationError);
}

TEST_CASE("pairing rejects genus mismatch") {
  CHECK_THROWS_AS(j_pairing(mono(3, {0, 1, 2}), mono(4, {4, 5, 6})),
                  ValidationError);
}
