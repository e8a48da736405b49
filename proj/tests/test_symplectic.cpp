#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "casson/checks.hpp"
#include "casson/symplectic.hpp"

using namespace casson;

namespace {
HomologyVector a(int g, int i) { return HomologyVector::basis_a(g, i); }
HomologyVector b(int g, int i) { return HomologyVector::basis_b(g, i); }
}  // namespace

TEST_CASE("omega on the standard basis") {
  CHECK(omega(a(3, 0), b(3, 0)) == 1);
  CHECK(omega(a(3, 0), a(3, 1)) == 0);
  CHECK(omega(b(3, 0), a(3, 0)) == -1);
  CHECK(omega(b(3, 0), b(3, 2)) == 0);
  CHECK(omega(a(4, 2), b(4, 2)) == 1);
}

TEST_CASE("omega rejects genus mismatch") {
  CHECK_THROWS_AS(omega(a(3, 0), a(4, 0)), ValidationError);
}

TEST_CASE("omega is the Gram matrix pairing") {
  checks::Rng rng(7);
  const IntMat w = omega_matrix(3);
  for (int t = 0; t < 50; ++t) {
    const HomologyVector x = checks::random_vector(rng, 3);
    const HomologyVector y = checks::random_vector(rng, 3);
    const IntMat prod = x.coords().transpose() * w * y.coords();
    CHECK(omega(x, y) == prod(0, 0));
  }
}

TEST_CASE("transvection moves b1 across a1") {
  const SymplecticMatrix t = transvection(a(3, 0), 1);
  CHECK(t.apply(b(3, 0)) == b(3, 0) - a(3, 0));
  CHECK(t.apply(a(3, 0)) == a(3, 0));
  CHECK(t.apply(a(3, 1)) == a(3, 1));
}

TEST_CASE("transvection along b1 adds b1 to a1") {
  const SymplecticMatrix t = transvection(b(3, 0), 1);
  CHECK(t.apply(a(3, 0)) == a(3, 0) + b(3, 0));
}

TEST_CASE("null class twists trivially") {
  CHECK(transvection(HomologyVector::zero(3), 5) ==
        SymplecticMatrix::identity(3));
}

TEST_CASE("transvection powers compose additively") {
  const auto res =
      checks::check_transvection_power_additivity(3, 100, checks::kDefaultSeed);
  CHECK(res.pass);
}

TEST_CASE("omega bilinear and antisymmetric (randomized)") {
  for (int g : {3, 4}) {
    const auto res =
        checks::check_omega_bilinear_antisymmetric(g, 100, checks::kDefaultSeed);
    CHECK(res.pass);
  }
}

TEST_CASE("symplectic constructor rejects a shear") {
  IntMat m = int_identity(6);
  m(0, 1) = 1;  // a2 |-> a2 + a1 without the compensating b-action
  m(3, 4) = 1;
  CHECK_THROWS_AS(SymplecticMatrix(3, m), ValidationError);
}

TEST_CASE("inverse is exact and involutive") {
  checks::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const SymplecticMatrix m = checks::random_symplectic(rng, 3, 5);
    CHECK(m * m.inverse() == SymplecticMatrix::identity(3));
    CHECK(m.inverse().inverse() == m);
  }
}

TEST_CASE("decompose_sp_b on the identity") {
  const BlockPair p = decompose_sp_b(SymplecticMatrix::identity(3));
  CHECK(equal(p.g(), int_identity(3)));
  CHECK(is_zero(p.s()));
}

TEST_CASE("decompose_sp_b of a b1-transvection is (I, E11)") {
  const BlockPair p = decompose_sp_b(transvection(b(3, 0), 1));
  CHECK(equal(p.g(), int_identity(3)));
  IntMat e11 = int_zero(3, 3);
  e11(0, 0) = 1;
  CHECK(equal(p.s(), e11));

  const BlockPair q = decompose_sp_b(transvection(b(3, 0), -1));
  CHECK(equal(q.s(), IntMat(-e11)));
}

TEST_CASE("decompose_sp_b rejects matrices that move B off itself") {
  CHECK_THROWS_AS(decompose_sp_b(transvection(a(3, 0), 1)), ValidationError);
}

TEST_CASE("semidirect law over 100 random Sp_B pairs at g = 3,4,5") {
  const auto res = checks::check_sp_b_semidirect_law(100, checks::kDefaultSeed);
  CHECK(res.pass);
}

TEST_CASE("gl_embed basics") {
  CHECK(gl_embed(int_identity(3)) == SymplecticMatrix::identity(3));

  IntMat minus = int_identity(3);
  for (int i = 0; i < 3; ++i) minus(i, i) = -1;
  const SymplecticMatrix m = gl_embed(minus);
  IntMat expect = int_identity(6);
  for (int i = 0; i < 6; ++i) expect(i, i) = -1;
  CHECK(equal(m.entries(), expect));
}

TEST_CASE("gl_embed of E12 acts on B by the inverse transpose") {
  IntMat e12 = int_identity(3);
  e12(0, 1) = 1;  // a2 |-> a2 + a1
  const SymplecticMatrix m = gl_embed(e12);
  CHECK(m.apply(a(3, 1)) == a(3, 1) + a(3, 0));
  CHECK(m.apply(b(3, 0)) == b(3, 0) - b(3, 1));
  CHECK(m.apply(b(3, 1)) == b(3, 1));
}

TEST_CASE("gl_embed rejects non-units") {
  IntMat two = int_identity(2);
  two(0, 0) = 2;
  CHECK_THROWS_AS(gl_embed(two), ValidationError);
}

TEST_CASE("transvection and gl_embed always land in Sp") {
  const auto res =
      checks::check_constructors_symplectic(3, 100, checks::kDefaultSeed);
  CHECK(res.pass);
}

TEST_CASE("coset witness on identity pair") {
  const IntMat w = coset_witness(SymplecticMatrix::identity(3),
                                 SymplecticMatrix::identity(3));
  CHECK(equal(w, int_identity(3)));
}

TEST_CASE("coset witness recovers the GL conjugator") {
  checks::Rng rng(23);
  for (int t = 0; t < 25; ++t) {
    const IntMat g = checks::random_gl(rng, 3);
    const SymplecticMatrix mb = gl_embed(g);
    const IntMat w = coset_witness(mb.inverse(), mb);
    CHECK(equal(w, g));
  }
}

TEST_CASE("coset witness rejects bad inputs") {
  // Product is not the identity.
  const SymplecticMatrix tb = transvection(b(3, 0), 1);
  CHECK_THROWS_AS(coset_witness(SymplecticMatrix::identity(3), tb),
                  ValidationError);
  // First factor has a lower-left block: wrong side.
  CHECK_THROWS_AS(coset_witness(tb, tb.inverse()), ValidationError);
  // Upper-form times lower-form that is not its inverse.
  const SymplecticMatrix ta = transvection(a(3, 0), 1);
  CHECK_THROWS_AS(coset_witness(ta, tb), ValidationError);
}

TEST_CASE("embedding preserves symplecticity and twists") {
  checks::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const HomologyVector c = checks::random_vector(rng, 3);
    CHECK(embed(transvection(c, 2), 5, 1) ==
          transvection(embed(c, 5, 1), 2));
  }
}

TEST_CASE("block pair validation") {
  CHECK_THROWS_AS(BlockPair(int_identity(3), omega_matrix(1)),
                  ValidationError);  // sizes differ
  IntMat sym = int_zero(3, 3);
  sym(0, 1) = 1;  // not symmetric
  CHECK_THROWS_AS(BlockPair(int_identity(3), sym), ValidationError);
  IntMat two = int_identity(3);
  two(1, 1) = 2;
  CHECK_THROWS_AS(BlockPair(two, int_zero(3, 3)), ValidationError);
}
