#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "casson/checks.hpp"
#include "casson/freegroup.hpp"

using namespace casson;

namespace {
FreeWord gen(int rank, int i, int s = 1) {
  return FreeWord::generator(rank, i, s);
}
}  // namespace

TEST_CASE("free reduction cancels adjacent inverses") {
  const FreeWord w(3, {Letter{0, 1}, Letter{1, 1}, Letter{1, -1},
                       Letter{0, -1}, Letter{2, 1}});
  CHECK(w == gen(3, 2));
  CHECK((gen(3, 0) * gen(3, 0).inverse()).empty());
}

TEST_CASE("identity endomorphism fixes words") {
  const Endo id = Endo::identity(3);
  const FreeWord w(3, {Letter{0, 1}, Letter{2, -1}, Letter{1, 1}});
  CHECK(apply(id, w) == w);
}

TEST_CASE("K12 conjugates the first generator") {
  const MagnusReport rep = magnus_identity_check(3);
  CHECK(rep.pass());
  CHECK(rep.conjugation_identity);
  CHECK(rep.sigma_involution);
  CHECK(rep.k12_inverse);
  CHECK(magnus_identity_check(2).pass());
  CHECK(magnus_identity_check(5).pass());
  CHECK_THROWS_AS(magnus_identity_check(1), ValidationError);
}

TEST_CASE("apply reduces images: e(alpha alpha^-1) is empty") {
  const SuzukiGenerators s = suzuki_generators(3);
  const FreeWord w = gen(6, 0) * gen(6, 0).inverse();
  CHECK(apply(s.u, w).empty());
}

TEST_CASE("composition is a monoid action") {
  CHECK(checks::check_free_reduction(150, checks::kDefaultSeed).pass);
}

TEST_CASE("Q has order g") {
  for (int g : {3, 4, 5}) CHECK(checks::check_suzuki_q_order(g).pass);
}

TEST_CASE("Q to a smaller power is not the identity") {
  const SuzukiGenerators s = suzuki_generators(4);
  Endo p = s.q;
  for (int i = 1; i < 3; ++i) {
    CHECK_FALSE(p.is_identity());
    p = compose(s.q, p);
  }
}

TEST_CASE("frozen abelianization of the Luft map at genus 3") {
  const SuzukiGenerators s = suzuki_generators(3);
  // a1 -> a1 + a2, a2 -> -a2, b1 -> b1, b2 -> b1 - b2; commutators die.
  IntMat expect = int_identity(6);
  expect(1, 0) = 1;   // a1 picks up a2
  expect(1, 1) = -1;  // a2 negates
  expect(3, 4) = 1;   // b2 picks up b1
  expect(4, 4) = -1;  // b2 negates
  CHECK(equal(s.u_ab.entries(), expect));
}

TEST_CASE("frozen abelianization of the knob twist at genus 3") {
  const SuzukiGenerators s = suzuki_generators(3);
  IntMat expect = int_identity(6);
  expect(0, 0) = -1;
  expect(3, 3) = -1;
  CHECK(equal(s.sigma_ab.entries(), expect));
}

TEST_CASE("P swaps the first two handles on homology") {
  const SuzukiGenerators s = suzuki_generators(3);
  const HomologyVector a1 = HomologyVector::basis_a(3, 0);
  const HomologyVector a2 = HomologyVector::basis_a(3, 1);
  const HomologyVector b1 = HomologyVector::basis_b(3, 0);
  const HomologyVector b2 = HomologyVector::basis_b(3, 1);
  CHECK(s.p_ab.apply(a1) == a2);
  CHECK(s.p_ab.apply(a2) == a1);
  CHECK(s.p_ab.apply(b1) == b2);
  CHECK(s.p_ab.apply(b2) == b1);
}

TEST_CASE("every tabled abelianization preserves the Lagrangian B") {
  for (int g : {3, 4, 5}) CHECK(checks::check_suzuki_sp_b(g).pass);
}

TEST_CASE("abelianization is functorial on the tabled generators") {
  CHECK(
      checks::check_abelianization_functorial(3, 120, checks::kDefaultSeed).pass);
}

TEST_CASE("U is invertible on homology") {
  const SuzukiGenerators s = suzuki_generators(3);
  const Int d = det(s.u_ab.entries());
  CHECK((d == 1 || d == -1));
}

TEST_CASE("rank mismatches are rejected") {
  CHECK_THROWS_AS(apply(Endo::identity(3), FreeWord(4)), ValidationError);
  CHECK_THROWS_AS(compose(Endo::identity(3), Endo::identity(4)),
                  ValidationError);
  CHECK_THROWS_AS(gen(3, 0) * gen(4, 0), ValidationError);
  CHECK_THROWS_AS(FreeWord(2, {Letter{5, 1}}), ValidationError);
  CHECK_THROWS_AS(FreeWord(2, {Letter{0, 2}}), ValidationError);
  CHECK_THROWS_AS(suzuki_generators(2), ValidationError);
}
