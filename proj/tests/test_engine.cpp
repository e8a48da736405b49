#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "casson/checks.hpp"
#include "casson/engine.hpp"

using namespace casson;

namespace {

HomologyVector a(int g, int i) { return HomologyVector::basis_a(g, i); }
HomologyVector b(int g, int i) { return HomologyVector::basis_b(g, i); }

Block phi_a_block() {
  return Block{TwistWord(3, {TwistGenerator(BoundingPairTwist(
                                {SpinePair{a(3, 0), b(3, 0) - a(3, 2)}},
                                a(3, 1), 1))}),
               std::nullopt, Side::tb};
}

Block phi_b_block() {
  return Block{TwistWord(3, {TwistGenerator(BoundingPairTwist(
                                {SpinePair{a(3, 0) + b(3, 2), b(3, 0)}},
                                b(3, 1), 1))}),
               std::nullopt, Side::ta};
}

AnnotatedWord worked_example() {
  return AnnotatedWord(3, {phi_a_block(), phi_b_block()});
}

SeifertMatrix trefoil() {
  IntMat v(2, 2);
  v(0, 0) = -1; v(0, 1) = 1;
  v(1, 0) = 0;  v(1, 1) = -1;
  return SeifertMatrix(std::move(v));
}

SeifertMatrix figure_eight() {
  IntMat v(2, 2);
  v(0, 0) = 1; v(0, 1) = 1;
  v(1, 0) = 0; v(1, 1) = -1;
  return SeifertMatrix(std::move(v));
}

}  // namespace

TEST_CASE("the worked example evaluates to F = 2, lambda = -2") {
  const AnnotatedWord w = worked_example();
  CHECK(eval_F(w) == 2);
  CHECK(eval_lambda(w) == -2);
  CHECK(eval_lambda(w, true) == 2);
}

TEST_CASE("the empty word is the standard sphere") {
  const AnnotatedWord w(3, {});
  CHECK(eval_F(w) == 0);
  CHECK(eval_lambda(w) == 0);
}

TEST_CASE("a single side-tagged block evaluates to zero") {
  CHECK(eval_F(AnnotatedWord(3, {phi_a_block()})) == 0);
  CHECK(eval_F(AnnotatedWord(3, {phi_b_block()})) == 0);
}

TEST_CASE("annotation validation names the offending block") {
  // Untagged block with no declared F.
  Block blank = phi_a_block();
  blank.side = Side::none;
  try {
    AnnotatedWord(3, {phi_a_block(), blank});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("block 1") != std::string::npos);
  }

  // TA tag on a word whose tau has a W_A part.
  Block mistagged = phi_a_block();
  mistagged.side = Side::ta;
  CHECK_THROWS_AS(AnnotatedWord(3, {mistagged}), ValidationError);

  // Side tag plus a nonzero declared value.
  Block contradictory = phi_a_block();
  contradictory.declared_f = 7;
  CHECK_THROWS_AS(AnnotatedWord(3, {contradictory}), ValidationError);

  // Tagged blocks may carry an explicit zero.
  Block zero_ok = phi_a_block();
  zero_ok.declared_f = 0;
  CHECK(eval_F(AnnotatedWord(3, {zero_ok})) == 0);

  // Non-Torelli block.
  Block general{TwistWord(3, {TwistGenerator(GeneralTwist{a(3, 0), 1})}),
                Int(0), Side::none};
  CHECK_THROWS_AS(AnnotatedWord(3, {general}), ValidationError);
}

TEST_CASE("declared values enter the fold") {
  Block k{TwistWord(3, {TwistGenerator(SeparatingTwist{3, 1, std::nullopt})}),
          Int(5), Side::none};
  CHECK(eval_F(AnnotatedWord(3, {k})) == 5);
  CHECK(eval_F(AnnotatedWord(3, {k, k})) == 10);
  CHECK(eval_F(AnnotatedWord(3, {k, phi_a_block(), k})) == 10);
}

TEST_CASE("connected sum doubles the worked example") {
  const AnnotatedWord w = worked_example();
  const AnnotatedWord sum = connected_sum(w, w);
  CHECK(sum.genus() == 6);
  CHECK(eval_F(sum) == 4);
  CHECK(eval_lambda(sum) == -4);
}

TEST_CASE("connected sum with the empty word changes nothing") {
  const AnnotatedWord w = worked_example();
  const AnnotatedWord sum = connected_sum(w, AnnotatedWord(2, {}));
  CHECK(sum.genus() == 5);
  CHECK(eval_F(sum) == eval_F(w));
}

TEST_CASE("cross pairing vanishes on disjoint handle support") {
  CHECK(checks::check_cross_pairing_vanishes(100, checks::kDefaultSeed).pass);
  CHECK(checks::check_connected_sum_additivity(60, checks::kDefaultSeed).pass);
}

TEST_CASE("surgery increments are the declared twist value") {
  checks::Rng rng(47);
  const AnnotatedWord w(
      3, {Block{checks::random_bp_word(rng, 3, 2), Int(3), Side::none}});
  const SeparatingTwist k{3, 1, Int(7)};
  const std::vector<Int> series = surgery_increment_series(w, k, 10);
  REQUIRE(series.size() == 10);
  for (std::size_t i = 1; i < series.size(); ++i)
    CHECK(series[i] - series[i - 1] == 7);

  const SeparatingTwist flat{3, 1, Int(0)};
  const std::vector<Int> constant = surgery_increment_series(w, flat, 5);
  for (const Int& v : constant) CHECK(v == constant.front());

  const SeparatingTwist unknown{3, 1, std::nullopt};
  CHECK_THROWS_AS(surgery_increment_series(w, unknown, 3), ValidationError);
}

TEST_CASE("boundary link alternating sum vanishes") {
  CHECK(checks::check_boundary_link_sum(32, checks::kDefaultSeed).pass);
  const AnnotatedWord w(3, {});
  CHECK(boundary_link_alternating_sum(w, SeparatingTwist{3, 1, Int(4)},
                                      SeparatingTwist{3, 1, Int(-2)}, 3,
                                      2) == 0);
}

TEST_CASE("fold behaves like a trivialized cocycle") {
  CHECK(checks::check_fold_associativity(3, 80, checks::kDefaultSeed).pass);
  CHECK(checks::check_inverse_f_identity(3, 100, checks::kDefaultSeed).pass);
  CHECK(checks::check_side_padding_invariance(3, 60, checks::kDefaultSeed).pass);
  CHECK(checks::check_conjugation_invariance(3, 60, checks::kDefaultSeed).pass);
  CHECK(
      checks::check_stabilization_invariance(3, 60, checks::kDefaultSeed).pass);
  CHECK(checks::check_lambda_sign(3, 60, checks::kDefaultSeed).pass);
}

TEST_CASE("alexander polynomial of the trefoil") {
  const LaurentPolynomial d = alexander_from_seifert(trefoil());
  CHECK(d == LaurentPolynomial({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(d.is_symmetric());
  CHECK(d.at_one() == 1);
  CHECK(half_second_derivative_at_one(d) == 1);
}

TEST_CASE("alexander polynomial of the unknot") {
  const LaurentPolynomial d = alexander_from_seifert(SeifertMatrix(IntMat(0, 0)));
  CHECK(d == LaurentPolynomial({{0, 1}}));
  CHECK(half_second_derivative_at_one(d) == 0);
}

TEST_CASE("alexander polynomial of the figure eight") {
  const LaurentPolynomial d = alexander_from_seifert(figure_eight());
  CHECK(d == LaurentPolynomial({{-1, -1}, {0, 3}, {1, -1}}));
  CHECK(half_second_derivative_at_one(d) == -1);
}

TEST_CASE("invalid Seifert data is rejected") {
  CHECK_THROWS_AS(alexander_from_seifert(SeifertMatrix(int_zero(2, 2))),
                  ValidationError);
  CHECK_THROWS_AS(SeifertMatrix(int_zero(3, 3)), ValidationError);
  CHECK_THROWS_AS(SeifertMatrix(int_zero(2, 3)), ValidationError);
}

TEST_CASE("surgery values") {
  CHECK(casson_surgery(trefoil(), 1) == 1);       // the Poincare sphere
  CHECK(casson_surgery(trefoil(), 0) == 0);       // no surgery
  CHECK(casson_surgery(trefoil(), 2) == 2);
  CHECK(casson_surgery(trefoil(), -1) == -1);
  CHECK(casson_surgery(trefoil(), 1, -1) == -1);  // flipped handedness
  CHECK(casson_surgery(figure_eight(), 1) == -1);
  CHECK_THROWS_AS(casson_surgery(trefoil(), 1, 2), ValidationError);
}

TEST_CASE("laurent polynomial drops zero coefficients") {
  const LaurentPolynomial p({{2, 0}, {0, 1}});
  CHECK(p.coeffs().size() == 1);
  CHECK(p.coeff(2) == 0);
}

TEST_CASE("genus-h bounding pairs feed the fold") {
  const TwistWord w(
      4, {TwistGenerator(BoundingPairTwist(
             {SpinePair{a(4, 0), b(4, 0)}, SpinePair{a(4, 1), b(4, 1)}},
             a(4, 2), 1))});
  const AnnotatedWord word(4, {Block{w, Int(0), Side::none}});
  CHECK(eval_F(word) == 0);
  CHECK(tau(word) == tau(w));
}
