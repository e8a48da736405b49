#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "casson/cocycle.hpp"

namespace casson {

// Mapping-class words built from annotated twist generators. Only the
// homological shadow is modeled: a General factor acts by a transvection
// power, Separating and BoundingPair factors act trivially on H and carry
// the payload the Johnson homomorphism tau needs.

struct GeneralTwist {
  HomologyVector c;
  Int power;
};

struct SeparatingTwist {
  int genus;
  Int power;
  /// Known value of the invariant on this factor, when the caller has one.
  std::optional<Int> f_value;
};

struct SpinePair {
  HomologyVector x;
  HomologyVector y;
};

/// The twist pair T_beta T_beta'^-1 as one token. The spine (x_i, y_i) spans
/// the subsurface the pair bounds; c is the common class of the two curves.
/// Constraints: omega(x_i, y_j) = delta_ij, omega(x_i, x_j) =
/// omega(y_i, y_j) = 0, omega(x_i, c) = omega(y_i, c) = 0, and c is a
/// nonzero primitive class. tau of the factor is power * (sum x_i ^ y_i) ^ c.
class BoundingPairTwist {
 public:
  BoundingPairTwist(std::vector<SpinePair> spine, HomologyVector c, Int power);
  const std::vector<SpinePair>& spine() const { return spine_; }
  const HomologyVector& c() const { return c_; }
  const Int& power() const { return power_; }
  int genus() const { return c_.genus(); }

 private:
  std::vector<SpinePair> spine_;
  HomologyVector c_;
  Int power_;
};

class TwistGenerator;

struct ConjugatedTwist {
  SymplecticMatrix by;
  std::shared_ptr<const TwistGenerator> inner;
};

class TwistGenerator {
 public:
  enum class Kind { general, separating, bounding_pair, conjugated };

  explicit TwistGenerator(GeneralTwist g);
  explicit TwistGenerator(SeparatingTwist s);
  explicit TwistGenerator(BoundingPairTwist b);
  TwistGenerator(SymplecticMatrix by, TwistGenerator inner);

  Kind kind() const;
  int genus() const;
  const GeneralTwist& general() const;
  const SeparatingTwist& separating() const;
  const BoundingPairTwist& bounding_pair() const;
  const ConjugatedTwist& conjugated() const;

  /// Acts trivially on H by type: separating, bounding-pair, or a conjugate
  /// of one. General factors are excluded even when their power vanishes.
  bool torelli_factor() const;

 private:
  std::variant<GeneralTwist, SeparatingTwist, BoundingPairTwist,
               ConjugatedTwist>
      v_;
};

class TwistWord {
 public:
  TwistWord(int genus, std::vector<TwistGenerator> factors);
  int genus() const { return genus_; }
  const std::vector<TwistGenerator>& factors() const { return factors_; }

 private:
  int genus_;
  std::vector<TwistGenerator> factors_;
};

SymplecticMatrix generator_action(const TwistGenerator& f);

/// Product of the factor actions in word order.
SymplecticMatrix h1_action(const TwistWord& w);

bool is_torelli(const TwistWord& w);

ExteriorCubeVector tau(const TwistGenerator& f);

/// Sum of the factor values; requires every factor to be Torelli by type
/// (tau is undefined on General factors).
ExteriorCubeVector tau(const TwistWord& w);

/// Necessary-condition classification of a Torelli word by the W-support of
/// tau. tb_compatible when the W_B part vanishes (tau lands in the image of
/// the inner-handlebody Torelli subgroup), ta_compatible when the W_A part
/// vanishes, ab_compatible when both do. This is never a membership test.
struct SideClassification {
  bool tb_compatible = false;
  bool ta_compatible = false;
  bool ab_compatible = false;
  bool neither() const { return !tb_compatible && !ta_compatible; }
};

SideClassification classify_side(const TwistWord& w);

/// Homology-level lantern relation for classes c0 = c1+c2+c3 and
/// c_ij = c_i + c_j: compares T_{c0}T_{c1}T_{c2}T_{c3} with
/// T_{c12}T_{c13}T_{c23}. Holds whenever the c_i are pairwise
/// omega-orthogonal; a non-identity residual is reported, not thrown.
struct LanternReport {
  bool pairwise_orthogonal = false;
  bool holds = false;
  SymplecticMatrix residual;
};

LanternReport lantern_check(const HomologyVector& c1, const HomologyVector& c2,
                            const HomologyVector& c3);

TwistGenerator stabilize(const TwistGenerator& f, int new_genus,
                         int handle_offset = 0);
TwistWord stabilize(const TwistWord& w, int new_genus);
TwistWord embed_word(const TwistWord& w, int new_genus, int handle_offset);

TwistWord concat(const TwistWord& u, const TwistWord& v);
TwistWord inverse(const TwistWord& w);
TwistWord conjugate(const SymplecticMatrix& m, const TwistWord& w);

}  // namespace casson
