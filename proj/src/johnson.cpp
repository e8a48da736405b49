#include "casson/johnson.hpp"

namespace casson {

BoundingPairTwist::BoundingPairTwist(std::vector<SpinePair> spine,
                                     HomologyVector c, Int power)
    : spine_(std::move(spine)), c_(std::move(c)), power_(std::move(power)) {
  if (c_.is_zero())
    throw ValidationError("bounding pair: c must be a nonzero class");
  if (!c_.is_primitive())
    throw ValidationError(
        "bounding pair: c must be primitive (a non-separating curve class)");
  for (std::size_t i = 0; i < spine_.size(); ++i) {
    const SpinePair& p = spine_[i];
    if (p.x.genus() != c_.genus() || p.y.genus() != c_.genus())
      throw ValidationError("bounding pair: genus mismatch in the spine");
    if (omega(p.x, c_) != 0 || omega(p.y, c_) != 0)
      throw ValidationError(
          "bounding pair: spine entry " + std::to_string(i) +
          " is not omega-orthogonal to c");
    for (std::size_t j = 0; j < spine_.size(); ++j) {
      const SpinePair& q = spine_[j];
      if (omega(p.x, q.x) != 0 || omega(p.y, q.y) != 0)
        throw ValidationError(
            "bounding pair: spine classes are not Lagrangian (x_i, x_j or "
            "y_i, y_j pair with nonzero omega)");
      const Int expected = (i == j) ? 1 : 0;
      if (omega(p.x, q.y) != expected)
        throw ValidationError("bounding pair: omega(x_" + std::to_string(i) +
                              ", y_" + std::to_string(j) + ") != " +
                              expected.get_str());
    }
  }
}

TwistGenerator::TwistGenerator(GeneralTwist g) : v_(std::move(g)) {}
TwistGenerator::TwistGenerator(SeparatingTwist s) : v_(std::move(s)) {
  if (std::get<SeparatingTwist>(v_).genus < 1)
    throw ValidationError("separating twist: genus must be positive");
}
TwistGenerator::TwistGenerator(BoundingPairTwist b) : v_(std::move(b)) {}
TwistGenerator::TwistGenerator(SymplecticMatrix by, TwistGenerator inner)
    : v_(ConjugatedTwist{
          std::move(by),
          std::make_shared<const TwistGenerator>(std::move(inner))}) {
  const ConjugatedTwist& c = std::get<ConjugatedTwist>(v_);
  if (c.by.genus() != c.inner->genus())
    throw ValidationError("conjugated twist: genus mismatch");
}

TwistGenerator::Kind TwistGenerator::kind() const {
  switch (v_.index()) {
    case 0: return Kind::general;
    case 1: return Kind::separating;
    case 2: return Kind::bounding_pair;
    default: return Kind::conjugated;
  }
}

int TwistGenerator::genus() const {
  switch (kind()) {
    case Kind::general: return general().c.genus();
    case Kind::separating: return separating().genus;
    case Kind::bounding_pair: return bounding_pair().genus();
    case Kind::conjugated: return conjugated().by.genus();
  }
  throw InternalError("unreachable");
}

const GeneralTwist& TwistGenerator::general() const {
  return std::get<GeneralTwist>(v_);
}
const SeparatingTwist& TwistGenerator::separating() const {
  return std::get<SeparatingTwist>(v_);
}
const BoundingPairTwist& TwistGenerator::bounding_pair() const {
  return std::get<BoundingPairTwist>(v_);
}
const ConjugatedTwist& TwistGenerator::conjugated() const {
  return std::get<ConjugatedTwist>(v_);
}

bool TwistGenerator::torelli_factor() const {
  switch (kind()) {
    case Kind::general: return false;
    case Kind::separating:
    case Kind::bounding_pair: return true;
    case Kind::conjugated: return conjugated().inner->torelli_factor();
  }
  return false;
}

TwistWord::TwistWord(int genus, std::vector<TwistGenerator> factors)
    : genus_(genus), factors_(std::move(factors)) {
  if (genus < 1) throw ValidationError("word: genus must be positive");
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].genus() != genus_)
      throw ValidationError("word: factor " + std::to_string(i) +
                            " has genus " +
                            std::to_string(factors_[i].genus()) +
                            ", expected " + std::to_string(genus_));
}

SymplecticMatrix generator_action(const TwistGenerator& f) {
  switch (f.kind()) {
    case TwistGenerator::Kind::general:
      return transvection(f.general().c, f.general().power);
    case TwistGenerator::Kind::separating:
      return SymplecticMatrix::identity(f.genus());
    case TwistGenerator::Kind::bounding_pair:
      return SymplecticMatrix::identity(f.genus());
    case TwistGenerator::Kind::conjugated: {
      const ConjugatedTwist& c = f.conjugated();
      return c.by * generator_action(*c.inner) * c.by.inverse();
    }
  }
  throw InternalError("unreachable");
}

SymplecticMatrix h1_action(const TwistWord& w) {
  SymplecticMatrix m = SymplecticMatrix::identity(w.genus());
  for (const TwistGenerator& f : w.factors()) m = m * generator_action(f);
  return m;
}

bool is_torelli(const TwistWord& w) { return h1_action(w).is_identity(); }

ExteriorCubeVector tau(const TwistGenerator& f) {
  switch (f.kind()) {
    case TwistGenerator::Kind::general:
      throw ValidationError(
          "tau: undefined on a General twist factor (not Torelli by type)");
    case TwistGenerator::Kind::separating:
      return ExteriorCubeVector(f.genus());
    case TwistGenerator::Kind::bounding_pair: {
      const BoundingPairTwist& b = f.bounding_pair();
      ExteriorCubeVector v(f.genus());
      for (const SpinePair& p : b.spine())
        v = v + wedge3(p.x, p.y, b.c());
      return v * b.power();
    }
    case TwistGenerator::Kind::conjugated: {
      const ConjugatedTwist& c = f.conjugated();
      return induced_action(c.by, tau(*c.inner));
    }
  }
  throw InternalError("unreachable");
}

ExteriorCubeVector tau(const TwistWord& w) {
  ExteriorCubeVector v(w.genus());
  for (std::size_t i = 0; i < w.factors().size(); ++i) {
    const TwistGenerator& f = w.factors()[i];
    if (!f.torelli_factor())
      throw ValidationError("tau: factor " + std::to_string(i) +
                            " is not Torelli by type (General twist); tau is "
                            "undefined on this word");
    v = v + tau(f);
  }
  return v;
}

SideClassification classify_side(const TwistWord& w) {
  if (!is_torelli(w))
    throw ValidationError("classify: word does not act trivially on homology");
  const WSplit s = w_split(tau(w));
  SideClassification out;
  out.tb_compatible = s.wB.is_zero();
  out.ta_compatible = s.wA.is_zero();
  out.ab_compatible = out.tb_compatible && out.ta_compatible;
  return out;
}

LanternReport lantern_check(const HomologyVector& c1, const HomologyVector& c2,
                            const HomologyVector& c3) {
  if (c1.genus() != c2.genus() || c2.genus() != c3.genus())
    throw ValidationError("lantern: genus mismatch");
  const HomologyVector c0 = c1 + c2 + c3;
  const SymplecticMatrix lhs =
      transvection(c0) * transvection(c1) * transvection(c2) * transvection(c3);
  const SymplecticMatrix rhs = transvection(c1 + c2) * transvection(c1 + c3) *
                               transvection(c2 + c3);
  LanternReport rep{.pairwise_orthogonal = omega(c1, c2) == 0 &&
                                           omega(c1, c3) == 0 &&
                                           omega(c2, c3) == 0,
                    .holds = false,
                    .residual = lhs * rhs.inverse()};
  rep.holds = rep.residual.is_identity();
  return rep;
}

TwistGenerator stabilize(const TwistGenerator& f, int new_genus,
                         int handle_offset) {
  switch (f.kind()) {
    case TwistGenerator::Kind::general:
      return TwistGenerator(GeneralTwist{
          embed(f.general().c, new_genus, handle_offset), f.general().power});
    case TwistGenerator::Kind::separating: {
      SeparatingTwist s = f.separating();
      s.genus = new_genus;
      return TwistGenerator(std::move(s));
    }
    case TwistGenerator::Kind::bounding_pair: {
      const BoundingPairTwist& b = f.bounding_pair();
      std::vector<SpinePair> spine;
      spine.reserve(b.spine().size());
      for (const SpinePair& p : b.spine())
        spine.push_back(SpinePair{embed(p.x, new_genus, handle_offset),
                                  embed(p.y, new_genus, handle_offset)});
      return TwistGenerator(BoundingPairTwist(
          std::move(spine), embed(b.c(), new_genus, handle_offset),
          b.power()));
    }
    case TwistGenerator::Kind::conjugated: {
      const ConjugatedTwist& c = f.conjugated();
      return TwistGenerator(embed(c.by, new_genus, handle_offset),
                            stabilize(*c.inner, new_genus, handle_offset));
    }
  }
  throw InternalError("unreachable");
}

TwistWord embed_word(const TwistWord& w, int new_genus, int handle_offset) {
  if (handle_offset < 0 || w.genus() + handle_offset > new_genus)
    throw ValidationError("embed: handles do not fit in the target genus");
  std::vector<TwistGenerator> factors;
  factors.reserve(w.factors().size());
  for (const TwistGenerator& f : w.factors())
    factors.push_back(stabilize(f, new_genus, handle_offset));
  return TwistWord(new_genus, std::move(factors));
}

TwistWord stabilize(const TwistWord& w, int new_genus) {
  if (new_genus < w.genus())
    throw ValidationError("stabilize: target genus " +
                          std::to_string(new_genus) +
                          " is below the word's genus " +
                          std::to_string(w.genus()));
  return embed_word(w, new_genus, 0);
}

TwistWord concat(const TwistWord& u, const TwistWord& v) {
  if (u.genus() != v.genus())
    throw ValidationError("concat: genus mismatch");
  std::vector<TwistGenerator> factors = u.factors();
  factors.insert(factors.end(), v.factors().begin(), v.factors().end());
  return TwistWord(u.genus(), std::move(factors));
}

namespace {

TwistGenerator inverse_factor(const TwistGenerator& f) {
  switch (f.kind()) {
    case TwistGenerator::Kind::general:
      return TwistGenerator(GeneralTwist{f.general().c, -f.general().power});
    case TwistGenerator::Kind::separating: {
      const SeparatingTwist& s = f.separating();
      SeparatingTwist inv{s.genus, -s.power, std::nullopt};
      if (s.f_value) inv.f_value = -*s.f_value;
      return TwistGenerator(std::move(inv));
    }
    case TwistGenerator::Kind::bounding_pair: {
      const BoundingPairTwist& b = f.bounding_pair();
      return TwistGenerator(BoundingPairTwist(b.spine(), b.c(), -b.power()));
    }
    case TwistGenerator::Kind::conjugated: {
      const ConjugatedTwist& c = f.conjugated();
      return TwistGenerator(c.by, inverse_factor(*c.inner));
    }
  }
  throw InternalError("unreachable");
}

}  // namespace

TwistWord inverse(const TwistWord& w) {
  std::vector<TwistGenerator> factors;
  factors.reserve(w.factors().size());
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
    factors.push_back(inverse_factor(*it));
  return TwistWord(w.genus(), std::move(factors));
}

TwistWord conjugate(const SymplecticMatrix& m, const TwistWord& w) {
  if (m.genus() != w.genus())
    throw ValidationError("conjugate: genus mismatch");
  std::vector<TwistGenerator> factors;
  factors.reserve(w.factors().size());
  for (const TwistGenerator& f : w.factors())
    factors.push_back(TwistGenerator(m, f));
  return TwistWord(w.genus(), std::move(factors));
}

}  // namespace casson
