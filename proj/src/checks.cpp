#include "casson/checks.hpp"

#include <functional>

namespace casson::checks {

namespace {

Rng seeded(unsigned long seed, const std::string& name) {
  std::seed_seq seq{seed, static_cast<unsigned long>(std::hash<std::string>{}(
                              name))};
  return Rng(seq);
}

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

CheckResult make_result(const std::string& name, bool pass,
                        io::json details = io::json::object()) {
  return CheckResult{name, pass, std::move(details)};
}

}  // namespace

Int random_int(Rng& rng, long lo, long hi) { return Int(uniform(rng, lo, hi)); }

HomologyVector random_vector(Rng& rng, int genus, long bound) {
  IntVec v(2L * genus);
  for (long i = 0; i < v.size(); ++i) v(i) = uniform(rng, -bound, bound);
  return HomologyVector(genus, std::move(v));
}

IntMat random_gl(Rng& rng, int g, int steps) {
  IntMat m = int_identity(g);
  for (int s = 0; s < steps; ++s) {
    const long i = uniform(rng, 0, g - 1);
    long j = uniform(rng, 0, g - 1);
    switch (uniform(rng, 0, 2)) {
      case 0: {  // add ±row j to row i
        if (i == j) j = (j + 1) % g;
        const Int f = uniform(rng, 0, 1) ? 1 : -1;
        for (long c = 0; c < g; ++c) m(i, c) += f * m(j, c);
        break;
      }
      case 1:  // swap rows
        if (i != j) m.row(i).swap(m.row(j));
        break;
      default:  // negate a row
        for (long c = 0; c < g; ++c) m(i, c) = -m(i, c);
    }
  }
  return m;
}

SymplecticMatrix random_symplectic(Rng& rng, int genus, int twists) {
  SymplecticMatrix m = SymplecticMatrix::identity(genus);
  for (int t = 0; t < twists; ++t)
    m = m * transvection(random_vector(rng, genus, 2),
                         random_int(rng, -2, 2));
  return m;
}

SymplecticMatrix random_sp_b(Rng& rng, int genus) {
  const IntMat g = random_gl(rng, genus);
  IntMat s(genus, genus);
  for (long i = 0; i < genus; ++i)
    for (long j = i; j < genus; ++j) {
      s(i, j) = uniform(rng, -3, 3);
      s(j, i) = s(i, j);
    }
  const IntMat lower = unimodular_inverse(g).transpose() * s;  // tG^-1 S
  IntMat m = int_zero(2L * genus, 2L * genus);
  const IntMat ginv_t = unimodular_inverse(g).transpose();
  for (long i = 0; i < genus; ++i)
    for (long j = 0; j < genus; ++j) {
      m(i, j) = g(i, j);
      m(genus + i, j) = lower(i, j);
      m(genus + i, genus + j) = ginv_t(i, j);
    }
  return SymplecticMatrix(genus, std::move(m));
}

BoundingPairTwist random_bounding_pair(Rng& rng, int genus) {
  const int h = genus >= 3 ? static_cast<int>(uniform(rng, 1, 2)) : 1;
  std::vector<SpinePair> spine;
  for (int i = 0; i < h; ++i)
    spine.push_back(SpinePair{HomologyVector::basis_a(genus, i),
                              HomologyVector::basis_b(genus, i)});
  // c lives on the remaining handles, made primitive.
  IntVec c(2L * genus);
  for (long i = 0; i < c.size(); ++i) c(i) = 0;
  for (;;) {
    for (int i = h; i < genus; ++i) {
      c(i) = uniform(rng, -2, 2);
      c(genus + i) = uniform(rng, -2, 2);
    }
    Int g = 0;
    for (long i = 0; i < c.size(); ++i) g = gcd(g, c(i));
    if (g == 0) continue;
    for (long i = 0; i < c.size(); ++i) c(i) /= g;
    break;
  }
  const SymplecticMatrix m = random_symplectic(rng, genus, 4);
  std::vector<SpinePair> conj_spine;
  conj_spine.reserve(spine.size());
  for (const SpinePair& p : spine)
    conj_spine.push_back(SpinePair{m.apply(p.x), m.apply(p.y)});
  return BoundingPairTwist(std::move(conj_spine),
                           m.apply(HomologyVector(genus, std::move(c))),
                           random_int(rng, -2, 2) * 2 + 1);
}

TwistWord random_bp_word(Rng& rng, int genus, int length) {
  std::vector<TwistGenerator> factors;
  factors.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    TwistGenerator f{random_bounding_pair(rng, genus)};
    if (uniform(rng, 0, 3) == 0)
      f = TwistGenerator(random_symplectic(rng, genus, 3), std::move(f));
    factors.push_back(std::move(f));
  }
  return TwistWord(genus, std::move(factors));
}

ExteriorCubeVector random_cube(Rng& rng, int genus, int terms) {
  const std::vector<Triple> basis = cube_monomials(genus);
  std::map<Triple, Int> c;
  for (int t = 0; t < terms; ++t)
    c[basis[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<long>(basis.size()) - 1))]] +=
        random_int(rng, -3, 3);
  return ExteriorCubeVector(genus, std::move(c));
}

std::array<HomologyVector, 3> random_orthogonal_triple(Rng& rng, int genus) {
  const SymplecticMatrix m = random_symplectic(rng, genus, 4);
  auto b_supported = [&]() {
    IntVec v(2L * genus);
    for (long i = 0; i < v.size(); ++i) v(i) = 0;
    for (int i = 0; i < genus; ++i) v(genus + i) = uniform(rng, -2, 2);
    return HomologyVector(genus, std::move(v));
  };
  return {m.apply(b_supported()), m.apply(b_supported()),
          m.apply(b_supported())};
}

ExteriorCubeVector naive_wedge(const HomologyVector& x,
                               const HomologyVector& y,
                               const HomologyVector& z) {
  const int genus = x.genus();
  std::map<Triple, Int> c;
  for (const Triple& t : cube_monomials(genus)) {
    const Int d = x[t[0]] * (y[t[1]] * z[t[2]] - y[t[2]] * z[t[1]]) -
                  x[t[1]] * (y[t[0]] * z[t[2]] - y[t[2]] * z[t[0]]) +
                  x[t[2]] * (y[t[0]] * z[t[1]] - y[t[1]] * z[t[0]]);
    if (d != 0) c[t] = d;
  }
  return ExteriorCubeVector(genus, std::move(c));
}

// -- symplectic core -------------------------------------------------------

CheckResult check_omega_bilinear_antisymmetric(int genus, int trials,
                                               unsigned long seed) {
  Rng rng = seeded(seed, "omega");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const HomologyVector x = random_vector(rng, genus);
    const HomologyVector y = random_vector(rng, genus);
    const HomologyVector z = random_vector(rng, genus);
    const Int m = random_int(rng, -4, 4);
    ok = omega(x, y) == -omega(y, x) &&
         omega(x + z * m, y) == omega(x, y) + m * omega(z, y) &&
         omega(x, y + z * m) == omega(x, y) + m * omega(x, z);
  }
  return make_result("omega_bilinear_antisymmetric", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_transvection_power_additivity(int genus, int trials,
                                                unsigned long seed) {
  Rng rng = seeded(seed, "transvection_powers");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const HomologyVector c = random_vector(rng, genus);
    const Int p = random_int(rng, -5, 5);
    const Int q = random_int(rng, -5, 5);
    ok = transvection(c, p) * transvection(c, q) == transvection(c, p + q) &&
         transvection(c, -p) == transvection(c, p).inverse();
  }
  return make_result("transvection_power_additivity", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_constructors_symplectic(int genus, int trials,
                                          unsigned long seed) {
  Rng rng = seeded(seed, "constructors_symplectic");
  bool ok = true;
  const IntMat w = omega_matrix(genus);
  auto preserves = [&](const SymplecticMatrix& m) {
    return equal(IntMat(m.entries().transpose() * w * m.entries()), w);
  };
  for (int t = 0; ok && t < trials; ++t) {
    ok = preserves(transvection(random_vector(rng, genus),
                                random_int(rng, -3, 3))) &&
         preserves(gl_embed(random_gl(rng, genus)));
  }
  return make_result("constructors_symplectic", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_sp_b_semidirect_law(int trials, unsigned long seed) {
  Rng rng = seeded(seed, "sp_b_semidirect");
  bool ok = true;
  long cases = 0;
  for (int genus = 3; ok && genus <= 5; ++genus) {
    for (int t = 0; ok && t < trials; ++t, ++cases) {
      const SymplecticMatrix m1 = random_sp_b(rng, genus);
      const SymplecticMatrix m2 = random_sp_b(rng, genus);
      const BlockPair left = decompose_sp_b(m1 * m2);
      const BlockPair right = compose(decompose_sp_b(m1), decompose_sp_b(m2));
      ok = equal(left.g(), right.g()) && equal(left.s(), right.s());
    }
  }
  return make_result("sp_b_semidirect_law", ok, {{"cases", cases}});
}

// -- exterior cube ----------------------------------------------------------

CheckResult check_minus_id_negation(int genus) {
  const MinusIdReport rep = minus_id_check(genus);
  return make_result("minus_id_negation", rep.all_negated(),
                     {{"genus", genus}, {"monomials", rep.checked}});
}

CheckResult check_action_functorial(int genus, int trials,
                                    unsigned long seed) {
  Rng rng = seeded(seed, "action_functorial");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const SymplecticMatrix m = random_symplectic(rng, genus, 4);
    const SymplecticMatrix n = random_symplectic(rng, genus, 4);
    const ExteriorCubeVector v = random_cube(rng, genus);
    ok = induced_action(m * n, v) == induced_action(m, induced_action(n, v)) &&
         induced_action(SymplecticMatrix::identity(genus), v) == v;
  }
  return make_result("action_functorial", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_w_split_partition(int genus) {
  bool ok = true;
  for (const Triple& t : cube_monomials(genus)) {
    const ExteriorCubeVector mono = ExteriorCubeVector::monomial(genus, t);
    const WSplit s = w_split(mono);
    const int nonzero =
        (!s.wA.is_zero()) + (!s.wAB.is_zero()) + (!s.wB.is_zero());
    ok = ok && nonzero == 1 && (s.wA + s.wAB + s.wB == mono);
  }
  return make_result("w_split_partition", ok,
                     {{"genus", genus}, {"monomials", cube_rank(genus)}});
}

CheckResult check_wedge_oracle(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "wedge_oracle");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const HomologyVector x = random_vector(rng, genus);
    const HomologyVector y = random_vector(rng, genus);
    const HomologyVector z = random_vector(rng, genus);
    ok = wedge3(x, y, z) == naive_wedge(x, y, z) &&
         wedge3(x, x, y).is_zero() &&
         wedge3(x, y, z) == -wedge3(y, x, z);
  }
  return make_result("wedge_oracle_agreement", ok,
                     {{"genus", genus}, {"trials", trials}});
}

// -- the pairing ------------------------------------------------------------

CheckResult check_pairing_bilinear(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "pairing_bilinear");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const ExteriorCubeVector u = random_cube(rng, genus);
    const ExteriorCubeVector u2 = random_cube(rng, genus);
    const ExteriorCubeVector v = random_cube(rng, genus);
    const Int m = random_int(rng, -4, 4);
    ok = j_pairing(u + u2 * m, v) ==
             j_pairing(u, v) + m * j_pairing(u2, v) &&
         j_pairing(v, u + u2 * m) ==
             j_pairing(v, u) + m * j_pairing(v, u2) &&
         jt_pairing(u, v) == j_pairing(v, u);
  }
  return make_result("pairing_bilinear", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_cocycle_identity(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "cocycle_identity");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const ExteriorCubeVector u = random_cube(rng, genus);
    const ExteriorCubeVector v = random_cube(rng, genus);
    const ExteriorCubeVector w = random_cube(rng, genus);
    ok = casson_cocycle(u, v) + casson_cocycle(u + v, w) ==
         casson_cocycle(u, v + w) + casson_cocycle(v, w);
  }
  return make_result("cocycle_identity", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_pairing_vanishing_exhaustive(int genus) {
  bool ok = true;
  const std::vector<Triple> basis = cube_monomials(genus);
  for (const Triple& s : basis) {
    for (const Triple& t : basis) {
      const ExteriorCubeVector u = ExteriorCubeVector::monomial(genus, s);
      const ExteriorCubeVector v = ExteriorCubeVector::monomial(genus, t);
      if (w_class(genus, s) != WClass::a || w_class(genus, t) != WClass::b) {
        ok = ok && j_pairing(u, v) == 0;
      }
      if (w_class(genus, s) != WClass::b || w_class(genus, t) != WClass::a) {
        ok = ok && jt_pairing(u, v) == 0;
      }
    }
  }
  return make_result("pairing_vanishing_exhaustive", ok,
                     {{"genus", genus},
                      {"pairs", cube_rank(genus) * cube_rank(genus)}});
}

CheckResult check_pairing_gl_invariance(int genus, int trials,
                                        unsigned long seed) {
  Rng rng = seeded(seed, "pairing_gl_invariance");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const SymplecticMatrix m = gl_embed(random_gl(rng, genus));
    const ExteriorCubeVector u = random_cube(rng, genus);
    const ExteriorCubeVector v = random_cube(rng, genus);
    ok = j_pairing(induced_action(m, u), induced_action(m, v)) ==
         j_pairing(u, v);
  }
  return make_result("pairing_gl_invariance", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_pairing_stabilization(int genus, int trials,
                                        unsigned long seed) {
  Rng rng = seeded(seed, "pairing_stabilization");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const ExteriorCubeVector u = random_cube(rng, genus);
    const ExteriorCubeVector v = random_cube(rng, genus);
    ok = j_pairing(embed(u, genus + 1), embed(v, genus + 1)) ==
         j_pairing(u, v);
  }
  return make_result("pairing_stabilization", ok,
                     {{"genus", genus},
                      {"target_genus", genus + 1},
                      {"trials", trials}});
}

CheckResult check_pairing_determinant_route(int genus, int trials,
                                            unsigned long seed) {
  Rng rng = seeded(seed, "pairing_determinant_route");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    // A-supported x_i against B-supported y_j: the pairing of the wedges
    // must equal det[omega(y_j, x_i)] computed with no exterior algebra.
    std::vector<HomologyVector> x, y;
    for (int i = 0; i < 3; ++i) {
      IntVec xa(2L * genus), yb(2L * genus);
      for (long k = 0; k < 2 * genus; ++k) {
        xa(k) = k < genus ? uniform(rng, -3, 3) : 0;
        yb(k) = k >= genus ? uniform(rng, -3, 3) : 0;
      }
      x.emplace_back(genus, std::move(xa));
      y.emplace_back(genus, std::move(yb));
    }
    IntMat m(3, 3);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) m(p, q) = omega(y[q], x[p]);
    ok = j_pairing(wedge3(x[0], x[1], x[2]), wedge3(y[0], y[1], y[2])) ==
         det(m);
  }
  return make_result("pairing_determinant_route", ok,
                     {{"genus", genus}, {"trials", trials}});
}

// -- johnson words ----------------------------------------------------------

CheckResult check_tau_additivity(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "tau_additivity");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const TwistWord u = random_bp_word(rng, genus, 2);
    const TwistWord v = random_bp_word(rng, genus, 2);
    ok = tau(concat(u, v)) == tau(u) + tau(v);
  }
  return make_result("tau_additivity", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_tau_equivariance(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "tau_equivariance");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const SymplecticMatrix m = random_symplectic(rng, genus, 4);
    const TwistWord w = random_bp_word(rng, genus, 2);
    ok = tau(conjugate(m, w)) == induced_action(m, tau(w));
  }
  return make_result("tau_equivariance", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_h1_homomorphism(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "h1_homomorphism");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    std::vector<TwistGenerator> fu, fv;
    for (int i = 0; i < 3; ++i) {
      fu.push_back(TwistGenerator(GeneralTwist{random_vector(rng, genus, 2),
                                               random_int(rng, -2, 2)}));
      fv.push_back(TwistGenerator(GeneralTwist{random_vector(rng, genus, 2),
                                               random_int(rng, -2, 2)}));
    }
    const TwistWord u(genus, fu), v(genus, fv);
    ok = h1_action(concat(u, v)) == h1_action(u) * h1_action(v);
  }
  return make_result("h1_homomorphism", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_inverse_word_laws(int genus, int trials,
                                    unsigned long seed) {
  Rng rng = seeded(seed, "inverse_word_laws");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const TwistWord w = random_bp_word(rng, genus, 3);
    ok = tau(inverse(w)) == -tau(w) &&
         h1_action(inverse(w)) == h1_action(w).inverse() &&
         is_torelli(concat(w, inverse(w)));
  }
  return make_result("inverse_word_laws", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_bounding_pair_rejection(int genus, int trials,
                                          unsigned long seed) {
  Rng rng = seeded(seed, "bp_rejection");
  bool ok = true;
  long rejected = 0;
  for (int t = 0; ok && t < trials; ++t) {
    const BoundingPairTwist good = random_bounding_pair(rng, genus);
    auto must_throw = [&](std::function<void()> f) {
      try {
        f();
        return false;
      } catch (const ValidationError&) {
        ++rejected;
        return true;
      }
    };
    // c = 0, non-primitive c, broken spine pairing, broken orthogonality.
    ok = must_throw([&] {
           BoundingPairTwist(good.spine(), HomologyVector::zero(genus),
                             good.power());
         }) &&
         must_throw([&] {
           BoundingPairTwist(good.spine(), good.c() * Int(2), good.power());
         }) &&
         must_throw([&] {
           std::vector<SpinePair> spine = good.spine();
           spine[0].y = spine[0].y * Int(2);
           BoundingPairTwist(spine, good.c(), good.power());
         }) &&
         must_throw([&] {
           std::vector<SpinePair> spine = good.spine();
           spine[0].x = spine[0].x + good.c();
           // omega(x_0 + c, y_0) stays 1, but x_0 + c is no longer
           // orthogonal to c unless omega(c, y_0) = 0 = omega(x_0, c);
           // break it explicitly instead: shift c by y_0.
           BoundingPairTwist(good.spine(), good.c() + spine[0].y,
                             good.power());
         });
  }
  return make_result("bounding_pair_rejection", ok,
                     {{"genus", genus}, {"rejected", rejected}});
}

CheckResult check_bp_action_model(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "bp_action_model");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    // The atomic pair token must act like T_c T_c^-1 at the homology level:
    // both are the identity.
    const BoundingPairTwist bp = random_bounding_pair(rng, genus);
    const SymplecticMatrix two_twists =
        transvection(bp.c(), bp.power()) * transvection(bp.c(), -bp.power());
    ok = generator_action(TwistGenerator(bp)) == two_twists &&
         two_twists.is_identity();
  }
  return make_result("bp_action_model", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_lantern_standard(int genus) {
  const LanternReport b123 =
      lantern_check(HomologyVector::basis_b(genus, 0),
                    HomologyVector::basis_b(genus, 1),
                    HomologyVector::basis_b(genus, 2));
  const LanternReport degenerate =
      lantern_check(HomologyVector::basis_b(genus, 0),
                    HomologyVector::basis_b(genus, 0),
                    HomologyVector::basis_b(genus, 1));
  const LanternReport zero = lantern_check(HomologyVector::zero(genus),
                                           HomologyVector::zero(genus),
                                           HomologyVector::zero(genus));
  const bool ok = b123.holds && b123.pairwise_orthogonal && degenerate.holds &&
                  zero.holds;
  return make_result("lantern_standard", ok, {{"genus", genus}});
}

CheckResult check_lantern_random(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "lantern_random");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const auto [c1, c2, c3] = random_orthogonal_triple(rng, genus);
    const LanternReport rep = lantern_check(c1, c2, c3);
    ok = rep.pairwise_orthogonal && rep.holds;
  }
  return make_result("lantern_random_orthogonal", ok,
                     {{"genus", genus}, {"trials", trials}});
}

// -- evaluation engine -------------------------------------------------------

namespace {

AnnotatedWord random_annotated(Rng& rng, int genus, int blocks) {
  std::vector<Block> bs;
  for (int i = 0; i < blocks; ++i)
    bs.push_back(Block{random_bp_word(rng, genus, 2),
                       random_int(rng, -5, 5), Side::none});
  return AnnotatedWord(genus, std::move(bs));
}

// Merge consecutive blocks with the fold rule itself, so any bracketing can
// be compared against the flat fold.
Block merge_blocks(const Block& a, const Block& b, const AnnotatedWord& w,
                   std::size_t ia, std::size_t ib) {
  Block out{concat(a.word, b.word), std::nullopt, Side::none};
  out.declared_f = w.block_f(ia) + w.block_f(ib) -
                   casson_cocycle(w.block_tau(ia), w.block_tau(ib));
  return out;
}

}  // namespace

CheckResult check_fold_associativity(int genus, int trials,
                                     unsigned long seed) {
  Rng rng = seeded(seed, "fold_associativity");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const int n = static_cast<int>(uniform(rng, 3, 5));
    const AnnotatedWord w = random_annotated(rng, genus, n);
    const Int flat = eval_F(w);
    // Re-bracket: merge one random adjacent pair into a single block.
    const std::size_t i =
        static_cast<std::size_t>(uniform(rng, 0, n - 2));
    std::vector<Block> grouped;
    for (std::size_t k = 0; k < w.blocks().size(); ++k) {
      if (k == i) {
        grouped.push_back(
            merge_blocks(w.blocks()[k], w.blocks()[k + 1], w, k, k + 1));
        ++k;
      } else {
        grouped.push_back(w.blocks()[k]);
      }
    }
    ok = eval_F(AnnotatedWord(genus, std::move(grouped))) == flat;
  }
  return make_result("fold_associativity", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_inverse_f_identity(int genus, int trials,
                                     unsigned long seed) {
  Rng rng = seeded(seed, "inverse_f_identity");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const TwistWord w = random_bp_word(rng, genus, 2);
    const Int f = random_int(rng, -5, 5);
    const ExteriorCubeVector tw = tau(w);
    // F(w) + F(w^-1) = -2 J(tau w, tau w).
    const Int f_inv = -f - casson_cocycle(tw, tw);
    const AnnotatedWord word(
        genus, {Block{w, f, Side::none}, Block{inverse(w), f_inv, Side::none}});
    ok = eval_F(word) == 0;
  }
  return make_result("inverse_f_identity", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_side_padding_invariance(int genus, int trials,
                                          unsigned long seed) {
  Rng rng = seeded(seed, "side_padding");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    // A TA-compatible block (tau in W_AB + W_B) built from a B-framed
    // bounding pair, and a TB-compatible one (tau in W_A + W_AB); both get
    // F = 0. A TA prefix and TB suffix never touch the fold's cross terms.
    const SymplecticMatrix g = gl_embed(random_gl(rng, genus));
    const TwistWord ta_word = conjugate(
        g, TwistWord(genus,
                     {TwistGenerator(BoundingPairTwist(
                         {SpinePair{HomologyVector::basis_a(genus, 0) +
                                        HomologyVector::basis_b(genus, 2),
                                    HomologyVector::basis_b(genus, 0)}},
                         HomologyVector::basis_b(genus, 1), 1))}));
    const TwistWord tb_word = conjugate(
        g, TwistWord(genus,
                     {TwistGenerator(BoundingPairTwist(
                         {SpinePair{HomologyVector::basis_a(genus, 0),
                                    HomologyVector::basis_b(genus, 0) -
                                        HomologyVector::basis_a(genus, 2)}},
                         HomologyVector::basis_a(genus, 1), 1))}));
    const AnnotatedWord middle = random_annotated(rng, genus, 2);
    std::vector<Block> padded;
    padded.push_back(Block{ta_word, std::nullopt, Side::ta});
    for (const Block& b : middle.blocks()) padded.push_back(b);
    padded.push_back(Block{tb_word, std::nullopt, Side::tb});
    ok = eval_F(AnnotatedWord(genus, std::move(padded))) == eval_F(middle);
  }
  return make_result("side_padding_invariance", ok,
                     {{"genus", genus},
                      {"trials", trials},
                      {"note", "TA-compatible prefix, TB-compatible suffix"}});
}

CheckResult check_conjugation_invariance(int genus, int trials,
                                         unsigned long seed) {
  Rng rng = seeded(seed, "conjugation_invariance");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const AnnotatedWord w = random_annotated(rng, genus, 3);
    const SymplecticMatrix m = gl_embed(random_gl(rng, genus));
    std::vector<Block> conj;
    for (const Block& b : w.blocks())
      conj.push_back(Block{conjugate(m, b.word), b.declared_f, b.side});
    ok = eval_F(AnnotatedWord(genus, std::move(conj))) == eval_F(w);
  }
  return make_result("conjugation_invariance", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_stabilization_invariance(int genus, int trials,
                                           unsigned long seed) {
  Rng rng = seeded(seed, "stabilization_invariance");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const AnnotatedWord w = random_annotated(rng, genus, 2);
    const AnnotatedWord s = stabilize(w, genus + 1);
    ok = eval_F(s) == eval_F(w) && tau(s) == embed(tau(w), genus + 1);
  }
  return make_result("stabilization_invariance", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_lambda_sign(int genus, int trials, unsigned long seed) {
  Rng rng = seeded(seed, "lambda_sign");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const AnnotatedWord w = random_annotated(rng, genus, 2);
    ok = eval_lambda(w) == -eval_F(w) &&
         eval_lambda(w, true) == eval_F(w);
  }
  return make_result("lambda_sign", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_connected_sum_additivity(int trials, unsigned long seed) {
  Rng rng = seeded(seed, "connected_sum_additivity");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const AnnotatedWord a = random_annotated(rng, 3, 2);
    const AnnotatedWord b = random_annotated(rng, 3, 2);
    const AnnotatedWord sum = connected_sum(a, b);
    ok = sum.genus() == 6 && eval_F(sum) == eval_F(a) + eval_F(b);
  }
  return make_result("connected_sum_additivity", ok, {{"trials", trials}});
}

CheckResult check_cross_pairing_vanishes(int trials, unsigned long seed) {
  Rng rng = seeded(seed, "cross_pairing");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const int g = 3, h = 3;
    const TwistWord u = random_bp_word(rng, g, 2);
    const TwistWord v = random_bp_word(rng, h, 2);
    const ExteriorCubeVector tu = embed(tau(u), g + h, 0);
    const ExteriorCubeVector tv = embed(tau(v), g + h, g);
    ok = j_pairing(tu, tv) == 0 && j_pairing(tv, tu) == 0;
  }
  return make_result("cross_pairing_vanishes", ok, {{"trials", trials}});
}

CheckResult check_surgery_increments(int trials, unsigned long seed) {
  Rng rng = seeded(seed, "surgery_increments");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const int genus = 3;
    const AnnotatedWord w = random_annotated(rng, genus, 2);
    const Int d = random_int(rng, -4, 4);
    const SeparatingTwist k{genus, 1, d};
    const std::vector<Int> series = surgery_increment_series(w, k, 10);
    for (std::size_t i = 1; ok && i < series.size(); ++i)
      ok = series[i] - series[i - 1] == d;
  }
  return make_result("surgery_increment_constancy", ok, {{"trials", trials}});
}

CheckResult check_boundary_link_sum(int trials, unsigned long seed) {
  Rng rng = seeded(seed, "boundary_link");
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const int genus = 3;
    const AnnotatedWord w = random_annotated(rng, genus, 1);
    const SeparatingTwist k{genus, 1, random_int(rng, -4, 4)};
    const SeparatingTwist l{genus, 1, random_int(rng, -4, 4)};
    ok = boundary_link_alternating_sum(
             w, k, l, static_cast<int>(uniform(rng, 0, 4)),
             static_cast<int>(uniform(rng, 0, 4))) == 0;
  }
  return make_result("boundary_link_alternating_sum", ok,
                     {{"trials", trials}});
}

// -- free group -------------------------------------------------------------

CheckResult check_free_reduction(int trials, unsigned long seed) {
  Rng rng = seeded(seed, "free_reduction");
  bool ok = true;
  const int rank = 4;
  auto random_word = [&](int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i)
      ls.push_back(Letter{static_cast<int>(uniform(rng, 0, rank - 1)),
                          uniform(rng, 0, 1) ? 1 : -1});
    return FreeWord(rank, std::move(ls));
  };
  auto random_endo = [&]() {
    std::vector<FreeWord> images;
    for (int i = 0; i < rank; ++i)
      images.push_back(random_word(static_cast<int>(uniform(rng, 1, 4))));
    return Endo(rank, std::move(images));
  };
  for (int t = 0; ok && t < trials; ++t) {
    const FreeWord u = random_word(6), v = random_word(6);
    const Endo e = random_endo(), f = random_endo();
    // Reduction is stable; apply distributes over concatenation and
    // respects composition.
    ok = FreeWord(rank, u.letters()) == u &&
         (u * u.inverse()).empty() &&
         apply(e, u * v) == apply(e, u) * apply(e, v) &&
         apply(compose(e, f), u) == apply(e, apply(f, u));
  }
  return make_result("free_reduction_and_apply", ok, {{"trials", trials}});
}

CheckResult check_abelianization_functorial(int genus, int trials,
                                            unsigned long seed) {
  Rng rng = seeded(seed, "abelianization_functorial");
  const SuzukiGenerators s = suzuki_generators(genus);
  const std::vector<const Endo*> pool{&s.q, &s.sigma, &s.p, &s.u};
  bool ok = true;
  for (int t = 0; ok && t < trials; ++t) {
    const Endo& e1 = *pool[static_cast<std::size_t>(uniform(rng, 0, 3))];
    const Endo& e2 = *pool[static_cast<std::size_t>(uniform(rng, 0, 3))];
    ok = equal(abelianization(compose(e1, e2)),
               IntMat(abelianization(e1) * abelianization(e2)));
  }
  return make_result("abelianization_functorial", ok,
                     {{"genus", genus}, {"trials", trials}});
}

CheckResult check_suzuki_sp_b(int genus) {
  const SuzukiGenerators s = suzuki_generators(genus);
  bool ok = true;
  for (const SymplecticMatrix* m :
       {&s.q_ab, &s.sigma_ab, &s.p_ab, &s.u_ab}) {
    try {
      decompose_sp_b(*m);  // throws if B is not preserved
    } catch (const ValidationError&) {
      ok = false;
    }
  }
  return make_result("suzuki_abelianizations_sp_b", ok, {{"genus", genus}});
}

CheckResult check_suzuki_q_order(int genus) {
  const SuzukiGenerators s = suzuki_generators(genus);
  Endo power = s.q;
  for (int i = 1; i < genus; ++i) power = compose(s.q, power);
  CheckResult res =
      make_result("suzuki_q_order", power.is_identity(), {{"genus", genus}});
  if (!res.pass) {
    io::json witnesses = io::json::array();
    for (int i = 0; i < power.rank(); ++i)
      if (!(power.image(i) == FreeWord::generator(power.rank(), i)))
        witnesses.push_back(to_string(FreeWord::generator(power.rank(), i)) +
                            " -> " + to_string(power.image(i)));
    res.details["witnesses"] = std::move(witnesses);
  }
  return res;
}

CheckResult check_magnus(int genus) {
  const MagnusReport rep = magnus_identity_check(genus);
  return make_result("magnus_identity", rep.pass(), {{"rank", genus}});
}

// -- certificates -----------------------------------------------------------

CheckResult check_uniqueness(int genus) {
  const UniquenessReport rep = uniqueness_certificate(genus);
  return make_result(
      "pairing_uniqueness", rep.dimension == 1 && rep.matches_pairing,
      {{"genus", genus}, {"dimension", rep.dimension}});
}

CheckResult check_relaxed_uniqueness(int genus) {
  const RelaxedUniquenessReport rep = relaxed_invariance_basis(genus);
  return make_result("pairing_relaxed_basis",
                     rep.dimension == 2 && rep.contains_pairing &&
                         rep.contains_transpose,
                     {{"genus", genus}, {"dimension", rep.dimension}});
}

CheckResult check_minus_id_report(int genus) {
  return check_minus_id_negation(genus);
}

std::vector<CheckResult> run_suite(int genus, int trials, unsigned long seed) {
  std::vector<CheckResult> out;
  out.push_back(check_omega_bilinear_antisymmetric(genus, trials, seed));
  out.push_back(check_transvection_power_additivity(genus, trials, seed));
  out.push_back(check_constructors_symplectic(genus, trials, seed));
  out.push_back(check_sp_b_semidirect_law(trials, seed));
  out.push_back(check_minus_id_negation(genus));
  out.push_back(check_action_functorial(3, 50, seed));
  out.push_back(check_w_split_partition(3));
  out.push_back(check_wedge_oracle(genus, std::max(trials, 200), seed));
  out.push_back(check_pairing_bilinear(genus, trials, seed));
  out.push_back(check_cocycle_identity(genus, trials, seed));
  out.push_back(check_pairing_vanishing_exhaustive(3));
  out.push_back(check_pairing_gl_invariance(genus, trials, seed));
  out.push_back(check_pairing_stabilization(3, trials, seed));
  out.push_back(check_pairing_determinant_route(genus, trials, seed));
  out.push_back(check_tau_additivity(genus, trials, seed));
  out.push_back(check_tau_equivariance(genus, trials, seed));
  out.push_back(check_h1_homomorphism(genus, trials, seed));
  out.push_back(check_inverse_word_laws(genus, trials, seed));
  out.push_back(check_bounding_pair_rejection(genus, trials, seed));
  out.push_back(check_bp_action_model(genus, trials, seed));
  out.push_back(check_lantern_standard(3));
  out.push_back(check_lantern_random(genus, std::max(trials, 100), seed));
  out.push_back(check_fold_associativity(genus, trials, seed));
  out.push_back(check_inverse_f_identity(genus, trials, seed));
  out.push_back(check_side_padding_invariance(genus, trials, seed));
  out.push_back(check_conjugation_invariance(genus, trials, seed));
  out.push_back(check_stabilization_invariance(genus, trials, seed));
  out.push_back(check_lambda_sign(genus, trials, seed));
  out.push_back(check_connected_sum_additivity(trials, seed));
  out.push_back(check_cross_pairing_vanishes(std::max(trials, 100), seed));
  out.push_back(check_surgery_increments(std::min(trials, 32), seed));
  out.push_back(check_boundary_link_sum(std::min(trials, 32), seed));
  out.push_back(check_free_reduction(trials, seed));
  out.push_back(check_abelianization_functorial(genus, trials, seed));
  out.push_back(check_suzuki_sp_b(genus));
  out.push_back(check_suzuki_q_order(genus));
  out.push_back(check_magnus(genus));
  out.push_back(check_uniqueness(3));
  out.push_back(check_relaxed_uniqueness(3));
  return out;
}

}  // namespace casson::checks
