#pragma once

#include <random>

#include "casson/freegroup.hpp"
#include "casson/io.hpp"

namespace casson::checks {

// Randomized and exhaustive property checks over the whole library, exact
// arithmetic throughout. The CLI's `verify suite` runs them; the test
// suites call them individually. Everything is deterministic for a fixed
// seed; each check derives its own stream from (seed, check name).

using Rng = std::mt19937_64;

struct CheckResult {
  std::string name;
  bool pass = false;
  io::json details;
};

constexpr unsigned long kDefaultSeed = 20240817UL;
constexpr int kDefaultTrials = 128;

// -- random input builders (also used by the test binaries) ---------------

Int random_int(Rng& rng, long lo, long hi);
HomologyVector random_vector(Rng& rng, int genus, long bound = 3);
IntMat random_gl(Rng& rng, int g, int steps = 8);
SymplecticMatrix random_symplectic(Rng& rng, int genus, int twists = 5);
SymplecticMatrix random_sp_b(Rng& rng, int genus);
BoundingPairTwist random_bounding_pair(Rng& rng, int genus);
TwistWord random_bp_word(Rng& rng, int genus, int length);
ExteriorCubeVector random_cube(Rng& rng, int genus, int terms = 3);
/// Classes that are pairwise omega-orthogonal (a symplectic image of
/// B-supported vectors).
std::array<HomologyVector, 3> random_orthogonal_triple(Rng& rng, int genus);

/// Independent wedge oracle: the coefficient of e_i^e_j^e_k is the 3x3
/// determinant of the (i,j,k) coordinates of the three vectors. Never calls
/// wedge3.
ExteriorCubeVector naive_wedge(const HomologyVector& x,
                               const HomologyVector& y,
                               const HomologyVector& z);

// -- individual checks -----------------------------------------------------

CheckResult check_omega_bilinear_antisymmetric(int genus, int trials,
                                               unsigned long seed);
CheckResult check_transvection_power_additivity(int genus, int trials,
                                                unsigned long seed);
CheckResult check_constructors_symplectic(int genus, int trials,
                                          unsigned long seed);
CheckResult check_sp_b_semidirect_law(int trials, unsigned long seed);

CheckResult check_minus_id_negation(int genus);
CheckResult check_action_functorial(int genus, int trials, unsigned long seed);
CheckResult check_w_split_partition(int genus);
CheckResult check_wedge_oracle(int genus, int trials, unsigned long seed);

CheckResult check_pairing_bilinear(int genus, int trials, unsigned long seed);
CheckResult check_cocycle_identity(int genus, int trials, unsigned long seed);
CheckResult check_pairing_vanishing_exhaustive(int genus);
CheckResult check_pairing_gl_invariance(int genus, int trials,
                                        unsigned long seed);
CheckResult check_pairing_stabilization(int genus, int trials,
                                        unsigned long seed);
CheckResult check_pairing_determinant_route(int genus, int trials,
                                            unsigned long seed);

CheckResult check_tau_additivity(int genus, int trials, unsigned long seed);
CheckResult check_tau_equivariance(int genus, int trials, unsigned long seed);
CheckResult check_h1_homomorphism(int genus, int trials, unsigned long seed);
CheckResult check_inverse_word_laws(int genus, int trials, unsigned long seed);
CheckResult check_bounding_pair_rejection(int genus, int trials,
                                          unsigned long seed);
CheckResult check_bp_action_model(int genus, int trials, unsigned long seed);
CheckResult check_lantern_standard(int genus);
CheckResult check_lantern_random(int genus, int trials, unsigned long seed);

CheckResult check_fold_associativity(int genus, int trials,
                                     unsigned long seed);
CheckResult check_inverse_f_identity(int genus, int trials,
                                     unsigned long seed);
CheckResult check_side_padding_invariance(int genus, int trials,
                                          unsigned long seed);
CheckResult check_conjugation_invariance(int genus, int trials,
                                         unsigned long seed);
CheckResult check_stabilization_invariance(int genus, int trials,
                                           unsigned long seed);
CheckResult check_lambda_sign(int genus, int trials, unsigned long seed);
CheckResult check_connected_sum_additivity(int trials, unsigned long seed);
CheckResult check_cross_pairing_vanishes(int trials, unsigned long seed);
CheckResult check_surgery_increments(int trials, unsigned long seed);
CheckResult check_boundary_link_sum(int trials, unsigned long seed);

CheckResult check_free_reduction(int trials, unsigned long seed);
CheckResult check_abelianization_functorial(int genus, int trials,
                                            unsigned long seed);
CheckResult check_suzuki_sp_b(int genus);
CheckResult check_suzuki_q_order(int genus);
CheckResult check_magnus(int genus);

CheckResult check_uniqueness(int genus);
CheckResult check_relaxed_uniqueness(int genus);
CheckResult check_minus_id_report(int genus);

/// Every module's invariant checks in a fixed order at the given genus.
std::vector<CheckResult> run_suite(int genus, int trials, unsigned long seed);

}  // namespace casson::checks
