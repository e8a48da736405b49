#pragma once

#include "casson/symplectic.hpp"

namespace casson {

// Free-group endomorphisms for the automorphism identities behind the
// handlebody subgroups: the Magnus generator K12 and its conjugate, and
// Suzuki's generators Q, sigma, P, U of the inner-handlebody group together
// with their exponent-sum (abelianization) matrices.

struct Letter {
  int gen = 0;   // generator index, 0-based
  int sign = 1;  // +1 or -1
};

bool operator==(const Letter& a, const Letter& b);

/// Freely reduced word; adjacent cancelling pairs are removed on
/// construction.
class FreeWord {
 public:
  explicit FreeWord(int rank);
  FreeWord(int rank, std::vector<Letter> letters);
  static FreeWord generator(int rank, int gen, int sign = 1);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

bool operator==(const FreeWord& a, const FreeWord& b);
FreeWord operator*(const FreeWord& a, const FreeWord& b);  // concat + reduce

/// Render as e.g. "x2 x1 x2^-1"; even ranks use the surface alphabet
/// x_1..x_g, y_1..y_g. The empty word renders as "1".
std::string to_string(const FreeWord& w);

/// Endomorphism given by the images of the generators.
class Endo {
 public:
  Endo(int rank, std::vector<FreeWord> images);
  static Endo identity(int rank);
  int rank() const { return rank_; }
  const FreeWord& image(int gen) const { return images_[gen]; }
  bool is_identity() const;

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

bool operator==(const Endo& a, const Endo& b);

FreeWord apply(const Endo& e, const FreeWord& w);

/// compose(e1, e2) = e1 after e2, so apply(compose(e1, e2), w) ==
/// apply(e1, apply(e2, w)).
Endo compose(const Endo& e1, const Endo& e2);

/// Exponent-sum matrix; column j holds the exponent sums of the image of
/// generator j.
IntMat abelianization(const Endo& e);

/// sigma2 K12 sigma2^-1 == K12^-1 on every generator of the rank-g free
/// group, plus the supporting involution and inverse identities.
struct MagnusReport {
  int rank = 0;
  bool conjugation_identity = false;  // sigma2 K12 sigma2 == K12^-1
  bool sigma_involution = false;      // sigma2 sigma2 == id
  bool k12_inverse = false;           // K12 K12^-1 == id
  std::vector<std::pair<FreeWord, FreeWord>> witnesses;  // expected, actual
  bool pass() const {
    return conjugation_identity && sigma_involution && k12_inverse;
  }
};

MagnusReport magnus_identity_check(int g);

/// The four tabled generators on the rank-2g free group with alphabet
/// alpha_1..alpha_g, beta_1..beta_g (indices 0..g-1 and g..2g-1), plus their
/// abelianizations packaged as symplectic matrices.
struct SuzukiGenerators {
  Endo q;      // cyclic translation of handles
  Endo sigma;  // twist of knob 1
  Endo p;      // interchange of knobs 1 and 2
  Endo u;      // Luft map
  SymplecticMatrix q_ab;
  SymplecticMatrix sigma_ab;
  SymplecticMatrix p_ab;
  SymplecticMatrix u_ab;
};

SuzukiGenerators suzuki_generators(int g);

}  // namespace casson
