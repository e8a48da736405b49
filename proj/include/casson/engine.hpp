#pragma once

#include "casson/johnson.hpp"

namespace casson {

// Evaluation of the invariant F on annotated gluing words. The engine folds
// blocks left to right keeping (tau_acc, F_acc):
//   F(acc . block) = F(acc) + F(block) - 2 J(tau(acc), tau(block)),
// so a word is computable exactly when every block's own F is known: side-
// tagged blocks contribute 0, anything else must carry a declared value.

enum class Side { none, ta, tb };

struct Block {
  TwistWord word;
  std::optional<Int> declared_f;
  Side side = Side::none;
};

class AnnotatedWord {
 public:
  AnnotatedWord(int genus, std::vector<Block> blocks);
  int genus() const { return genus_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// 0 for side-tagged blocks, the declared value otherwise.
  const Int& block_f(std::size_t i) const { return effective_f_[i]; }
  const ExteriorCubeVector& block_tau(std::size_t i) const {
    return taus_[i];
  }

 private:
  int genus_;
  std::vector<Block> blocks_;
  std::vector<Int> effective_f_;
  std::vector<ExteriorCubeVector> taus_;
};

Int eval_F(const AnnotatedWord& w);

/// The Casson invariant under the default convention is -F; flip negates.
Int eval_lambda(const AnnotatedWord& w, bool flip = false);

ExteriorCubeVector tau(const AnnotatedWord& w);

/// Splice at genus g + h: the second word's handles are re-indexed to
/// g+1..g+h. F is additive across the splice (the cross pairing term
/// vanishes on disjoint handle support).
AnnotatedWord connected_sum(const AnnotatedWord& a, const AnnotatedWord& b);

AnnotatedWord stabilize(const AnnotatedWord& w, int new_genus);

/// F(T_K^n . w) for n = 1..n_max, where K is a separating generator with a
/// known f_value. Consecutive differences are asserted equal (they all
/// reduce to F(T_K) because tau(T_K) = 0).
std::vector<Int> surgery_increment_series(const AnnotatedWord& w,
                                          const SeparatingTwist& k,
                                          int n_max);

/// F(K_{k+1},L_{l+1}) - F(K_k,L_{l+1}) - F(K_{k+1},L_l) + F(K_k,L_l) for two
/// separating twists; identically zero.
Int boundary_link_alternating_sum(const AnnotatedWord& w,
                                  const SeparatingTwist& k,
                                  const SeparatingTwist& l, int k_power,
                                  int l_power);

/// Integer Laurent polynomials, exponent -> coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<long, Int> coeffs);
  LaurentPolynomial(std::initializer_list<std::pair<const long, Int>> coeffs)
      : LaurentPolynomial(std::map<long, Int>(coeffs)) {}
  const std::map<long, Int>& coeffs() const { return c_; }
  Int coeff(long k) const;
  bool is_symmetric() const;  // p(t) == p(1/t)
  Int at_one() const;
  /// Exact second derivative at t = 1: sum c_k k (k-1).
  Int second_derivative_at_one() const;

 private:
  std::map<long, Int> c_;
};

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMat v);  // square, even size (0x0 is the unknot)
  const IntMat& v() const { return v_; }
  long size() const { return v_.rows(); }

 private:
  IntMat v_;
};

/// det(V - t tV), symmetrized by t^{-n/2} and sign-normalized so the value
/// at 1 is +1. Throws unless det(V - tV^T) at t=1 is ±1 (the matrix is not a
/// Seifert pairing otherwise).
LaurentPolynomial alexander_from_seifert(const SeifertMatrix& v);

/// (1/2) p''(1); the symmetric normalization makes this an exact integer.
Int half_second_derivative_at_one(const LaurentPolynomial& p);

/// Casson invariant of 1/n surgery: n * (1/2) Delta''(1) * sign. The default
/// sign is +1, which sends the trefoil at n = 1 to +1.
Int casson_surgery(const SeifertMatrix& v, const Int& n, int sign = +1);

}  // namespace casson
