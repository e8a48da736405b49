#pragma once

#include "casson/exterior.hpp"

namespace casson {

// The bilinear form J on Lambda^3 H pairing the W_A component of its first
// argument against the W_B component of its second, induced by the
// intersection form: on monomials x1^x2^x3 (all in A) and y1^y2^y3 (all in
// B), J = det[omega(y_j, x_i)]. With this normalization
// J(a1^a2^a3, b1^b2^b3) = -1 and the evaluation engine's worked example
// comes out F = -2J = 2. Bilinear forms on an abelian group are 2-cocycles,
// which is what makes J the engine's local gluing correction.

Int j_pairing(const ExteriorCubeVector& u, const ExteriorCubeVector& v);

/// The dual pairing: W_B of the first argument against W_A of the second;
/// jt_pairing(u, v) == j_pairing(v, u).
Int jt_pairing(const ExteriorCubeVector& u, const ExteriorCubeVector& v);

/// 2 J(u, v), the cocycle whose trivialization the engine accumulates.
Int casson_cocycle(const ExteriorCubeVector& u, const ExteriorCubeVector& v);

/// Dense integer bilinear form on Lambda^3 H in the monomial basis.
class BilinearForm {
 public:
  BilinearForm(int genus, IntMat matrix);
  int genus() const { return genus_; }
  const IntMat& matrix() const { return m_; }
  Int eval(const ExteriorCubeVector& u, const ExteriorCubeVector& v) const;

 private:
  int genus_;
  IntMat m_;
};

bool operator==(const BilinearForm& a, const BilinearForm& b);
BilinearForm j_form(int genus);
BilinearForm jt_form(int genus);

/// Exact solution space of the admissibility constraints: (a) the form only
/// sees (W_A of the left slot, W_B of the right slot); (b) invariance under
/// gl_embed of the elementary matrices E_ij and of diag(-1,1,..,1).
/// dimension is expected to be 1 with primitive generator ±J.
struct UniquenessReport {
  int genus = 0;
  long dimension = 0;
  std::vector<BilinearForm> basis;
  bool matches_pairing = false;  // generator == ±J
};

UniquenessReport uniqueness_certificate(int genus);

/// Same solve with constraint (a) dropped down to block support only: forms
/// living on (W_A x W_B) u (W_B x W_A) that are GL-invariant. The solution
/// space should contain both J and its transpose.
struct RelaxedUniquenessReport {
  int genus = 0;
  long dimension = 0;
  std::vector<BilinearForm> basis;
  bool contains_pairing = false;
  bool contains_transpose = false;
};

RelaxedUniquenessReport relaxed_invariance_basis(int genus);

/// Exhaustive certificate that gl_embed(-I) acts as -Id on every monomial.
struct MinusIdReport {
  int genus = 0;
  long checked = 0;
  std::vector<Triple> failures;
  bool all_negated() const { return failures.empty(); }
};

MinusIdReport minus_id_check(int genus);

}  // namespace casson
