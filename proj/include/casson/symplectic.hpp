#pragma once

#include "casson/numeric.hpp"

namespace casson {

// H = H_1 of the genus-g surface, a free Z-module of rank 2g. Coordinates
// are ordered (a_1..a_g, b_1..b_g); the two blocks span the transverse
// Lagrangians A and B. The intersection form is omega(a_i, b_j) = delta_ij,
// zero on each Lagrangian, so its Gram matrix is [[0, I], [-I, 0]].

IntMat omega_matrix(int genus);

class HomologyVector {
 public:
  HomologyVector(int genus, IntVec coords);
  static HomologyVector zero(int genus);
  static HomologyVector basis_a(int genus, int i);  // 0-based, i < g
  static HomologyVector basis_b(int genus, int i);

  int genus() const { return genus_; }
  const IntVec& coords() const { return coords_; }
  const Int& operator[](long k) const { return coords_(k); }
  bool is_zero() const;
  /// gcd of the coordinates is 1 (the class of a non-separating curve).
  bool is_primitive() const;

 private:
  int genus_;
  IntVec coords_;
};

HomologyVector operator+(const HomologyVector& x, const HomologyVector& y);
HomologyVector operator-(const HomologyVector& x, const HomologyVector& y);
HomologyVector operator-(const HomologyVector& x);
HomologyVector operator*(const HomologyVector& x, const Int& n);
bool operator==(const HomologyVector& x, const HomologyVector& y);

Int omega(const HomologyVector& x, const HomologyVector& y);

/// 2g x 2g integer matrix M with tM Omega M = Omega, verified at
/// construction. Columns are the images of the basis vectors.
class SymplecticMatrix {
 public:
  SymplecticMatrix(int genus, IntMat entries);
  static SymplecticMatrix identity(int genus);

  int genus() const { return genus_; }
  const IntMat& entries() const { return m_; }
  bool is_identity() const;
  /// Exact inverse, -Omega tM Omega. No elimination involved.
  SymplecticMatrix inverse() const;
  HomologyVector apply(const HomologyVector& x) const;
  HomologyVector column(long j) const;

 private:
  int genus_;
  IntMat m_;
};

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);
bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b);

/// Homology action of the power of a right-hand Dehn twist about a curve of
/// class c: x |-> x + power * omega(x, c) * c. c = 0 gives the identity.
SymplecticMatrix transvection(const HomologyVector& c, const Int& power = 1);

/// (G, S) with G in GL_g(Z) and S symmetric: the image of a B-Lagrangian-
/// preserving matrix under the semidirect splitting of Sp_B.
class BlockPair {
 public:
  BlockPair(IntMat g, IntMat s);
  const IntMat& g() const { return g_; }
  const IntMat& s() const { return s_; }

 private:
  IntMat g_;
  IntMat s_;
};

/// Semidirect product law (G, S)(H, T) = (GH, tH S H + T).
BlockPair compose(const BlockPair& p, const BlockPair& q);

/// Split a matrix of block form (G 0; M tG^-1) into (G, tG M). Throws if
/// the upper-right block is nonzero.
BlockPair decompose_sp_b(const SymplecticMatrix& m);

/// diag(G, tG^-1) for G in GL_g(Z): the standard lift of GL_g into Sp.
SymplecticMatrix gl_embed(const IntMat& g);

/// Given Ma upper-block (H N; 0 tH^-1), Mb lower-block (G 0; M tG^-1) with
/// Ma * Mb = Id, certifies N = M = 0 and G = H^-1 and returns G, the GL_g(Z)
/// witness for the conjugating map. Throws on any violated hypothesis.
IntMat coset_witness(const SymplecticMatrix& ma, const SymplecticMatrix& mb);

/// Reinterpret at a larger genus: old handle i becomes handle
/// handle_offset + i, all new handles act as the identity.
SymplecticMatrix embed(const SymplecticMatrix& m, int new_genus,
                       int handle_offset = 0);
HomologyVector embed(const HomologyVector& x, int new_genus,
                     int handle_offset = 0);

}  // namespace casson
