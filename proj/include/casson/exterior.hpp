#pragma once

#include <array>
#include <map>

#include "casson/symplectic.hpp"

namespace casson {

// Lambda^3 H with its monomial basis e_i ^ e_j ^ e_k, i < j < k, indices
// 0..2g-1 in the global order a_1 < ... < a_g < b_1 < ... < b_g. Triples
// whose indices all lie below g span W_A, triples entirely >= g span W_B,
// mixed triples span W_AB.

using Triple = std::array<int, 3>;

enum class WClass { a, ab, b };

WClass w_class(int genus, const Triple& t);

/// C(2g, 3).
long cube_rank(int genus);

/// All increasing triples in lexicographic order.
std::vector<Triple> cube_monomials(int genus);

/// Lexicographic position of a triple among cube_monomials(genus).
long monomial_position(int genus, const Triple& t);

class ExteriorCubeVector {
 public:
  explicit ExteriorCubeVector(int genus);
  ExteriorCubeVector(int genus, std::map<Triple, Int> coeffs);
  static ExteriorCubeVector monomial(int genus, const Triple& t,
                                     const Int& coeff = 1);

  int genus() const { return genus_; }
  const std::map<Triple, Int>& coeffs() const { return c_; }
  Int coeff(const Triple& t) const;
  bool is_zero() const { return c_.empty(); }

 private:
  int genus_;
  std::map<Triple, Int> c_;
};

ExteriorCubeVector operator+(const ExteriorCubeVector& u,
                             const ExteriorCubeVector& v);
ExteriorCubeVector operator-(const ExteriorCubeVector& u,
                             const ExteriorCubeVector& v);
ExteriorCubeVector operator-(const ExteriorCubeVector& u);
ExteriorCubeVector operator*(const ExteriorCubeVector& u, const Int& n);
bool operator==(const ExteriorCubeVector& u, const ExteriorCubeVector& v);

/// x ^ y ^ z, expanded over the nonzero coordinates and normalized to
/// increasing index order with sign.
ExteriorCubeVector wedge3(const HomologyVector& x, const HomologyVector& y,
                          const HomologyVector& z);

struct WSplit {
  ExteriorCubeVector wA;
  ExteriorCubeVector wAB;
  ExteriorCubeVector wB;
};

/// Partition by index-triple class; the parts sum back to the input.
WSplit w_split(const ExteriorCubeVector& v);

/// Functorial action of a symplectic matrix on Lambda^3 H.
ExteriorCubeVector induced_action(const SymplecticMatrix& m,
                                  const ExteriorCubeVector& v);

/// Index inclusion into a larger genus (same handle-offset convention as the
/// homology embed).
ExteriorCubeVector embed(const ExteriorCubeVector& v, int new_genus,
                         int handle_offset = 0);

}  // namespace casson
