#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

// Eigen scalar adaptors for the GMP types. Everything in this library is
// exact: integers are arbitrary-precision, solvers run over the rationals.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace casson {

using Int = mpz_class;
using Rat = mpq_class;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Bad input: genus mismatches, malformed data, violated preconditions.
/// The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant; reaching this is a bug, not a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_zero(const IntMat& m);
bool equal(const IntMat& a, const IntMat& b);

IntMat int_identity(long n);
IntMat int_zero(long rows, long cols);

/// Exact determinant (fraction-free Bareiss elimination).
Int det(IntMat a);

/// Inverse of a matrix with det = ±1; throws ValidationError otherwise.
IntMat unimodular_inverse(const IntMat& a);

/// Reduce m to reduced row echelon form in place; returns the pivot columns.
std::vector<long> rref(RatMat& m);

long rank(const IntMat& m);

/// Basis of { x : a x = 0 }, each vector scaled to a primitive integer
/// vector whose first nonzero entry is positive. Deterministic: vectors are
/// ordered by their free column.
std::vector<IntVec> kernel_basis(const IntMat& a);

/// Smallest integer multiple of a rational vector, divided by its content,
/// sign-normalized so the first nonzero entry is positive.
IntVec primitive(const RatVec& v);

/// gcd of all entries (0 for the zero vector).
Int content(const IntVec& v);

bool in_span(const std::vector<IntVec>& basis, const IntVec& v);

}  // namespace casson
