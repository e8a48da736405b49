#include "casson/symplectic.hpp"

namespace casson {

namespace {

void require_genus(int genus) {
  if (genus < 1) throw ValidationError("genus must be a positive integer");
}

void require_same_genus(int a, int b, const char* what) {
  if (a != b)
    throw ValidationError(std::string(what) + ": genus mismatch (" +
                          std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

IntMat omega_matrix(int genus) {
  require_genus(genus);
  const long g = genus;
  IntMat w = int_zero(2 * g, 2 * g);
  for (long i = 0; i < g; ++i) {
    w(i, g + i) = 1;
    w(g + i, i) = -1;
  }
  return w;
}

HomologyVector::HomologyVector(int genus, IntVec coords)
    : genus_(genus), coords_(std::move(coords)) {
  require_genus(genus_);
  if (coords_.size() != 2L * genus_)
    throw ValidationError("homology vector: expected " +
                          std::to_string(2 * genus_) + " coordinates, got " +
                          std::to_string(coords_.size()));
}

HomologyVector HomologyVector::zero(int genus) {
  require_genus(genus);
  IntVec v(2L * genus);
  for (long i = 0; i < v.size(); ++i) v(i) = 0;
  return HomologyVector(genus, std::move(v));
}

HomologyVector HomologyVector::basis_a(int genus, int i) {
  if (i < 0 || i >= genus) throw ValidationError("basis_a: index out of range");
  HomologyVector v = zero(genus);
  v.coords_(i) = 1;
  return v;
}

HomologyVector HomologyVector::basis_b(int genus, int i) {
  if (i < 0 || i >= genus) throw ValidationError("basis_b: index out of range");
  HomologyVector v = zero(genus);
  v.coords_(genus + i) = 1;
  return v;
}

bool HomologyVector::is_zero() const {
  for (long i = 0; i < coords_.size(); ++i)
    if (coords_(i) != 0) return false;
  return true;
}

bool HomologyVector::is_primitive() const { return content(coords_) == 1; }

HomologyVector operator+(const HomologyVector& x, const HomologyVector& y) {
  require_same_genus(x.genus(), y.genus(), "vector sum");
  return HomologyVector(x.genus(), x.coords() + y.coords());
}

HomologyVector operator-(const HomologyVector& x, const HomologyVector& y) {
  require_same_genus(x.genus(), y.genus(), "vector difference");
  return HomologyVector(x.genus(), x.coords() - y.coords());
}

HomologyVector operator-(const HomologyVector& x) {
  return HomologyVector(x.genus(), -x.coords());
}

HomologyVector operator*(const HomologyVector& x, const Int& n) {
  IntVec v = x.coords();
  for (long i = 0; i < v.size(); ++i) v(i) *= n;
  return HomologyVector(x.genus(), std::move(v));
}

bool operator==(const HomologyVector& x, const HomologyVector& y) {
  return x.genus() == y.genus() && equal(x.coords(), y.coords());
}

Int omega(const HomologyVector& x, const HomologyVector& y) {
  require_same_genus(x.genus(), y.genus(), "omega");
  const long g = x.genus();
  Int s = 0;
  for (long i = 0; i < g; ++i)
    s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

SymplecticMatrix::SymplecticMatrix(int genus, IntMat entries)
    : genus_(genus), m_(std::move(entries)) {
  require_genus(genus_);
  if (m_.rows() != 2L * genus_ || m_.cols() != 2L * genus_)
    throw ValidationError("symplectic matrix: wrong shape for genus " +
                          std::to_string(genus_));
  const IntMat w = omega_matrix(genus_);
  const IntMat check = m_.transpose() * w * m_;
  if (!equal(check, w))
    throw ValidationError(
        "symplectic matrix: tM Omega M != Omega (not symplectic)");
}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
  return SymplecticMatrix(genus, int_identity(2L * genus));
}

bool SymplecticMatrix::is_identity() const {
  return equal(m_, int_identity(m_.rows()));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const IntMat w = omega_matrix(genus_);
  // Omega^-1 = -Omega, so M^-1 = -Omega tM Omega.
  IntMat inv = w * m_.transpose() * w;
  for (long i = 0; i < inv.rows(); ++i)
    for (long j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
  return SymplecticMatrix(genus_, std::move(inv));
}

HomologyVector SymplecticMatrix::apply(const HomologyVector& x) const {
  require_same_genus(genus_, x.genus(), "matrix apply");
  return HomologyVector(genus_, m_ * x.coords());
}

HomologyVector SymplecticMatrix::column(long j) const {
  return HomologyVector(genus_, m_.col(j));
}

SymplecticMatrix operator*(const SymplecticMatrix& a,
                           const SymplecticMatrix& b) {
  require_same_genus(a.genus(), b.genus(), "matrix product");
  return SymplecticMatrix(a.genus(), a.entries() * b.entries());
}

bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  return a.genus() == b.genus() && equal(a.entries(), b.entries());
}

SymplecticMatrix transvection(const HomologyVector& c, const Int& power) {
  const long n = 2L * c.genus();
  IntMat m = int_identity(n);
  // x + p omega(x, c) c  ==  (I - p c tc Omega) x.
  const IntMat w = omega_matrix(c.genus());
  IntVec wc = w * c.coords();  // tc Omega as a row is -(Omega c)^T
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) += power * c[i] * wc(j);
  return SymplecticMatrix(c.genus(), std::move(m));
}

BlockPair::BlockPair(IntMat g, IntMat s) : g_(std::move(g)), s_(std::move(s)) {
  if (g_.rows() != g_.cols() || s_.rows() != s_.cols() ||
      g_.rows() != s_.rows())
    throw ValidationError("block pair: G and S must be square of equal size");
  const Int d = det(g_);
  if (d != 1 && d != -1)
    throw ValidationError("block pair: det G = " + d.get_str() + ", not ±1");
  if (!equal(s_, s_.transpose()))
    throw ValidationError("block pair: S is not symmetric");
}

BlockPair compose(const BlockPair& p, const BlockPair& q) {
  const IntMat gh = p.g() * q.g();
  const IntMat s = q.g().transpose() * p.s() * q.g() + q.s();
  return BlockPair(gh, s);
}

BlockPair decompose_sp_b(const SymplecticMatrix& m) {
  const long g = m.genus();
  const IntMat& e = m.entries();
  const IntMat top_right = e.block(0, g, g, g);
  if (!is_zero(top_right))
    throw ValidationError(
        "Sp_B decomposition: matrix does not preserve the Lagrangian B "
        "(upper-right block is nonzero)");
  const IntMat gl = e.block(0, 0, g, g);
  const IntMat lower = e.block(g, 0, g, g);
  IntMat s = gl.transpose() * lower;
  if (!equal(s, s.transpose()))
    throw InternalError("Sp_B decomposition: tG M is not symmetric");
  return BlockPair(gl, std::move(s));
}

SymplecticMatrix gl_embed(const IntMat& g) {
  if (g.rows() != g.cols())
    throw ValidationError("gl_embed: matrix is not square");
  const long n = g.rows();
  const Int d = det(g);
  if (d != 1 && d != -1)
    throw ValidationError("gl_embed: det = " + d.get_str() +
                          ", matrix is not invertible over Z");
  const IntMat ginv_t = unimodular_inverse(g).transpose();
  IntMat m = int_zero(2 * n, 2 * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      m(i, j) = g(i, j);
      m(n + i, n + j) = ginv_t(i, j);
    }
  return SymplecticMatrix(static_cast<int>(n), std::move(m));
}

IntMat coset_witness(const SymplecticMatrix& ma, const SymplecticMatrix& mb) {
  require_same_genus(ma.genus(), mb.genus(), "coset witness");
  const long g = ma.genus();
  const IntMat& a = ma.entries();
  const IntMat& b = mb.entries();
  if (!is_zero(IntMat(a.block(g, 0, g, g))))
    throw ValidationError(
        "coset witness: first factor is not upper-block (A-side form)");
  if (!is_zero(IntMat(b.block(0, g, g, g))))
    throw ValidationError(
        "coset witness: second factor is not lower-block (B-side form)");
  if (!equal(a * b, int_identity(2 * g)))
    throw ValidationError("coset witness: product is not the identity");
  const IntMat n_block = a.block(0, g, g, g);
  const IntMat m_block = b.block(g, 0, g, g);
  if (!is_zero(n_block) || !is_zero(m_block))
    throw InternalError(
        "coset witness: off-diagonal blocks survived an identity product");
  const IntMat h = a.block(0, 0, g, g);
  const IntMat gl = b.block(0, 0, g, g);
  if (!equal(h * gl, int_identity(g)))
    throw InternalError("coset witness: G != H^-1");
  return gl;
}

namespace {

long embedded_index(long k, long old_genus, long new_genus, long offset) {
  return k < old_genus ? offset + k : new_genus + offset + (k - old_genus);
}

}  // namespace

SymplecticMatrix embed(const SymplecticMatrix& m, int new_genus,
                       int handle_offset) {
  const long g = m.genus();
  if (handle_offset < 0 || g + handle_offset > new_genus)
    throw ValidationError("embed: handles do not fit in the target genus");
  IntMat e = int_identity(2L * new_genus);
  for (long r = 0; r < 2 * g; ++r) {
    const long er = embedded_index(r, g, new_genus, handle_offset);
    e(er, er) = 0;
  }
  for (long r = 0; r < 2 * g; ++r)
    for (long c = 0; c < 2 * g; ++c)
      e(embedded_index(r, g, new_genus, handle_offset),
        embedded_index(c, g, new_genus, handle_offset)) = m.entries()(r, c);
  return SymplecticMatrix(new_genus, std::move(e));
}

HomologyVector embed(const HomologyVector& x, int new_genus,
                     int handle_offset) {
  const long g = x.genus();
  if (handle_offset < 0 || g + handle_offset > new_genus)
    throw ValidationError("embed: handles do not fit in the target genus");
  IntVec v(2L * new_genus);
  for (long i = 0; i < v.size(); ++i) v(i) = 0;
  for (long k = 0; k < 2 * g; ++k)
    v(embedded_index(k, g, new_genus, handle_offset)) = x[k];
  return HomologyVector(new_genus, std::move(v));
}

}  // namespace casson
