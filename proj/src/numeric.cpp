#include "casson/numeric.hpp"

namespace casson {

bool is_zero(const IntMat& m) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool equal(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMat int_identity(long n) {
  IntMat m = int_zero(n, n);
  for (long i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat int_zero(long rows, long cols) {
  IntMat m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = 0;
  return m;
}

Int det(IntMat a) {
  const long n = a.rows();
  if (a.cols() != n) throw ValidationError("det: matrix is not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (long k = 0; k + 1 < n; ++k) {
    long piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.row(piv).swap(a.row(k));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        // Bareiss update; the division is exact.
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<long> rref(RatMat& m) {
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < m.cols() && r < m.rows(); ++c) {
    long piv = -1;
    for (long i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Rat lead = m(r, c);
    for (long j = c; j < m.cols(); ++j) m(r, j) /= lead;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (long j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

RatMat to_rat(const IntMat& a) {
  RatMat m(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  return m;
}

}  // namespace

long rank(const IntMat& m) {
  RatMat r = to_rat(m);
  return static_cast<long>(rref(r).size());
}

IntMat unimodular_inverse(const IntMat& a) {
  const long n = a.rows();
  if (a.cols() != n) throw ValidationError("inverse: matrix is not square");
  const Int d = det(a);
  if (d != 1 && d != -1)
    throw ValidationError("inverse: determinant is " + d.get_str() +
                          ", not a unit in Z");
  RatMat aug(n, 2 * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      aug(i, j) = Rat(a(i, j));
      aug(i, n + j) = (i == j) ? 1 : 0;
    }
  rref(aug);
  IntMat inv(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat v = aug(i, n + j);
      v.canonicalize();
      if (v.get_den() != 1)
        throw InternalError("unimodular inverse produced a non-integer entry");
      inv(i, j) = v.get_num();
    }
  return inv;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (long i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

IntVec primitive(const RatVec& v) {
  Int l = 1;
  for (long i = 0; i < v.size(); ++i) {
    Rat x = v(i);
    x.canonicalize();
    l = lcm(l, x.get_den());
  }
  IntVec w(v.size());
  for (long i = 0; i < v.size(); ++i) {
    Rat x = v(i) * Rat(l);
    x.canonicalize();
    w(i) = x.get_num();
  }
  Int g = content(w);
  if (g == 0) return w;
  long first = 0;
  while (first < w.size() && w(first) == 0) ++first;
  if (first < w.size() && w(first) < 0) g = -g;
  for (long i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

std::vector<IntVec> kernel_basis(const IntMat& a) {
  RatMat m = to_rat(a);
  const std::vector<long> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (long p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<IntVec> basis;
  for (long f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVec x(a.cols());
    for (long i = 0; i < a.cols(); ++i) x(i) = 0;
    x(f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x(pivots[r]) = -m(static_cast<long>(r), f);
    basis.push_back(primitive(x));
  }
  return basis;
}

bool in_span(const std::vector<IntVec>& basis, const IntVec& v) {
  if (basis.empty()) {
    for (long i = 0; i < v.size(); ++i)
      if (v(i) != 0) return false;
    return true;
  }
  const long n = basis.front().size();
  if (v.size() != n) return false;
  IntMat with(n, static_cast<long>(basis.size()) + 1);
  IntMat without(n, static_cast<long>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (long i = 0; i < n; ++i) {
      without(i, static_cast<long>(c)) = basis[c](i);
      with(i, static_cast<long>(c)) = basis[c](i);
    }
  for (long i = 0; i < n; ++i) with(i, static_cast<long>(basis.size())) = v(i);
  return rank(with) == rank(without);
}

}  // namespace casson
