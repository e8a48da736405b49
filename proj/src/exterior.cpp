#include "casson/exterior.hpp"

#include <algorithm>

namespace casson {

namespace {

void require_triple(int genus, const Triple& t) {
  if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < 2 * genus))
    throw ValidationError("exterior cube: triple (" + std::to_string(t[0]) +
                          "," + std::to_string(t[1]) + "," +
                          std::to_string(t[2]) +
                          ") is not strictly increasing in range for genus " +
                          std::to_string(genus));
}

long choose2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

}  // namespace

WClass w_class(int genus, const Triple& t) {
  const int below = (t[0] < genus) + (t[1] < genus) + (t[2] < genus);
  if (below == 3) return WClass::a;
  if (below == 0) return WClass::b;
  return WClass::ab;
}

long cube_rank(int genus) {
  const long n = 2L * genus;
  return n * (n - 1) * (n - 2) / 6;
}

std::vector<Triple> cube_monomials(int genus) {
  std::vector<Triple> out;
  out.reserve(cube_rank(genus));
  const int n = 2 * genus;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

long monomial_position(int genus, const Triple& t) {
  require_triple(genus, t);
  const long n = 2L * genus;
  long pos = 0;
  for (long p = 0; p < t[0]; ++p) pos += choose2(n - 1 - p);
  for (long q = t[0] + 1; q < t[1]; ++q) pos += n - 1 - q;
  pos += t[2] - t[1] - 1;
  return pos;
}

ExteriorCubeVector::ExteriorCubeVector(int genus) : genus_(genus) {
  if (genus < 1) throw ValidationError("genus must be a positive integer");
}

ExteriorCubeVector::ExteriorCubeVector(int genus, std::map<Triple, Int> coeffs)
    : genus_(genus), c_(std::move(coeffs)) {
  if (genus < 1) throw ValidationError("genus must be a positive integer");
  for (auto it = c_.begin(); it != c_.end();) {
    require_triple(genus_, it->first);
    if (it->second == 0)
      it = c_.erase(it);
    else
      ++it;
  }
}

ExteriorCubeVector ExteriorCubeVector::monomial(int genus, const Triple& t,
                                                const Int& coeff) {
  std::map<Triple, Int> c;
  c[t] = coeff;
  return ExteriorCubeVector(genus, std::move(c));
}

Int ExteriorCubeVector::coeff(const Triple& t) const {
  const auto it = c_.find(t);
  return it == c_.end() ? Int(0) : it->second;
}

namespace {

void require_same_genus(const ExteriorCubeVector& u,
                        const ExteriorCubeVector& v, const char* what) {
  if (u.genus() != v.genus())
    throw ValidationError(std::string(what) + ": genus mismatch (" +
                          std::to_string(u.genus()) + " vs " +
                          std::to_string(v.genus()) + ")");
}

}  // namespace

ExteriorCubeVector operator+(const ExteriorCubeVector& u,
                             const ExteriorCubeVector& v) {
  require_same_genus(u, v, "cube sum");
  std::map<Triple, Int> c = u.coeffs();
  for (const auto& [t, x] : v.coeffs()) c[t] += x;
  return ExteriorCubeVector(u.genus(), std::move(c));
}

ExteriorCubeVector operator-(const ExteriorCubeVector& u,
                             const ExteriorCubeVector& v) {
  return u + (-v);
}

ExteriorCubeVector operator-(const ExteriorCubeVector& u) {
  std::map<Triple, Int> c;
  for (const auto& [t, x] : u.coeffs()) c[t] = -x;
  return ExteriorCubeVector(u.genus(), std::move(c));
}

ExteriorCubeVector operator*(const ExteriorCubeVector& u, const Int& n) {
  std::map<Triple, Int> c;
  if (n != 0)
    for (const auto& [t, x] : u.coeffs()) c[t] = x * n;
  return ExteriorCubeVector(u.genus(), std::move(c));
}

bool operator==(const ExteriorCubeVector& u, const ExteriorCubeVector& v) {
  return u.genus() == v.genus() && u.coeffs() == v.coeffs();
}

ExteriorCubeVector wedge3(const HomologyVector& x, const HomologyVector& y,
                          const HomologyVector& z) {
  if (x.genus() != y.genus() || y.genus() != z.genus())
    throw ValidationError("wedge3: genus mismatch");
  const long n = 2L * x.genus();
  std::map<Triple, Int> c;
  for (long p = 0; p < n; ++p) {
    if (x[p] == 0) continue;
    for (long q = 0; q < n; ++q) {
      if (q == p || y[q] == 0) continue;
      for (long r = 0; r < n; ++r) {
        if (r == p || r == q || z[r] == 0) continue;
        int i = static_cast<int>(p), j = static_cast<int>(q),
            k = static_cast<int>(r);
        int sign = 1;
        if (i > j) { std::swap(i, j); sign = -sign; }
        if (j > k) { std::swap(j, k); sign = -sign; }
        if (i > j) { std::swap(i, j); sign = -sign; }
        c[{i, j, k}] += Int(sign) * x[p] * y[q] * z[r];
      }
    }
  }
  return ExteriorCubeVector(x.genus(), std::move(c));
}

WSplit w_split(const ExteriorCubeVector& v) {
  std::map<Triple, Int> a, ab, b;
  for (const auto& [t, x] : v.coeffs()) {
    switch (w_class(v.genus(), t)) {
      case WClass::a: a[t] = x; break;
      case WClass::ab: ab[t] = x; break;
      case WClass::b: b[t] = x; break;
    }
  }
  return WSplit{ExteriorCubeVector(v.genus(), std::move(a)),
                ExteriorCubeVector(v.genus(), std::move(ab)),
                ExteriorCubeVector(v.genus(), std::move(b))};
}

ExteriorCubeVector induced_action(const SymplecticMatrix& m,
                                  const ExteriorCubeVector& v) {
  if (m.genus() != v.genus())
    throw ValidationError("induced action: genus mismatch");
  ExteriorCubeVector out(v.genus());
  for (const auto& [t, x] : v.coeffs()) {
    const ExteriorCubeVector img =
        wedge3(m.column(t[0]), m.column(t[1]), m.column(t[2]));
    out = out + img * x;
  }
  return out;
}

ExteriorCubeVector embed(const ExteriorCubeVector& v, int new_genus,
                         int handle_offset) {
  const int g = v.genus();
  if (handle_offset < 0 || g + handle_offset > new_genus)
    throw ValidationError("embed: handles do not fit in the target genus");
  std::map<Triple, Int> c;
  for (const auto& [t, x] : v.coeffs()) {
    Triple s;
    for (int p = 0; p < 3; ++p)
      s[p] = t[p] < g ? t[p] + handle_offset
                      : new_genus + handle_offset + (t[p] - g);
    c[s] = x;
  }
  return ExteriorCubeVector(new_genus, std::move(c));
}

}  // namespace casson
