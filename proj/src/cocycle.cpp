#include "casson/cocycle.hpp"

#include <utility>

namespace casson {

namespace {

Int omega_basis(int genus, int p, int q) {
  // Gram matrix entries of omega on basis vectors.
  if (p < genus && q >= genus && q - genus == p) return 1;
  if (p >= genus && q < genus && p - genus == q) return -1;
  return 0;
}

// det[omega(e_{t_q}, e_{s_p})] for an all-A triple s and all-B triple t.
Int monomial_pairing(int genus, const Triple& s, const Triple& t) {
  Int m[3][3];
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) m[p][q] = omega_basis(genus, t[q], s[p]);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Int j_pairing(const ExteriorCubeVector& u, const ExteriorCubeVector& v) {
  if (u.genus() != v.genus())
    throw ValidationError("pairing: genus mismatch");
  const int g = u.genus();
  Int total = 0;
  for (const auto& [s, cu] : u.coeffs()) {
    if (w_class(g, s) != WClass::a) continue;
    for (const auto& [t, cv] : v.coeffs()) {
      if (w_class(g, t) != WClass::b) continue;
      total += cu * cv * monomial_pairing(g, s, t);
    }
  }
  return total;
}

Int jt_pairing(const ExteriorCubeVector& u, const ExteriorCubeVector& v) {
  return j_pairing(v, u);
}

Int casson_cocycle(const ExteriorCubeVector& u, const ExteriorCubeVector& v) {
  return Int(2) * j_pairing(u, v);
}

BilinearForm::BilinearForm(int genus, IntMat matrix)
    : genus_(genus), m_(std::move(matrix)) {
  const long d = cube_rank(genus);
  if (m_.rows() != d || m_.cols() != d)
    throw ValidationError("bilinear form: expected a " + std::to_string(d) +
                          "x" + std::to_string(d) + " matrix for genus " +
                          std::to_string(genus));
}

Int BilinearForm::eval(const ExteriorCubeVector& u,
                       const ExteriorCubeVector& v) const {
  if (u.genus() != genus_ || v.genus() != genus_)
    throw ValidationError("bilinear form: genus mismatch");
  Int total = 0;
  for (const auto& [s, cu] : u.coeffs()) {
    const long row = monomial_position(genus_, s);
    for (const auto& [t, cv] : v.coeffs())
      total += cu * m_(row, monomial_position(genus_, t)) * cv;
  }
  return total;
}

bool operator==(const BilinearForm& a, const BilinearForm& b) {
  return a.genus() == b.genus() && equal(a.matrix(), b.matrix());
}

BilinearForm j_form(int genus) {
  const long d = cube_rank(genus);
  IntMat m = int_zero(d, d);
  const std::vector<Triple> basis = cube_monomials(genus);
  for (long r = 0; r < d; ++r) {
    if (w_class(genus, basis[r]) != WClass::a) continue;
    for (long c = 0; c < d; ++c) {
      if (w_class(genus, basis[c]) != WClass::b) continue;
      m(r, c) = monomial_pairing(genus, basis[r], basis[c]);
    }
  }
  return BilinearForm(genus, std::move(m));
}

BilinearForm jt_form(int genus) {
  return BilinearForm(genus, j_form(genus).matrix().transpose());
}

namespace {

std::vector<IntMat> gl_generators(int g) {
  std::vector<IntMat> gens;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      IntMat e = int_identity(g);
      e(i, j) = 1;  // a_j |-> a_j + a_i
      gens.push_back(std::move(e));
    }
  IntMat d = int_identity(g);
  d(0, 0) = -1;
  gens.push_back(std::move(d));
  return gens;
}

struct SupportSolve {
  long dimension = 0;
  std::vector<IntVec> kernel;  // coordinates over the support positions
};

// Solve B(g u, g v) = B(u, v) for forms supported on the given
// (row-class, col-class) block patterns, over all GL generators.
SupportSolve solve_invariant_forms(
    int genus, const std::vector<std::pair<WClass, WClass>>& patterns,
    std::vector<std::pair<long, long>>& support_out) {
  const std::vector<Triple> basis = cube_monomials(genus);
  const long d = cube_rank(genus);

  auto in_patterns = [&](long r, long c) {
    const WClass wr = w_class(genus, basis[r]);
    const WClass wc = w_class(genus, basis[c]);
    for (const auto& p : patterns)
      if (p.first == wr && p.second == wc) return true;
    return false;
  };

  support_out.clear();
  std::map<std::pair<long, long>, long> var_of;
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c)
      if (in_patterns(r, c)) {
        var_of[{r, c}] = static_cast<long>(support_out.size());
        support_out.push_back({r, c});
      }
  const long nvars = static_cast<long>(support_out.size());

  // Rows of the constraint system, one per (generator, monomial pair).
  std::vector<IntVec> rows;
  for (const IntMat& g : gl_generators(genus)) {
    const SymplecticMatrix m = gl_embed(g);
    // Image of every basis monomial under the induced action. gl_embed
    // preserves the Lagrangians, so images stay within one W-class and the
    // constraints never leave the supported blocks.
    std::vector<ExteriorCubeVector> image;
    image.reserve(d);
    for (long s = 0; s < d; ++s)
      image.push_back(
          induced_action(m, ExteriorCubeVector::monomial(genus, basis[s])));
    for (long s = 0; s < d; ++s) {
      for (long t = 0; t < d; ++t) {
        if (!in_patterns(s, t)) continue;
        IntVec eq(nvars);
        for (long k = 0; k < nvars; ++k) eq(k) = 0;
        for (const auto& [ms, alpha] : image[s].coeffs()) {
          const long rm = monomial_position(genus, ms);
          for (const auto& [mt, beta] : image[t].coeffs()) {
            const auto it = var_of.find({rm, monomial_position(genus, mt)});
            if (it == var_of.end())
              throw InternalError(
                  "invariance constraint escaped the supported blocks");
            eq(it->second) += alpha * beta;
          }
        }
        eq(var_of.at({s, t})) -= 1;
        bool nonzero = false;
        for (long k = 0; k < nvars; ++k)
          if (eq(k) != 0) {
            nonzero = true;
            break;
          }
        if (nonzero) rows.push_back(std::move(eq));
      }
    }
  }

  IntMat system = int_zero(std::max<long>(1, static_cast<long>(rows.size())),
                           nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (long k = 0; k < nvars; ++k) system(static_cast<long>(r), k) =
        rows[r](k);

  SupportSolve out;
  out.kernel = kernel_basis(system);
  out.dimension = static_cast<long>(out.kernel.size());
  return out;
}

BilinearForm form_from_support(int genus,
                               const std::vector<std::pair<long, long>>& supp,
                               const IntVec& coords) {
  const long d = cube_rank(genus);
  IntMat m = int_zero(d, d);
  for (std::size_t k = 0; k < supp.size(); ++k)
    m(supp[k].first, supp[k].second) = coords(static_cast<long>(k));
  return BilinearForm(genus, std::move(m));
}

IntVec restrict_to_support(const BilinearForm& f,
                           const std::vector<std::pair<long, long>>& supp) {
  IntVec v(static_cast<long>(supp.size()));
  for (std::size_t k = 0; k < supp.size(); ++k)
    v(static_cast<long>(k)) = f.matrix()(supp[k].first, supp[k].second);
  return v;
}

}  // namespace

UniquenessReport uniqueness_certificate(int genus) {
  if (genus != 3 && genus != 4)
    throw ValidationError(
        "uniqueness certificate: genus must be 3 or 4 (desk scale)");
  std::vector<std::pair<long, long>> supp;
  const SupportSolve sol =
      solve_invariant_forms(genus, {{WClass::a, WClass::b}}, supp);

  UniquenessReport rep;
  rep.genus = genus;
  rep.dimension = sol.dimension;
  for (const IntVec& v : sol.kernel)
    rep.basis.push_back(form_from_support(genus, supp, v));
  if (sol.dimension == 1) {
    const IntVec j = restrict_to_support(j_form(genus), supp);
    const IntVec& gen = sol.kernel.front();
    rep.matches_pairing = equal(gen, j) || equal(gen, IntVec(-j));
  }
  return rep;
}

RelaxedUniquenessReport relaxed_invariance_basis(int genus) {
  if (genus != 3 && genus != 4)
    throw ValidationError(
        "relaxed invariance basis: genus must be 3 or 4 (desk scale)");
  std::vector<std::pair<long, long>> supp;
  const SupportSolve sol = solve_invariant_forms(
      genus, {{WClass::a, WClass::b}, {WClass::b, WClass::a}}, supp);

  RelaxedUniquenessReport rep;
  rep.genus = genus;
  rep.dimension = sol.dimension;
  for (const IntVec& v : sol.kernel)
    rep.basis.push_back(form_from_support(genus, supp, v));
  rep.contains_pairing =
      in_span(sol.kernel, restrict_to_support(j_form(genus), supp));
  rep.contains_transpose =
      in_span(sol.kernel, restrict_to_support(jt_form(genus), supp));
  return rep;
}

MinusIdReport minus_id_check(int genus) {
  if (genus < 3)
    throw ValidationError("minus-id check: genus must be at least 3");
  IntMat minus = int_identity(genus);
  for (long i = 0; i < genus; ++i) minus(i, i) = -1;
  const SymplecticMatrix m = gl_embed(minus);

  MinusIdReport rep;
  rep.genus = genus;
  for (const Triple& t : cube_monomials(genus)) {
    const ExteriorCubeVector mono = ExteriorCubeVector::monomial(genus, t);
    ++rep.checked;
    if (!(induced_action(m, mono) == -mono)) rep.failures.push_back(t);
  }
  return rep;
}

}  // namespace casson
