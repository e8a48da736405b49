#include "casson/engine.hpp"

#include <algorithm>

namespace casson {

AnnotatedWord::AnnotatedWord(int genus, std::vector<Block> blocks)
    : genus_(genus), blocks_(std::move(blocks)) {
  if (genus < 1) throw ValidationError("annotated word: genus must be positive");
  effective_f_.reserve(blocks_.size());
  taus_.reserve(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    const std::string at = "block " + std::to_string(i);
    if (b.word.genus() != genus_)
      throw ValidationError(at + ": genus " + std::to_string(b.word.genus()) +
                            " does not match the word's genus " +
                            std::to_string(genus_));
    if (!is_torelli(b.word))
      throw ValidationError(at + ": not a Torelli word (nontrivial homology "
                                 "action)");
    taus_.push_back(tau(b.word));
    if (b.side == Side::none) {
      if (!b.declared_f)
        throw ValidationError(
            at + ": under-annotated (untagged block needs a declared F "
                 "value or a TA/TB side tag)");
      effective_f_.push_back(*b.declared_f);
      continue;
    }
    const SideClassification cls = classify_side(b.word);
    if (b.side == Side::tb && !cls.tb_compatible)
      throw ValidationError(
          at + ": tagged TB but tau has a nonzero W_B component");
    if (b.side == Side::ta && !cls.ta_compatible)
      throw ValidationError(
          at + ": tagged TA but tau has a nonzero W_A component");
    if (b.declared_f && *b.declared_f != 0)
      throw ValidationError(
          at + ": side-tagged blocks carry F = 0, got a nonzero declaration");
    effective_f_.push_back(0);
  }
}

Int eval_F(const AnnotatedWord& w) {
  Int f_acc = 0;
  ExteriorCubeVector tau_acc(w.genus());
  for (std::size_t i = 0; i < w.blocks().size(); ++i) {
    const ExteriorCubeVector& t = w.block_tau(i);
    f_acc = f_acc + w.block_f(i) - casson_cocycle(tau_acc, t);
    tau_acc = tau_acc + t;
  }
  return f_acc;
}

Int eval_lambda(const AnnotatedWord& w, bool flip) {
  const Int f = eval_F(w);
  return flip ? f : -f;
}

ExteriorCubeVector tau(const AnnotatedWord& w) {
  ExteriorCubeVector t(w.genus());
  for (std::size_t i = 0; i < w.blocks().size(); ++i) t = t + w.block_tau(i);
  return t;
}

namespace {

Block embed_block(const Block& b, int new_genus, int handle_offset) {
  return Block{embed_word(b.word, new_genus, handle_offset), b.declared_f,
               b.side};
}

}  // namespace

AnnotatedWord connected_sum(const AnnotatedWord& a, const AnnotatedWord& b) {
  const int g = a.genus(), h = b.genus();
  std::vector<Block> blocks;
  blocks.reserve(a.blocks().size() + b.blocks().size());
  for (const Block& blk : a.blocks())
    blocks.push_back(embed_block(blk, g + h, 0));
  for (const Block& blk : b.blocks())
    blocks.push_back(embed_block(blk, g + h, g));
  return AnnotatedWord(g + h, std::move(blocks));
}

AnnotatedWord stabilize(const AnnotatedWord& w, int new_genus) {
  if (new_genus < w.genus())
    throw ValidationError("stabilize: target genus below the word's genus");
  std::vector<Block> blocks;
  blocks.reserve(w.blocks().size());
  for (const Block& blk : w.blocks())
    blocks.push_back(embed_block(blk, new_genus, 0));
  return AnnotatedWord(new_genus, std::move(blocks));
}

namespace {

Block separating_block(const SeparatingTwist& k, int genus) {
  if (!k.f_value)
    throw ValidationError(
        "separating twist: surgery needs a declared f_value on the twist");
  SeparatingTwist unit = k;
  unit.genus = genus;
  return Block{TwistWord(genus, {TwistGenerator(unit)}), *k.f_value,
               Side::none};
}

AnnotatedWord with_twist_prefix(const AnnotatedWord& w,
                                const SeparatingTwist& k, int n) {
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(n) + w.blocks().size());
  for (int i = 0; i < n; ++i) blocks.push_back(separating_block(k, w.genus()));
  for (const Block& blk : w.blocks()) blocks.push_back(blk);
  return AnnotatedWord(w.genus(), std::move(blocks));
}

}  // namespace

std::vector<Int> surgery_increment_series(const AnnotatedWord& w,
                                          const SeparatingTwist& k,
                                          int n_max) {
  if (n_max < 1) throw ValidationError("surgery series: n_max must be >= 1");
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    values.push_back(eval_F(with_twist_prefix(w, k, n)));
  for (std::size_t i = 2; i < values.size(); ++i)
    if (values[i] - values[i - 1] != values[1] - values[0])
      throw InternalError(
          "surgery series: increments are not constant (fold bug)");
  return values;
}

Int boundary_link_alternating_sum(const AnnotatedWord& w,
                                  const SeparatingTwist& k,
                                  const SeparatingTwist& l, int k_power,
                                  int l_power) {
  if (k_power < 0 || l_power < 0)
    throw ValidationError("boundary link: powers must be non-negative");
  auto f = [&](int kp, int lp) {
    return eval_F(with_twist_prefix(with_twist_prefix(w, k, kp), l, lp));
  };
  return f(k_power + 1, l_power + 1) - f(k_power, l_power + 1) -
         f(k_power + 1, l_power) + f(k_power, l_power);
}

LaurentPolynomial::LaurentPolynomial(std::map<long, Int> coeffs)
    : c_(std::move(coeffs)) {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

Int LaurentPolynomial::coeff(long k) const {
  const auto it = c_.find(k);
  return it == c_.end() ? Int(0) : it->second;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [k, v] : c_)
    if (coeff(-k) != v) return false;
  return true;
}

Int LaurentPolynomial::at_one() const {
  Int s = 0;
  for (const auto& [k, v] : c_) s += v;
  return s;
}

Int LaurentPolynomial::second_derivative_at_one() const {
  Int s = 0;
  for (const auto& [k, v] : c_) s += v * k * (k - 1);
  return s;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.coeffs() == b.coeffs();
}

SeifertMatrix::SeifertMatrix(IntMat v) : v_(std::move(v)) {
  if (v_.rows() != v_.cols())
    throw ValidationError("Seifert matrix: must be square");
  if (v_.rows() % 2 != 0)
    throw ValidationError("Seifert matrix: size must be even");
}

namespace {

// Dense polynomials in t with integer coefficients, for the determinant of
// V - t tV. Bareiss elimination works over any integral domain, so the
// divisions below are exact.
using Poly = std::vector<Int>;

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.empty()) throw InternalError("polynomial division by zero");
  Poly rem = a;
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    const std::size_t shift = rem.size() - b.size();
    if (rem.back() % b.back() != 0)
      throw InternalError("polynomial division is not exact");
    const Int q = rem.back() / b.back();
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) throw InternalError("polynomial division left a remainder");
  return quot;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {Int(1)};
  int sign = 1;
  Poly prev{Int(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && poly_is_zero(m[piv][k])) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = poly_div_exact(
            poly_sub(poly_mul(m[k][k], m[i][j]), poly_mul(m[i][k], m[k][j])),
            prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Poly out = m[n - 1][n - 1];
  if (sign < 0)
    for (Int& c : out) c = -c;
  return out;
}

}  // namespace

LaurentPolynomial alexander_from_seifert(const SeifertMatrix& v) {
  const long n = v.size();
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    auto& row = m[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
      Poly p{v.v()(i, j), -v.v()(j, i)};  // V_ij - t V_ji
      while (!p.empty() && p.back() == 0) p.pop_back();
      row[static_cast<std::size_t>(j)] = std::move(p);
    }
  }
  const Poly p = poly_det(std::move(m));

  Int at_one = 0;
  for (const Int& c : p) at_one += c;
  if (at_one != 1 && at_one != -1)
    throw ValidationError(
        "Seifert matrix: det(V - tV^T) at t = 1 is " + at_one.get_str() +
        ", not ±1; V is not the Seifert pairing of a knot");

  std::map<long, Int> coeffs;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    coeffs[static_cast<long>(k) - n / 2] = at_one == 1 ? p[k] : -p[k];
  }
  LaurentPolynomial delta(std::move(coeffs));
  if (!delta.is_symmetric())
    throw InternalError("normalized Alexander polynomial is not symmetric");
  if (delta.at_one() != 1)
    throw InternalError("normalized Alexander polynomial is not 1 at t = 1");
  return delta;
}

Int half_second_derivative_at_one(const LaurentPolynomial& p) {
  const Int dd = p.second_derivative_at_one();
  if (dd % 2 != 0)
    throw InternalError("second derivative at 1 is odd; polynomial is not "
                        "symmetric");
  return dd / 2;
}

Int casson_surgery(const SeifertMatrix& v, const Int& n, int sign) {
  if (sign != 1 && sign != -1)
    throw ValidationError("surgery: sign convention must be +1 or -1");
  const LaurentPolynomial delta = alexander_from_seifert(v);
  return n * half_second_derivative_at_one(delta) * sign;
}

}  // namespace casson
