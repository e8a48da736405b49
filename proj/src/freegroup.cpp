#include "casson/freegroup.hpp"

namespace casson {

bool operator==(const Letter& a, const Letter& b) {
  return a.gen == b.gen && a.sign == b.sign;
}

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw ValidationError("free word: rank must be positive");
}

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank) {
  if (rank < 1) throw ValidationError("free word: rank must be positive");
  for (const Letter& l : letters) {
    if (l.gen < 0 || l.gen >= rank)
      throw ValidationError("free word: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw ValidationError("free word: letter exponent must be ±1");
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int rank, int gen, int sign) {
  return FreeWord(rank, {Letter{gen, sign}});
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  return FreeWord(rank_, std::move(out));
}

bool operator==(const FreeWord& a, const FreeWord& b) {
  return a.rank() == b.rank() && a.letters() == b.letters();
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank())
    throw ValidationError("free word product: rank mismatch");
  std::vector<Letter> all = a.letters();
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return FreeWord(a.rank(), std::move(all));
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  const int rank = w.rank();
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += " ";
    if (rank >= 2 && rank % 2 == 0 && l.gen >= rank / 2)
      out += "y" + std::to_string(l.gen - rank / 2 + 1);
    else
      out += "x" + std::to_string(l.gen + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Endo::Endo(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw ValidationError("endomorphism: rank must be positive");
  if (static_cast<int>(images_.size()) != rank_)
    throw ValidationError("endomorphism: expected one image per generator");
  for (const FreeWord& w : images_)
    if (w.rank() != rank_)
      throw ValidationError("endomorphism: image rank mismatch");
}

Endo Endo::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) images.push_back(FreeWord::generator(rank, i));
  return Endo(rank, std::move(images));
}

bool Endo::is_identity() const { return *this == identity(rank_); }

bool operator==(const Endo& a, const Endo& b) {
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (!(a.image(i) == b.image(i))) return false;
  return true;
}

FreeWord apply(const Endo& e, const FreeWord& w) {
  if (e.rank() != w.rank())
    throw ValidationError("apply: rank mismatch");
  FreeWord out(e.rank());
  for (const Letter& l : w.letters())
    out = out * (l.sign == 1 ? e.image(l.gen) : e.image(l.gen).inverse());
  return out;
}

Endo compose(const Endo& e1, const Endo& e2) {
  if (e1.rank() != e2.rank())
    throw ValidationError("compose: rank mismatch");
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(e2.rank()));
  for (int i = 0; i < e2.rank(); ++i) images.push_back(apply(e1, e2.image(i)));
  return Endo(e1.rank(), std::move(images));
}

IntMat abelianization(const Endo& e) {
  IntMat m = int_zero(e.rank(), e.rank());
  for (int j = 0; j < e.rank(); ++j)
    for (const Letter& l : e.image(j).letters()) m(l.gen, j) += l.sign;
  return m;
}

namespace {

// K12: alpha_1 |-> alpha_2 alpha_1 alpha_2^-1, everything else fixed.
Endo magnus_k12(int g) {
  std::vector<FreeWord> images;
  images.push_back(FreeWord(
      g, {Letter{1, 1}, Letter{0, 1}, Letter{1, -1}}));
  for (int i = 1; i < g; ++i) images.push_back(FreeWord::generator(g, i));
  return Endo(g, std::move(images));
}

Endo magnus_k12_inverse(int g) {
  std::vector<FreeWord> images;
  images.push_back(FreeWord(
      g, {Letter{1, -1}, Letter{0, 1}, Letter{1, 1}}));
  for (int i = 1; i < g; ++i) images.push_back(FreeWord::generator(g, i));
  return Endo(g, std::move(images));
}

// sigma2: alpha_2 |-> alpha_2^-1, everything else fixed. An involution.
Endo magnus_sigma2(int g) {
  std::vector<FreeWord> images;
  for (int i = 0; i < g; ++i)
    images.push_back(FreeWord::generator(g, i, i == 1 ? -1 : 1));
  return Endo(g, std::move(images));
}

}  // namespace

MagnusReport magnus_identity_check(int g) {
  if (g < 2)
    throw ValidationError("magnus check: needs rank at least 2");
  const Endo k12 = magnus_k12(g);
  const Endo k12_inv = magnus_k12_inverse(g);
  const Endo sigma2 = magnus_sigma2(g);

  MagnusReport rep;
  rep.rank = g;
  const Endo conj = compose(sigma2, compose(k12, sigma2));
  rep.conjugation_identity = conj == k12_inv;
  if (!rep.conjugation_identity)
    for (int i = 0; i < g; ++i)
      if (!(conj.image(i) == k12_inv.image(i)))
        rep.witnesses.push_back({k12_inv.image(i), conj.image(i)});
  rep.sigma_involution = compose(sigma2, sigma2).is_identity();
  rep.k12_inverse = compose(k12, k12_inv).is_identity();
  return rep;
}

namespace {

// Alphabet for the surface group: alpha_i at index i, beta_i at index g + i.
FreeWord alpha(int g, int i, int sign = 1) {
  return FreeWord::generator(2 * g, i, sign);
}
FreeWord beta(int g, int i, int sign = 1) {
  return FreeWord::generator(2 * g, g + i, sign);
}

// sigma_i = alpha_i^-1 beta_i^-1 alpha_i beta_i.
FreeWord commutator_sigma(int g, int i) {
  return alpha(g, i, -1) * beta(g, i, -1) * alpha(g, i) * beta(g, i);
}

Endo from_images(int g,
                 const std::vector<std::pair<int, FreeWord>>& overrides) {
  std::vector<FreeWord> images;
  for (int i = 0; i < 2 * g; ++i)
    images.push_back(FreeWord::generator(2 * g, i));
  for (const auto& [idx, w] : overrides) images[static_cast<std::size_t>(idx)] = w;
  return Endo(2 * g, std::move(images));
}

SymplecticMatrix as_symplectic(const IntMat& m, int g) {
  return SymplecticMatrix(g, m);
}

}  // namespace

SuzukiGenerators suzuki_generators(int g) {
  if (g < 3)
    throw ValidationError("suzuki generators: genus must be at least 3");

  // Q, cyclic translation of handles: alpha_i -> alpha_{i+1}, beta_i ->
  // beta_{i+1}, indices mod g.
  std::vector<std::pair<int, FreeWord>> q_images;
  for (int i = 0; i < g; ++i) {
    q_images.push_back({i, alpha(g, (i + 1) % g)});
    q_images.push_back({g + i, beta(g, (i + 1) % g)});
  }
  Endo q = from_images(g, q_images);

  // sigma, twist of knob 1: alpha_1 -> alpha_1^-1 sigma_1^-1,
  // beta_1 -> sigma_1 beta_1^-1.
  const FreeWord s1 = commutator_sigma(g, 0);
  Endo sigma = from_images(
      g, {{0, alpha(g, 0, -1) * s1.inverse()}, {g, s1 * beta(g, 0, -1)}});

  // P, interchange of knobs 1 and 2: alpha_1 -> sigma_1^-1 alpha_2 sigma_1,
  // alpha_2 -> alpha_1, beta_1 -> sigma_1^-1 beta_2 sigma_1, beta_2 -> beta_1.
  Endo p = from_images(g, {{0, s1.inverse() * alpha(g, 1) * s1},
                           {1, alpha(g, 0)},
                           {g, s1.inverse() * beta(g, 1) * s1},
                           {g + 1, beta(g, 0)}});

  // U, the Luft map: alpha_1 -> alpha_1 alpha_2, beta_1 -> beta_1,
  // alpha_2 -> alpha_2^-1 beta_2^-1 alpha_2^-1 beta_2 alpha_2,
  // beta_2 -> alpha_2^-1 beta_2^-1 alpha_1^-1 beta_1 alpha_1 alpha_2.
  Endo u = from_images(
      g, {{0, alpha(g, 0) * alpha(g, 1)},
          {1, alpha(g, 1, -1) * beta(g, 1, -1) * alpha(g, 1, -1) *
                  beta(g, 1) * alpha(g, 1)},
          {g + 1, alpha(g, 1, -1) * beta(g, 1, -1) * alpha(g, 0, -1) *
                      beta(g, 0) * alpha(g, 0) * alpha(g, 1)}});

  return SuzukiGenerators{q,
                          sigma,
                          p,
                          u,
                          as_symplectic(abelianization(q), g),
                          as_symplectic(abelianization(sigma), g),
                          as_symplectic(abelianization(p), g),
                          as_symplectic(abelianization(u), g)};
}

}  // namespace casson
