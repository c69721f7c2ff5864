#include "vlpbw/modes.hpp"

#include <stdexcept>

namespace vlpbw {

namespace {

// b_color(-level) on a single monomial
FockMonomial add_part(const FockMonomial& m, int level, int color) { return m.with_part({level, color}); }

}  // namespace

ModeEngine::ModeEngine(Lattice lattice, TwoCocycle cocycle) : lattice_(std::move(lattice)), cocycle_(std::move(cocycle)) {
  if (cocycle_.rank() != lattice_.rank()) throw std::invalid_argument("ModeEngine: cocycle rank mismatch");
}

int ModeEngine::weight(const GradedVector& v) const {
  auto w = homogeneous_weight(lattice_, v);
  if (!w) throw std::invalid_argument("ModeEngine: vector is zero or not homogeneous");
  return *w;
}

void ModeEngine::clear_cache() {
  general_cache_.clear();
  lattice_cache_.clear();
}

// ---------------------------------------------------------------- Heisenberg

GradedVector ModeEngine::heis_mode(std::size_t color, int m, const GradedVector& v) const {
  RationalVector h(lattice_.rank());
  h.at(color) = 1;
  return heis_mode(h, m, v);
}

GradedVector ModeEngine::heis_mode(const RationalVector& h, int m, const GradedVector& v) const {
  const std::size_t n = lattice_.rank();
  if (h.size() != n) throw std::invalid_argument("heis_mode: dimension mismatch");
  GradedVector out;
  if (m < 0) {
    for (const auto& [mono, c] : v.terms())
      for (std::size_t col = 0; col < n; ++col)
        if (!is_zero(h[col])) out.add(add_part(mono, -m, static_cast<int>(col)), c * h[col]);
    return out;
  }
  // <h, b_d> for every color d
  RationalVector pairing(n);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t c = 0; c < n; ++c)
      if (lattice_.gram(c, d) != 0) pairing[d] += h[c] * make_rational(lattice_.gram(c, d));
  if (m == 0) {
    for (const auto& [mono, c] : v.terms()) {
      Rational s = 0;
      for (std::size_t d = 0; d < n; ++d)
        if (mono.point[d] != 0) s += pairing[d] * make_rational(mono.point[d]);
      out.add(mono, c * s);
    }
    return out;
  }
  // [h(m), b_d(-m)] = m <h, b_d>
  for (const auto& [mono, c] : v.terms()) {
    for (std::size_t i = 0; i < mono.parts.size(); ++i) {
      const Part& p = mono.parts[i];
      if (p.level != m || is_zero(pairing[p.color])) continue;
      out.add(mono.without_part(i), c * make_rational(m) * pairing[p.color]);
    }
  }
  return out;
}

GradedVector ModeEngine::annihilate(const LatticeVector& alpha, int k, const GradedVector& v) const {
  const auto pairing = lattice_.dual(alpha);  // <alpha, b_d>
  GradedVector out;
  for (const auto& [mono, c] : v.terms()) {
    for (std::size_t i = 0; i < mono.parts.size(); ++i) {
      const Part& p = mono.parts[i];
      if (p.level != k || pairing[p.color] == 0) continue;
      out.add(mono.without_part(i), c * make_rational(static_cast<std::int64_t>(k) * pairing[p.color]));
    }
  }
  return out;
}

GradedVector ModeEngine::create(const LatticeVector& alpha, int k, const GradedVector& v) const {
  GradedVector out;
  for (const auto& [mono, c] : v.terms())
    for (std::size_t col = 0; col < alpha.size(); ++col)
      if (alpha[col] != 0) out.add(add_part(mono, k, static_cast<int>(col)), c * make_rational(alpha[col]));
  return out;
}

// ---------------------------------------------------------------- lattice operators

/*
  Y(iota(e_alpha), z) iota(e_beta) (x) p
     = sum_{j,l >= 0} z^{<alpha,beta> + j - l} eps(alpha,beta) B_j A_l (iota(e_{alpha+beta}) (x) p)
  with exp(sum_k alpha(-k) z^k / k) = sum_j B_j z^j and
  exp(-sum_k alpha(k) z^-k / k) = sum_l A_l z^-l. Differentiating the exponentials gives
     j B_j = sum_{k=1..j} alpha(-k) B_{j-k},   l A_l = -sum_{k=1..l} alpha(k) A_{l-k}.
  A_l kills p once l exceeds the level sum of p. The z^{-n-1} coefficient
  pairs each l with the single j = -n-1-<alpha,beta>+l.
*/
GradedVector ModeEngine::lattice_mode_monomial(const LatticeVector& alpha, int n, const FockMonomial& v) {
  if (alpha.is_zero()) return n == -1 ? GradedVector(v) : GradedVector();
  auto key = std::make_tuple(alpha, n, v);
  if (auto it = lattice_cache_.find(key); it != lattice_cache_.end()) return it->second;

  // <alpha, beta> is an integer: both lie in L and the form is integral.
  const std::int64_t shift = lattice_.inner(alpha, v.point);
  const int sign = cocycle_(alpha, v.point);
  FockMonomial target = v;
  target.point = alpha + v.point;

  const int top = v.level_sum();
  std::vector<GradedVector> a_seq;
  a_seq.emplace_back(target, Rational(sign));
  for (int l = 1; l <= top + 1; ++l) {
    GradedVector acc;
    for (int k = 1; k <= l; ++k) acc += annihilate(alpha, k, a_seq[static_cast<std::size_t>(l - k)]);
    acc *= Rational(-1, l);
    a_seq.push_back(std::move(acc));
  }
  if (!a_seq.back().is_zero()) throw std::logic_error("lattice_mode: annihilation series did not truncate");
  a_seq.pop_back();

  GradedVector out;
  const std::int64_t j_offset = -static_cast<std::int64_t>(n) - 1 - shift;
  for (int l = 0; l <= top; ++l) {
    const std::int64_t j = j_offset + l;
    if (j < 0 || a_seq[static_cast<std::size_t>(l)].is_zero()) continue;
    std::vector<GradedVector> b_seq;
    b_seq.push_back(a_seq[static_cast<std::size_t>(l)]);
    for (std::int64_t jj = 1; jj <= j; ++jj) {
      GradedVector acc;
      for (std::int64_t k = 1; k <= jj; ++k)
        acc += create(alpha, static_cast<int>(k), b_seq[static_cast<std::size_t>(jj - k)]);
      acc *= Rational(1, static_cast<unsigned long>(jj));
      b_seq.push_back(std::move(acc));
    }
    out += b_seq.back();
  }
  lattice_cache_.emplace(std::move(key), out);
  return out;
}

GradedVector ModeEngine::lattice_mode(const LatticeVector& alpha, int n, const GradedVector& v) {
  if (alpha.size() != lattice_.rank()) throw std::invalid_argument("lattice_mode: dimension mismatch");
  GradedVector out;
  for (const auto& [mono, c] : v.terms()) {
    GradedVector piece = lattice_mode_monomial(alpha, n, mono);
    piece *= c;
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------- general modes

/*
  For u = b_c(-k) u' the iterate formula with l = -k reads
    u_n v = sum_{i>=0} C(k+i-1, i) b_c(-k-i) u'_{n+i} v
          - (-1)^k sum_{i>=0} C(k+i-1, i) u'_{n-k-i} b_c(i) v,
  using C(-k, i) = (-1)^i C(k+i-1, i). The first sum stops once
  n + i >= wt u' + wt v (u'_{n+i} v would have negative weight); the second
  once i > wt v (b_c(i) v would have negative weight).
*/
GradedVector ModeEngine::general_mode_monomial_uncached(const FockMonomial& u, int n, const FockMonomial& v) {
  const int wt_u = weight(u);
  const int wt_v = weight(v);
  if (wt_u + wt_v - n - 1 < 0) return {};
  if (u.parts.empty()) return lattice_mode_monomial(u.point, n, v);

  const Part peeled = u.parts.front();
  const FockMonomial rest = u.without_part(0);
  const int k = peeled.level;
  const int wt_rest = wt_u - k;

  GradedVector out;
  for (int i = 0; n + i < wt_rest + wt_v; ++i) {
    const GradedVector& inner = general_mode_monomial(rest, n + i, v);
    if (inner.is_zero()) continue;
    GradedVector term = heis_mode(static_cast<std::size_t>(peeled.color), -(k + i), inner);
    term *= Rational(binomial(k + i - 1, i));
    out += term;
  }
  const Rational outer_sign = (k % 2 == 0) ? Rational(-1) : Rational(1);
  const GradedVector v_vec(v);
  for (int i = 0; i <= wt_v; ++i) {
    GradedVector hv = heis_mode(static_cast<std::size_t>(peeled.color), i, v_vec);
    if (hv.is_zero()) continue;
    GradedVector term;
    for (const auto& [mono, c] : hv.terms()) {
      GradedVector piece = general_mode_monomial(rest, n - k - i, mono);
      piece *= c;
      term += piece;
    }
    term *= outer_sign * Rational(binomial(k + i - 1, i));
    out += term;
  }
  return out;
}

const GradedVector& ModeEngine::general_mode_monomial(const FockMonomial& u, int n, const FockMonomial& v) {
  auto key = std::make_tuple(u, n, v);
  if (auto it = general_cache_.find(key); it != general_cache_.end()) return it->second;
  GradedVector value = general_mode_monomial_uncached(u, n, v);
  return general_cache_.emplace(std::move(key), std::move(value)).first->second;
}

GradedVector ModeEngine::general_mode(const GradedVector& u, int n, const GradedVector& v) {
  if (!u.is_zero() && !homogeneous_weight(lattice_, u))
    throw std::invalid_argument("general_mode: u must be homogeneous");
  GradedVector out;
  for (const auto& [um, uc] : u.terms()) {
    for (const auto& [vm, vc] : v.terms()) {
      const GradedVector& piece = general_mode_monomial(um, n, vm);
      if (piece.is_zero()) continue;
      GradedVector scaled = piece;
      scaled *= uc * vc;
      out += scaled;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Virasoro

GradedVector ModeEngine::virasoro_L0(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [mono, c] : v.terms()) out.add(mono, c * weight(mono));
  return out;
}

GradedVector ModeEngine::virasoro_Lm1(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [mono, c] : v.terms()) {
    // abar(-1) v
    for (std::size_t col = 0; col < mono.point.size(); ++col)
      if (mono.point[col] != 0) out.add(add_part(mono, 1, static_cast<int>(col)), c * make_rational(mono.point[col]));
    // n_i times the monomial with part i raised by one level
    for (std::size_t i = 0; i < mono.parts.size(); ++i) {
      const Part p = mono.parts[i];
      out.add(mono.without_part(i).with_part({p.level + 1, p.color}), c * p.level);
    }
  }
  return out;
}

GradedVector ModeEngine::omega() const {
  const std::size_t n = lattice_.rank();
  GradedVector out;
  const auto vac = FockMonomial::vacuum(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& g = lattice_.inverse_gram()[i][j];
      if (is_zero(g)) continue;
      out.add(vac.with_part({1, static_cast<int>(i)}).with_part({1, static_cast<int>(j)}), g / 2);
    }
  return out;
}

}  // namespace vlpbw
