#include "vlpbw/lattice.hpp"

#include "vlpbw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace vlpbw {

// ---------------------------------------------------------------- vectors

bool LatticeVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
  LatticeVector v(rank);
  v.coords.at(i) = 1;
  return v;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw std::invalid_argument("LatticeVector: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw std::invalid_argument("LatticeVector: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

LatticeVector operator-(LatticeVector a) {
  for (auto& x : a.coords) x = -x;
  return a;
}

LatticeVector operator*(std::int64_t k, LatticeVector a) {
  for (auto& x : a.coords) x *= k;
  return a;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------- lattice

namespace {

// G = U^T D U with U unit upper triangular; returns false if some pivot is <= 0.
bool ldl_decompose(const std::vector<std::vector<std::int64_t>>& g, RationalMatrix& u, RationalVector& d) {
  const std::size_t n = g.size();
  u.assign(n, RationalVector(n));
  d.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = make_rational(g[i][i]);
    for (std::size_t k = 0; k < i; ++k) di -= u[k][i] * u[k][i] * d[k];
    if (sgn(di) <= 0) return false;
    d[i] = di;
    u[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = make_rational(g[i][j]);
      for (std::size_t k = 0; k < i; ++k) s -= u[k][i] * u[k][j] * d[k];
      u[i][j] = s / di;
    }
  }
  return true;
}

RationalMatrix invert(const std::vector<std::vector<std::int64_t>>& g) {
  const std::size_t n = g.size();
  RationalMatrix a(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = make_rational(g[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a[p][col])) ++p;
    if (p == n) throw std::invalid_argument("Lattice: singular Gram matrix");
    std::swap(a[p], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

void sort_vectors(const Lattice& lattice, std::vector<LatticeVector>& vs) {
  std::vector<std::pair<std::int64_t, LatticeVector>> keyed;
  keyed.reserve(vs.size());
  for (auto& v : vs) keyed.emplace_back(lattice.norm(v), std::move(v));
  std::sort(keyed.begin(), keyed.end());
  vs.clear();
  for (auto& [n, v] : keyed) vs.push_back(std::move(v));
}

// Largest integer k with k <= c + sqrt(t), for t >= 0.
Integer floor_center_plus_sqrt(const Rational& c, const Rational& t) {
  auto valid = [&](const Integer& k) {
    Rational diff = Rational(k) - c;
    return sgn(diff) <= 0 || diff * diff <= t;
  };
  double guess = c.get_d() + std::sqrt(std::max(0.0, t.get_d()));
  Integer k(std::floor(guess));
  while (!valid(k)) --k;
  while (valid(k + 1)) ++k;
  return k;
}

// floor(sqrt(q)) for rational q >= 0
Integer floor_sqrt(const Rational& q) {
  Integer fl = q.get_num() / q.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  return root;
}

}  // namespace

Lattice::Lattice(GramMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("Lattice: rank must be positive");
  for (const auto& row : gram_)
    if (row.size() != n) throw std::invalid_argument("Lattice: Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i][i] <= 0 || gram_[i][i] % 2 != 0)
      throw std::invalid_argument("Lattice: diagonal entries must be positive even integers");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Lattice: Gram matrix must be symmetric");
  }
  RationalMatrix u;
  RationalVector d;
  if (!ldl_decompose(gram_, u, d)) throw std::invalid_argument("Lattice: Gram matrix is not positive definite");
  Rational det = 1;
  for (const auto& x : d) det *= x;
  determinant_ = det.get_num();
  inverse_gram_ = invert(gram_);
}

std::int64_t Lattice::inner(const LatticeVector& v, const LatticeVector& w) const {
  const std::size_t n = rank();
  if (v.size() != n || w.size() != n) throw std::invalid_argument("inner: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += gram_[i][j] * w[j];
    s += v[i] * row;
  }
  return s;
}

std::vector<std::int64_t> Lattice::dual(const LatticeVector& v) const {
  const std::size_t n = rank();
  if (v.size() != n) throw std::invalid_argument("dual: dimension mismatch");
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += gram_[i][j] * v[j];
  return out;
}

Rational Lattice::inner(const RationalVector& v, const RationalVector& w) const {
  const std::size_t n = rank();
  if (v.size() != n || w.size() != n) throw std::invalid_argument("inner: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gram_[i][j] != 0) s += v[i] * make_rational(gram_[i][j]) * w[j];
  return s;
}

std::int64_t inner(const Lattice& lattice, const LatticeVector& v, const LatticeVector& w) {
  return lattice.inner(v, w);
}

// ---------------------------------------------------------------- enumeration

Integer box_size(const Lattice& lattice, std::int64_t max_norm) {
  Integer total = 1;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Integer b = floor_sqrt(make_rational(max_norm) * lattice.inverse_gram()[i][i]);
    total *= 2 * b + 1;
  }
  return total;
}

std::vector<LatticeVector> enumerate_box(const Lattice& lattice, std::int64_t max_norm) {
  if (max_norm < 0) throw std::invalid_argument("enumerate: negative norm bound");
  const std::size_t n = lattice.rank();
  // <v,v> <= N forces |x_i| <= sqrt(N (G^-1)_ii), since x_i = <v, b_i^*> with b_i^* the dual basis.
  std::vector<std::int64_t> bound(n);
  for (std::size_t i = 0; i < n; ++i)
    bound[i] = floor_sqrt(make_rational(max_norm) * lattice.inverse_gram()[i][i]).get_si();
  std::vector<LatticeVector> out;
  LatticeVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    if (lattice.norm(x) <= max_norm) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) {
      x[i] = -bound[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  sort_vectors(lattice, out);
  return out;
}

std::vector<LatticeVector> enumerate_pruned(const Lattice& lattice, std::int64_t max_norm) {
  if (max_norm < 0) throw std::invalid_argument("enumerate: negative norm bound");
  const std::size_t n = lattice.rank();
  RationalMatrix u;
  RationalVector d;
  ldl_decompose(lattice.gram(), u, d);
  // <x,x> = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2; fix x_{n-1}, ..., x_0 in turn.
  std::vector<LatticeVector> out;
  LatticeVector x(n);
  const Rational limit = make_rational(max_norm);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& used) {
    Rational center = 0;
    for (std::size_t j = level + 1; j < n; ++j)
      if (x[j] != 0) center -= u[level][j] * make_rational(x[j]);
    Rational slack = (limit - used) / d[level];
    Integer lo = -floor_center_plus_sqrt(-center, slack);
    Integer hi = floor_center_plus_sqrt(center, slack);
    for (Integer k = lo; k <= hi; ++k) {
      x[level] = k.get_si();
      Rational diff = Rational(k) - center;
      Rational next = used + d[level] * diff * diff;
      if (next > limit) continue;
      if (level == 0)
        out.push_back(x);
      else
        descend(level - 1, next);
    }
    x[level] = 0;
  };
  descend(n - 1, Rational(0));
  sort_vectors(lattice, out);
  return out;
}

std::vector<LatticeVector> enumerate_up_to_norm(const Lattice& lattice, std::int64_t max_norm) {
  if (max_norm < 0) throw std::invalid_argument("enumerate: negative norm bound");
  if (box_size(lattice, max_norm) <= 200000) return enumerate_box(lattice, max_norm);
  return enumerate_pruned(lattice, max_norm);
}

std::vector<LatticeVector> shell(const Lattice& lattice, std::int64_t m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("shell: norm must be even and >= 2");
  std::vector<LatticeVector> out;
  for (auto& v : enumerate_up_to_norm(lattice, m))
    if (lattice.norm(v) == m) out.push_back(std::move(v));
  return out;
}

std::int64_t minimal_norm(const Lattice& lattice) {
  // Diagonal entries are norms of basis vectors, so the minimum is at most min_i G_ii.
  std::int64_t cap = lattice.gram(0, 0);
  for (std::size_t i = 1; i < lattice.rank(); ++i) cap = std::min(cap, lattice.gram(i, i));
  std::int64_t best = cap;
  for (const auto& v : enumerate_up_to_norm(lattice, cap))
    if (!v.is_zero()) best = std::min(best, lattice.norm(v));
  return best;
}

// ---------------------------------------------------------------- Phi(L)

std::vector<LatticeVector> orthogonal_family(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  RationalMatrix ortho;  // rational Gram-Schmidt vectors, lattice coordinates
  std::vector<LatticeVector> family;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector v(n);
    v[i] = 1;
    RationalVector bi = v;
    for (const auto& w : ortho) {
      Rational mu = lattice.inner(bi, w) / lattice.inner(w, w);
      for (std::size_t k = 0; k < n; ++k) v[k] -= mu * w[k];
    }
    ortho.push_back(v);
    auto cleared = clear_denominators(v);
    LatticeVector a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = cleared[k].get_si();
    family.push_back(std::move(a));
  }
  return family;
}

std::int64_t phi_enumeration_bound(const Lattice& lattice) {
  std::int64_t total = 0;
  for (const auto& a : orthogonal_family(lattice)) total += lattice.norm(a);
  return total;
}

/*
  The definition quantifies over all of L. Only a finite ball matters:
  <alpha - beta, beta> = <alpha, beta> - <beta, beta> <= |alpha||beta| - |beta|^2,
  which is negative as soon as |beta| > |alpha|. So every beta with
  <beta,beta> > <alpha,alpha> passes automatically and the search runs over
  <beta,beta> <= <alpha,alpha>. Larger balls give the same answer.
*/
std::optional<LatticeVector> phi_witness(const Lattice& lattice, const LatticeVector& alpha,
                                         std::int64_t ball_norm) {
  if (alpha.size() != lattice.rank()) throw std::invalid_argument("phi_witness: dimension mismatch");
  for (const auto& beta : enumerate_up_to_norm(lattice, ball_norm)) {
    if (beta.is_zero() || beta == alpha) continue;
    if (lattice.inner(alpha - beta, beta) >= 0) return beta;
  }
  return std::nullopt;
}

bool is_in_phi(const Lattice& lattice, const LatticeVector& alpha) {
  if (alpha.size() != lattice.rank()) throw std::invalid_argument("is_in_phi: dimension mismatch");
  if (alpha.is_zero()) throw std::invalid_argument("is_in_phi: alpha must be nonzero");
  return !phi_witness(lattice, alpha, lattice.norm(alpha)).has_value();
}

namespace {

PhiReport finish_report(const Lattice& lattice, std::vector<LatticeVector> phi) {
  sort_vectors(lattice, phi);
  PhiReport report;
  for (const auto& a : phi) ++report.norm_histogram[lattice.norm(a)];
  report.spans_lattice = !phi.empty() && zspan_check(lattice, phi);
  report.enumeration_bound = phi_enumeration_bound(lattice);
  report.phi = std::move(phi);
  return report;
}

std::uint64_t parity_class(const LatticeVector& v) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) key |= std::uint64_t{1} << i;
  return key;
}

}  // namespace

/*
  alpha is in Phi(L) iff |alpha + 2x|^2 > |alpha|^2 for every x outside {0, -alpha},
  because |alpha + 2x|^2 - |alpha|^2 = -4 <alpha - beta, beta> with beta = -x.
  So Phi(L) is the set of vectors that are, up to sign, the unique shortest
  element of their class in L/2L. Enumerating norms up to R finds the minimum
  of every class that has a vector of norm <= R; R doubles until all
  2^rank - 1 nonzero classes are hit.
*/
PhiReport phi_set(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  if (n > 24) throw std::invalid_argument("phi_set: rank too large for the coset search");
  const std::uint64_t classes = (std::uint64_t{1} << n) - 1;
  std::int64_t radius = std::max<std::int64_t>(2, minimal_norm(lattice));
  for (;;) {
    std::unordered_map<std::uint64_t, std::vector<LatticeVector>> minima;
    for (auto& v : enumerate_up_to_norm(lattice, radius)) {
      auto key = parity_class(v);
      if (key == 0) continue;
      auto& slot = minima[key];
      if (slot.empty() || lattice.norm(slot.front()) == lattice.norm(v)) slot.push_back(std::move(v));
    }
    if (minima.size() == classes) {
      std::vector<LatticeVector> phi;
      for (auto& [key, vs] : minima)
        if (vs.size() == 2) phi.insert(phi.end(), vs.begin(), vs.end());
      return finish_report(lattice, std::move(phi));
    }
    radius *= 2;
  }
}

PhiReport phi_set_by_definition(const Lattice& lattice) {
  const std::int64_t bound = phi_enumeration_bound(lattice);
  auto ball = enumerate_up_to_norm(lattice, bound);
  std::set<LatticeVector> candidates(ball.begin(), ball.end());
  for (const auto& a : orthogonal_family(lattice)) {
    candidates.insert(a);
    candidates.insert(-a);
  }
  std::vector<LatticeVector> phi;
  for (const auto& alpha : candidates) {
    if (alpha.is_zero()) continue;
    const std::int64_t na = lattice.norm(alpha);
    bool member = true;
    // ball is sorted by norm, so stop at the first beta longer than alpha
    for (const auto& beta : ball) {
      if (lattice.norm(beta) > na) break;
      if (beta.is_zero() || beta == alpha) continue;
      if (lattice.inner(alpha - beta, beta) >= 0) {
        member = false;
        break;
      }
    }
    if (member) phi.push_back(alpha);
  }
  return finish_report(lattice, std::move(phi));
}

bool zspan_check(const Lattice& lattice, const std::vector<LatticeVector>& vectors) {
  const std::size_t n = lattice.rank();
  if (vectors.empty()) throw std::invalid_argument("zspan_check: empty set");
  IntegerMatrix m;
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("zspan_check: dimension mismatch");
    std::vector<Integer> row;
    for (auto x : v.coords) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  auto h = hermite_normal_form(std::move(m));
  if (h.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (h[i][i] != 1) return false;
  return true;
}

// ---------------------------------------------------------------- root lattices

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::vector<std::int64_t>> cartan(std::size_t n, const Edges& edges, std::int64_t scale) {
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 2 * scale;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = -scale;
  return g;
}

}  // namespace

Lattice named_lattice(std::string_view name, std::int64_t scale) {
  if (scale < 1) throw std::invalid_argument("named_lattice: scale must be positive");
  if (name.size() < 2) throw std::invalid_argument("named_lattice: unknown lattice '" + std::string(name) + "'");
  const char family = name[0];
  std::size_t n = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("named_lattice: unknown lattice '" + std::string(name) + "'");
    n = n * 10 + static_cast<std::size_t>(ch - '0');
    if (n > 64) throw std::invalid_argument("named_lattice: rank too large");
  }
  Edges edges;
  switch (family) {
    case 'A':
      if (n < 1) break;
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Lattice(cartan(n, edges, scale));
    case 'D':
      if (n < 4) break;
      for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      return Lattice(cartan(n, edges, scale));
    case 'E':
      if (n < 6 || n > 8) break;
      // Bourbaki labels: chain 1-3-4-...-n with node 2 attached to node 4.
      edges.emplace_back(0, 2);
      for (std::size_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      return Lattice(cartan(n, edges, scale));
    default:
      break;
  }
  throw std::invalid_argument("named_lattice: unknown lattice '" + std::string(name) + "'");
}

}  // namespace vlpbw
