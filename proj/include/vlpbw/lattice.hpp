#pragma once

#include "vlpbw/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vlpbw {

/// Integer coordinates in the lattice basis b_1..b_rank.
struct LatticeVector {
  std::vector<std::int64_t> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords(rank, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const;

  static LatticeVector unit(std::size_t rank, std::size_t i);

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a);
  friend LatticeVector operator*(std::int64_t k, LatticeVector a);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

std::string to_string(const LatticeVector& v);

using GramMatrix = std::vector<std::vector<std::int64_t>>;

/*
  A positive-definite even lattice, given by its Gram matrix in a fixed basis.
  The constructor validates symmetry, evenness of the diagonal and positive
  definiteness (all leading principal minors > 0) and throws
  std::invalid_argument otherwise.
*/
class Lattice {
 public:
  explicit Lattice(GramMatrix gram);

  std::size_t rank() const { return gram_.size(); }
  const GramMatrix& gram() const { return gram_; }
  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  /// Inverse Gram matrix over Q.
  const RationalMatrix& inverse_gram() const { return inverse_gram_; }
  /// det of the Gram matrix.
  const Integer& determinant() const { return determinant_; }

  std::int64_t inner(const LatticeVector& v, const LatticeVector& w) const;
  std::int64_t norm(const LatticeVector& v) const { return inner(v, v); }
  /// The functional <v, b_i> for i = 1..rank, i.e. gram * v.
  std::vector<std::int64_t> dual(const LatticeVector& v) const;

  /// Rational Gram-matrix inner product for vectors in h = Q (x) L.
  Rational inner(const RationalVector& v, const RationalVector& w) const;

  LatticeVector zero() const { return LatticeVector(rank()); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  GramMatrix gram_;
  RationalMatrix inverse_gram_;
  Integer determinant_;
};

/// <v, w> = v^T gram w; throws on dimension mismatch.
std::int64_t inner(const Lattice& lattice, const LatticeVector& v, const LatticeVector& w);

/// Every v with <v,v> <= max_norm, sorted by norm then lexicographically.
/// Chooses the coordinate-box search when the box is small, the pruned
/// search otherwise; both produce identical output.
std::vector<LatticeVector> enumerate_up_to_norm(const Lattice& lattice, std::int64_t max_norm);

/// Reference enumeration: the box |x_i| <= sqrt(N (G^-1)_ii) filtered by norm.
std::vector<LatticeVector> enumerate_box(const Lattice& lattice, std::int64_t max_norm);

/// Fincke-Pohst style depth-first search over the exact LDL^T decomposition.
std::vector<LatticeVector> enumerate_pruned(const Lattice& lattice, std::int64_t max_norm);

/// Number of integer points in the coordinate box used by enumerate_box.
Integer box_size(const Lattice& lattice, std::int64_t max_norm);

/// Vectors of norm exactly m; m must be even and >= 2.
std::vector<LatticeVector> shell(const Lattice& lattice, std::int64_t m);

/// Smallest nonzero norm.
std::int64_t minimal_norm(const Lattice& lattice);

/// Cleared Gram-Schmidt vectors of the standard basis, in lattice coordinates.
std::vector<LatticeVector> orthogonal_family(const Lattice& lattice);

/// Sum of the norms of orthogonal_family(); bounds the norm of every element of Phi(L).
std::int64_t phi_enumeration_bound(const Lattice& lattice);

/// Some beta (not 0, not alpha) with <alpha - beta, beta> >= 0 and <beta,beta> <= ball_norm,
/// if one exists. The membership test uses ball_norm = <alpha,alpha>.
std::optional<LatticeVector> phi_witness(const Lattice& lattice, const LatticeVector& alpha,
                                         std::int64_t ball_norm);

/// alpha in Phi(L): <alpha - beta, beta> < 0 for every beta other than 0 and alpha.
bool is_in_phi(const Lattice& lattice, const LatticeVector& alpha);

struct PhiReport {
  std::vector<LatticeVector> phi;  // norm-then-lex order
  std::map<std::int64_t, std::size_t> norm_histogram;
  bool spans_lattice = false;
  std::int64_t enumeration_bound = 0;
};

/// Phi(L) via the cosets of 2L: alpha is in Phi(L) exactly when +-alpha are the
/// only vectors of minimal norm in alpha + 2L.
PhiReport phi_set(const Lattice& lattice);

/// Phi(L) straight from the definition, over every vector of norm <= phi_enumeration_bound.
PhiReport phi_set_by_definition(const Lattice& lattice);

/// True iff the integer row span of `vectors` is all of Z^rank.
bool zspan_check(const Lattice& lattice, const std::vector<LatticeVector>& vectors);

/// Gram matrix of a simply-laced root lattice (A_n, D_n with n >= 4, E6, E7, E8)
/// multiplied by `scale`.
Lattice named_lattice(std::string_view name, std::int64_t scale = 1);

}  // namespace vlpbw
