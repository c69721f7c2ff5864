#pragma once

#include "vlpbw/lattice.hpp"
#include "vlpbw/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vlpbw {

/// One Heisenberg creation operator b_color(-level), level >= 1; color is 0-based.
struct Part {
  int level = 1;
  int color = 0;

  friend bool operator==(const Part&, const Part&) = default;
  friend auto operator<=>(const Part&, const Part&) = default;
};

/// Canonical order of parts inside a monomial: level descending, then color ascending.
inline bool part_precedes(const Part& a, const Part& b) {
  return a.level != b.level ? a.level > b.level : a.color < b.color;
}

/*
  Basis element b_{c1}(-n1) ... b_{ck}(-nk) iota(e_point) of V_L.

  The section sign of iota(e_point) is kept in the coefficient, so the label is
  the bare lattice point. Parts are stored in canonical order.
*/
struct FockMonomial {
  LatticeVector point;
  std::vector<Part> parts;

  FockMonomial() = default;
  explicit FockMonomial(LatticeVector p, std::vector<Part> ps = {});

  static FockMonomial vacuum(std::size_t rank) { return FockMonomial(LatticeVector(rank)); }

  /// Sum of the levels of the parts.
  int level_sum() const;
  bool is_vacuum() const { return parts.empty() && point.is_zero(); }

  FockMonomial with_part(Part p) const;
  FockMonomial without_part(std::size_t index) const;

  friend bool operator==(const FockMonomial&, const FockMonomial&) = default;
  friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
};

/// <a,a>/2 + n1 + ... + nk.
int weight_of(const Lattice& lattice, const FockMonomial& m);

/// Finite rational combination of monomials; zero coefficients are never stored.
class GradedVector {
 public:
  using Terms = std::map<FockMonomial, Rational>;

  GradedVector() = default;
  explicit GradedVector(FockMonomial m, Rational c = 1);

  void add(const FockMonomial& m, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const FockMonomial& m) const;

  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector& operator*=(const Rational& c);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(const Rational& c, GradedVector a) { return a *= c; }

  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  Terms terms_;
};

/// The common weight of all terms, or nullopt for the zero vector or a mixed vector.
std::optional<int> homogeneous_weight(const Lattice& lattice, const GradedVector& v);

/// Every monomial of weight n: lattice points with <b,b>/2 <= n (norm-then-lex),
/// each followed by the colored partitions of n - <b,b>/2.
std::vector<FockMonomial> graded_basis(const Lattice& lattice, int n);

/// Monomial -> position lookup for one graded piece.
class GradedPiece {
 public:
  GradedPiece(const Lattice& lattice, int weight);

  int weight() const { return weight_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FockMonomial>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const FockMonomial& m) const;

  /// Coordinates of a vector of this weight; throws if some term lies elsewhere.
  RationalVector coordinates(const GradedVector& v) const;
  GradedVector vector(const RationalVector& coords) const;

 private:
  int weight_;
  std::vector<FockMonomial> basis_;
  std::map<FockMonomial, std::size_t> index_;
};

/// Colored partitions of n into parts (level >= 1, color < colors), canonical order.
std::vector<std::vector<Part>> colored_partitions(int n, int colors);

std::string to_string(const FockMonomial& m);
std::string to_string(const GradedVector& v);

}  // namespace vlpbw
