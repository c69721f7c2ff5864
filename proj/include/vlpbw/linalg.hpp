#pragma once

#include "vlpbw/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace vlpbw {

/*
  Exact linear algebra over Q and Z.

  RowSpace keeps a subspace of Q^d in reduced row echelon form. Rows are
  added one at a time; the echelon form is maintained after each insertion,
  so two RowSpaces describe the same subspace exactly when their rows agree.
*/
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == ambient_dim_; }

  const RationalMatrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the spanning set. Returns true when the rank went up.
  bool insert(RationalVector v);

  /// v minus its projection along the pivot columns; zero iff v lies in the space.
  RationalVector reduce(RationalVector v) const;

  bool contains(const RationalVector& v) const;
  bool contains(const RowSpace& other) const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_dim_;
  RationalMatrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank by fraction-free (Bareiss) elimination.
std::size_t fraction_free_rank(IntegerMatrix m);

/// Scales a rational row by the lcm of its denominators.
std::vector<Integer> clear_denominators(std::span<const Rational> row);

/// Hermite normal form of the row lattice of m; zero rows dropped.
/// Pivots are positive and entries above each pivot are reduced into [0, pivot).
IntegerMatrix hermite_normal_form(IntegerMatrix m);

/// Basis of { x : m x = 0 } for an r x c rational matrix (rows of the result are the basis).
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);

/// Coefficients c with sum_j c_j basis[j] == target, or nullopt if target is
/// outside the span. The basis rows must be linearly independent.
std::optional<RationalVector> solve_in_span(const RationalMatrix& basis, const RationalVector& target);

}  // namespace vlpbw
