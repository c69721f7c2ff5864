#pragma once

#include "vlpbw/lattice.hpp"

#include <vector>

namespace vlpbw {

/*
  Bimultiplicative 2-cocycle eps: L x L -> {+1,-1} with
  eps(a,b) eps(b,a) = (-1)^<a,b>.

  On the basis, eps(b_i, b_j) = (-1)^<b_i,b_j> for i > j and +1 for i <= j.
  Any other choice differs by a coboundary, which rescales the basis vectors
  iota(e_alpha) by signs; structure constants downstream change accordingly.
*/
class TwoCocycle {
 public:
  explicit TwoCocycle(const Lattice& lattice);

  std::size_t rank() const { return basis_signs_.size(); }
  /// eps(b_i, b_j) as +1 / -1.
  int basis_sign(std::size_t i, std::size_t j) const { return basis_signs_[i][j]; }
  const std::vector<std::vector<int>>& basis_signs() const { return basis_signs_; }

  int operator()(const LatticeVector& alpha, const LatticeVector& beta) const;

 private:
  std::vector<std::vector<int>> basis_signs_;
};

TwoCocycle build_cocycle(const Lattice& lattice);

/// eps(alpha, beta); throws std::invalid_argument on dimension mismatch.
int eps(const TwoCocycle& cocycle, const LatticeVector& alpha, const LatticeVector& beta);

}  // namespace vlpbw
