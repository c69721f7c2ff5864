#pragma once

#include "vlpbw/fock.hpp"
#include "vlpbw/lattice.hpp"
#include "vlpbw/linalg.hpp"
#include "vlpbw/modes.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace vlpbw {

/// A subspace of V_(n), columns indexed by graded_basis(L, n).
struct SubspaceBasis {
  int ambient_weight = 0;
  RowSpace space;

  std::size_t ambient_dim() const { return space.ambient_dim(); }
  std::size_t rank() const { return space.rank(); }
  const RationalMatrix& rows() const { return space.rows(); }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_weight == b.ambient_weight && a.space == b.space;
  }
};

/// The weight-n candidate for the complement of C_1 does not complement it.
class ComplementMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
  Everything computed for one lattice: cocycle, mode engine, Phi(L), the graded
  pieces and the brute-force C_1 subspaces. Pieces and C_1 are computed on
  first use and kept. Not thread-safe.
*/
class VoaContext {
 public:
  explicit VoaContext(const Lattice& lattice);

  const Lattice& lattice() const { return engine_.lattice(); }
  const TwoCocycle& cocycle() const { return engine_.cocycle(); }
  ModeEngine& engine() { return engine_; }
  const PhiReport& phi() const { return phi_; }

  const GradedPiece& piece(int n);
  /// c1_bruteforce(*this, n), memoized.
  const SubspaceBasis& c1(int n);

 private:
  ModeEngine engine_;
  PhiReport phi_;
  std::map<int, std::unique_ptr<GradedPiece>> pieces_;
  std::map<int, SubspaceBasis> c1_;
};

/// Row space of u_{-1} v (u in V_(p), v in V_(q), p, q >= 1, p + q = n) and L(-1) V_(n-1).
SubspaceBasis c1_bruteforce(VoaContext& ctx, int n);

/// Row space of the monomials that are: products of >= 2 Heisenberg parts; one part on a
/// nonzero point; one part of level >= 2 on the zero point; bare points outside Phi(L) and 0.
SubspaceBasis c1_closedform(VoaContext& ctx, int n);

/// Row space of u_{-2} v for u in V_(p), v in V_(q), p + q = n - 1.
SubspaceBasis c2_subspace(VoaContext& ctx, int n);

/// dim V_(n) - dim C_1(V)_(n) for n = 1..n_max.
std::vector<std::size_t> q_dims(VoaContext& ctx, int n_max);

/// Predicted complement dimension: #{alpha in Phi : <alpha,alpha> = 2n} + rank [n == 1].
std::size_t predicted_q_dim(const Lattice& lattice, const PhiReport& phi, int n);

/// The candidate generating vectors of weight n: b_i(-1) 1 for n = 1, then iota(e_alpha)
/// for alpha in Phi(L) with <alpha,alpha> = 2n.
std::vector<GradedVector> complement_candidates(const Lattice& lattice, const PhiReport& phi, int n);

/// Candidates for n = 1..n_max, each verified to complement C_1(V)_(n) in V_(n).
/// Throws ComplementMismatch otherwise.
std::map<int, std::vector<GradedVector>> complement_basis(VoaContext& ctx, int n_max);

/// Default weight cutoff: max(1, largest norm in Phi / 2) + 2.
int default_weight_cutoff(const PhiReport& phi);

}  // namespace vlpbw
