#pragma once

#include "vlpbw/cocycle.hpp"
#include "vlpbw/fock.hpp"
#include "vlpbw/lattice.hpp"

#include <map>
#include <tuple>

namespace vlpbw {

/*
  Mode actions on V_L.

    heis_mode      h(m) for h in h = Q (x) L (coordinates in the lattice basis)
    lattice_mode   iota(e_alpha)_n, read off the vertex operator
                   E^-(-alpha, z) E^+(-alpha, z) e_alpha z^alpha
    general_mode   u_n for any homogeneous u, by peeling Heisenberg creation
                   operators off u with the iterate formula
    virasoro_*     L(0) and L(-1) in closed form

  Results of lattice_mode and general_mode on basis monomials are memoized.
  The caches make an engine unsafe to share between threads; give each task
  its own engine.
*/
class ModeEngine {
 public:
  ModeEngine(Lattice lattice, TwoCocycle cocycle);
  explicit ModeEngine(const Lattice& lattice) : ModeEngine(lattice, TwoCocycle(lattice)) {}

  const Lattice& lattice() const { return lattice_; }
  const TwoCocycle& cocycle() const { return cocycle_; }

  int weight(const FockMonomial& m) const { return weight_of(lattice_, m); }
  /// Weight of a homogeneous nonzero vector; throws for zero or mixed vectors.
  int weight(const GradedVector& v) const;

  GradedVector heis_mode(std::size_t color, int m, const GradedVector& v) const;
  GradedVector heis_mode(const RationalVector& h, int m, const GradedVector& v) const;

  GradedVector lattice_mode(const LatticeVector& alpha, int n, const GradedVector& v);
  GradedVector general_mode(const GradedVector& u, int n, const GradedVector& v);

  GradedVector virasoro_L0(const GradedVector& v) const;
  GradedVector virasoro_Lm1(const GradedVector& v) const;

  /// omega = 1/2 sum_{i,j} (G^-1)_ij b_i(-1) b_j(-1) 1.
  GradedVector omega() const;

  std::size_t cache_size() const { return general_cache_.size() + lattice_cache_.size(); }
  void clear_cache();

 private:
  GradedVector lattice_mode_monomial(const LatticeVector& alpha, int n, const FockMonomial& v);
  const GradedVector& general_mode_monomial(const FockMonomial& u, int n, const FockMonomial& v);
  GradedVector general_mode_monomial_uncached(const FockMonomial& u, int n, const FockMonomial& v);

  // alpha(k) for k >= 1 applied to every term of v
  GradedVector annihilate(const LatticeVector& alpha, int k, const GradedVector& v) const;
  // alpha(-k) for k >= 1
  GradedVector create(const LatticeVector& alpha, int k, const GradedVector& v) const;

  Lattice lattice_;
  TwoCocycle cocycle_;
  std::map<std::tuple<LatticeVector, int, FockMonomial>, GradedVector> lattice_cache_;
  std::map<std::tuple<FockMonomial, int, FockMonomial>, GradedVector> general_cache_;
};

}  // namespace vlpbw
