#include "vlpbw/cocycle.hpp"

#include <stdexcept>

namespace vlpbw {

TwoCocycle::TwoCocycle(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  basis_signs_.assign(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      basis_signs_[i][j] = (lattice.gram(i, j) % 2 == 0) ? 1 : -1;
}

int TwoCocycle::operator()(const LatticeVector& alpha, const LatticeVector& beta) const {
  const std::size_t n = rank();
  if (alpha.size() != n || beta.size() != n) throw std::invalid_argument("eps: dimension mismatch");
  // eps(a,b) = prod_{i,j} eps(b_i,b_j)^{a_i b_j}; only the -1 entries matter, mod 2.
  std::int64_t parity = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((alpha[i] & 1) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (basis_signs_[i][j] < 0) parity += beta[j] & 1;
  }
  return (parity & 1) ? -1 : 1;
}

TwoCocycle build_cocycle(const Lattice& lattice) { return TwoCocycle(lattice); }

int eps(const TwoCocycle& cocycle, const LatticeVector& alpha, const LatticeVector& beta) {
  return cocycle(alpha, beta);
}

}  // namespace vlpbw
