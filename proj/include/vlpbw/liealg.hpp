#pragma once

#include "vlpbw/pbw.hpp"

#include <string>
#include <vector>

namespace vlpbw {

/// Structure constants of V_+/C_1(V) on the ordered basis of U:
/// [u_i, u_j] = sum_k brackets[i][j][k] u_k.
struct LieTable {
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<RationalVector>> brackets;
};

/// Coordinates of v (homogeneous) modulo C_1 in the generators of its weight.
/// Throws ComplementMismatch when v is not in U + C_1 at that weight.
RationalVector reduce_to_generators(VoaContext& ctx, const GeneratorBasis& gens, const GradedVector& v);

/// [u, v] = class of u_0 v, in U-coordinates.
RationalVector bracket(VoaContext& ctx, const GeneratorBasis& gens, const GradedVector& u, const GradedVector& v);

/// Table over gens computed with bracket(); no closed-form check.
LieTable compute_lie_table(VoaContext& ctx, const GeneratorBasis& gens);

/// The bracket predicted by the closed forms for the lattice generating space, in U-coordinates.
RationalVector closed_form_bracket(VoaContext& ctx, const GeneratorBasis& gens, std::size_t i, std::size_t j);

/// One line per entry where the computed table disagrees with closed_form_bracket.
std::vector<std::string> closed_form_mismatches(VoaContext& ctx, const GeneratorBasis& gens, const LieTable& t);

/// compute_lie_table plus the entrywise closed-form check; throws std::runtime_error with a diff on mismatch.
LieTable lie_table(VoaContext& ctx, const GeneratorBasis& gens);

bool is_antisymmetric(const LieTable& t);
bool satisfies_jacobi(const LieTable& t);

struct KillingResult {
  RationalMatrix killing;  // K(u_i, u_j) = tr(ad u_i ad u_j)
  RationalMatrix kernel;   // basis of the radical of K, rows in U-coordinates
};

KillingResult killing_radical(const LieTable& t);

/// The generating basis of V_L: complement_basis up to the top weight of Phi(L), ordered.
GeneratorBasis generating_basis(VoaContext& ctx);

}  // namespace vlpbw
