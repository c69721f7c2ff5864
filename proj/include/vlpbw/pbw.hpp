#pragma once

#include "vlpbw/c1span.hpp"

#include <map>
#include <string>
#include <vector>

namespace vlpbw {

/// One element of the ordered generating basis of U.
struct Generator {
  GradedVector vector;
  int weight = 0;
  std::string label;
};

using GeneratorBasis = std::vector<Generator>;

/// u^gen_index(mode), of degree wt(u) - mode - 1.
struct ModeSymbol {
  std::size_t gen_index = 0;
  int mode = 0;
  int degree = 0;

  friend bool operator==(const ModeSymbol&, const ModeSymbol&) = default;
};

/// Symbols listed from the left, nonincreasing: higher degree first, equal
/// degrees by ascending generator index.
struct StandardMonomial {
  std::vector<ModeSymbol> symbols;
  int total_degree = 0;

  friend bool operator==(const StandardMonomial&, const StandardMonomial&) = default;
};

/// a >= b in the standard order.
bool symbol_not_below(const ModeSymbol& a, const ModeSymbol& b);

/// Flattens a weight -> vectors map, weight ascending then input order.
GeneratorBasis order_basis(const Lattice& lattice, const std::map<int, std::vector<GradedVector>>& u);

/// Every standard monomial of total degree n >= 1 (n == 0 gives the empty monomial).
std::vector<StandardMonomial> standard_monomials(const GeneratorBasis& gens, int n);

/// u^{i1}_{n1} ... u^{ir}_{nr} 1, rightmost mode first.
GradedVector evaluate_monomial(ModeEngine& engine, const GeneratorBasis& gens, const StandardMonomial& m);

struct SpanningResult {
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::size_t monomials = 0;
  bool spans = false;
};

/// Rank of the evaluated degree-n standard monomials against dim V_(n).
SpanningResult spanning_check(VoaContext& ctx, const GeneratorBasis& gens, int n);

struct MinimalityEntry {
  std::size_t removed = 0;  // generator index
  int weight = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool breaks_spanning = false;
};

struct MinimalityReport {
  std::vector<MinimalityEntry> entries;
  bool minimal = true;
};

/// Drops each generator of weight <= n_max in turn and re-runs spanning_check at its weight.
MinimalityReport minimality_check(VoaContext& ctx, const GeneratorBasis& gens, int n_max);

struct CommutatorTerm {
  GradedVector vector;  // C(m, i) u_i v
  int mode = 0;         // m + n - i
};

/// [u^p(m), u^q(n)] = sum_j (w_j)_{k_j}, i = 0 .. wt u^p + wt u^q - 1, zero terms dropped.
std::vector<CommutatorTerm> commutator_expand(ModeEngine& engine, const GeneratorBasis& gens, std::size_t p,
                                              int m, std::size_t q, int n);

/// Same expansion for arbitrary homogeneous u, v.
std::vector<CommutatorTerm> commutator_expand(ModeEngine& engine, const GradedVector& u, int m,
                                              const GradedVector& v, int n);

/// Applies both sides of the commutator expansion to w; true when they agree.
bool commutator_holds(ModeEngine& engine, const GradedVector& u, int m, const GradedVector& v, int n,
                      const GradedVector& w);

}  // namespace vlpbw
