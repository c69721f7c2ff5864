#include "vlpbw/pbw.hpp"

#include <functional>

namespace vlpbw {

namespace {

std::string generator_label(const GradedVector& v) {
  if (v.size() != 1) return to_string(v);
  const auto& [m, c] = *v.terms().begin();
  if (c != 1) return to_string(v);
  if (m.parts.empty()) return "e" + to_string(m.point);
  if (m.parts.size() == 1 && m.point.is_zero() && m.parts.front().level == 1)
    return "h" + std::to_string(m.parts.front().color + 1);
  return to_string(m);
}

}  // namespace

bool symbol_not_below(const ModeSymbol& a, const ModeSymbol& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.gen_index <= b.gen_index;
}

GeneratorBasis order_basis(const Lattice& lattice, const std::map<int, std::vector<GradedVector>>& u) {
  GeneratorBasis out;
  for (const auto& [weight, vectors] : u) {
    for (const auto& v : vectors) {
      auto w = homogeneous_weight(lattice, v);
      if (!w || *w != weight) throw std::invalid_argument("order_basis: generator " + to_string(v) + " is not of weight " + std::to_string(weight));
      out.push_back({v, weight, generator_label(v)});
    }
  }
  return out;
}

std::vector<StandardMonomial> standard_monomials(const GeneratorBasis& gens, int n) {
  if (n < 0) throw std::invalid_argument("standard_monomials: degree must be nonnegative");
  std::vector<StandardMonomial> out;
  StandardMonomial current;
  // Next symbol is (degree, gen) with degree < prev degree, or equal degree and gen >= prev gen.
  std::function<void(int, int, std::size_t)> extend = [&](int remaining, int max_degree, std::size_t min_gen) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int d = std::min(remaining, max_degree); d >= 1; --d) {
      for (std::size_t g = (d == max_degree ? min_gen : 0); g < gens.size(); ++g) {
        current.symbols.push_back({g, gens[g].weight - 1 - d, d});
        current.total_degree += d;
        extend(remaining - d, d, g);
        current.total_degree -= d;
        current.symbols.pop_back();
      }
    }
  };
  extend(n, n, 0);
  return out;
}

GradedVector evaluate_monomial(ModeEngine& engine, const GeneratorBasis& gens, const StandardMonomial& m) {
  GradedVector v(FockMonomial::vacuum(engine.lattice().rank()));
  for (auto it = m.symbols.rbegin(); it != m.symbols.rend(); ++it) {
    v = engine.general_mode(gens.at(it->gen_index).vector, it->mode, v);
    if (v.is_zero()) break;
  }
  return v;
}

SpanningResult spanning_check(VoaContext& ctx, const GeneratorBasis& gens, int n) {
  if (n < 1) throw std::invalid_argument("spanning_check: weight must be >= 1");
  const GradedPiece& piece = ctx.piece(n);
  const auto monomials = standard_monomials(gens, n);
  IntegerMatrix rows;
  rows.reserve(monomials.size());
  for (const auto& m : monomials) {
    GradedVector v = evaluate_monomial(ctx.engine(), gens, m);
    if (v.is_zero()) continue;
    rows.push_back(clear_denominators(piece.coordinates(v)));
  }
  SpanningResult result;
  result.dim = piece.dim();
  result.monomials = monomials.size();
  result.rank = fraction_free_rank(std::move(rows));
  result.spans = result.rank == result.dim;
  return result;
}

MinimalityReport minimality_check(VoaContext& ctx, const GeneratorBasis& gens, int n_max) {
  MinimalityReport report;
  for (std::size_t idx = 0; idx < gens.size(); ++idx) {
    const int w = gens[idx].weight;
    if (w > n_max) continue;
    GeneratorBasis reduced;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != idx) reduced.push_back(gens[j]);
    SpanningResult r = spanning_check(ctx, reduced, w);
    report.entries.push_back({idx, w, r.rank, r.dim, !r.spans});
    if (r.spans) report.minimal = false;
  }
  return report;
}

std::vector<CommutatorTerm> commutator_expand(ModeEngine& engine, const GradedVector& u, int m,
                                              const GradedVector& v, int n) {
  const int top = engine.weight(u) + engine.weight(v);
  std::vector<CommutatorTerm> out;
  for (int i = 0; i < top; ++i) {
    GradedVector w = engine.general_mode(u, i, v);
    if (w.is_zero()) continue;
    Integer c = binomial(m, i);
    if (sgn(c) == 0) continue;
    w *= Rational(c);
    out.push_back({std::move(w), m + n - i});
  }
  return out;
}

std::vector<CommutatorTerm> commutator_expand(ModeEngine& engine, const GeneratorBasis& gens, std::size_t p,
                                              int m, std::size_t q, int n) {
  return commutator_expand(engine, gens.at(p).vector, m, gens.at(q).vector, n);
}

bool commutator_holds(ModeEngine& engine, const GradedVector& u, int m, const GradedVector& v, int n,
                      const GradedVector& w) {
  GradedVector lhs = engine.general_mode(u, m, engine.general_mode(v, n, w));
  lhs -= engine.general_mode(v, n, engine.general_mode(u, m, w));
  GradedVector rhs;
  for (const auto& term : commutator_expand(engine, u, m, v, n)) rhs += engine.general_mode(term.vector, term.mode, w);
  return lhs == rhs;
}

}  // namespace vlpbw
