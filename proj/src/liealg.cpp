#include "vlpbw/liealg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace vlpbw {

namespace {

struct GeneratorShape {
  bool heisenberg = false;
  int color = 0;          // for b_color(-1) 1
  LatticeVector point;    // for iota(e_point)
};

std::optional<GeneratorShape> shape_of(const Generator& g) {
  if (g.vector.size() != 1) return std::nullopt;
  const auto& [m, c] = *g.vector.terms().begin();
  if (c != 1) return std::nullopt;
  if (m.parts.empty() && !m.point.is_zero()) return GeneratorShape{false, 0, m.point};
  if (m.point.is_zero() && m.parts.size() == 1 && m.parts.front().level == 1)
    return GeneratorShape{true, m.parts.front().color, m.point};
  return std::nullopt;
}

std::optional<std::size_t> find_lattice_generator(const GeneratorBasis& gens, const LatticeVector& point) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto s = shape_of(gens[i]);
    if (s && !s->heisenberg && s->point == point) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_heisenberg_generator(const GeneratorBasis& gens, int color) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto s = shape_of(gens[i]);
    if (s && s->heisenberg && s->color == color) return i;
  }
  return std::nullopt;
}

std::string format_coords(const LieTable& t, const RationalVector& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    out << (first ? "" : " + ") << to_string(v[k]) << "*" << t.basis_labels[k];
    first = false;
  }
  return first ? "0" : out.str();
}

// [x, y] for x, y given in U-coordinates
RationalVector apply_bracket(const LieTable& t, const RationalVector& x, const RationalVector& y) {
  RationalVector out(t.dim);
  for (std::size_t i = 0; i < t.dim; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < t.dim; ++j) {
      if (is_zero(y[j])) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < t.dim; ++k)
        if (!is_zero(t.brackets[i][j][k])) out[k] += c * t.brackets[i][j][k];
    }
  }
  return out;
}

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector e(dim);
  e[i] = 1;
  return e;
}

}  // namespace

RationalVector reduce_to_generators(VoaContext& ctx, const GeneratorBasis& gens, const GradedVector& v) {
  RationalVector coords(gens.size());
  if (v.is_zero()) return coords;
  const int w = ctx.engine().weight(v);
  const GradedPiece& piece = ctx.piece(w);
  const SubspaceBasis& c1 = ctx.c1(w);
  std::vector<std::size_t> at_weight;
  RationalMatrix residuals;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].weight != w) continue;
    at_weight.push_back(j);
    residuals.push_back(c1.space.reduce(piece.coordinates(gens[j].vector)));
  }
  auto solved = solve_in_span(residuals, c1.space.reduce(piece.coordinates(v)));
  if (!solved)
    throw ComplementMismatch("reduction failure: " + to_string(v) + " is not in U + C1 at weight " + std::to_string(w));
  for (std::size_t a = 0; a < at_weight.size(); ++a) coords[at_weight[a]] = (*solved)[a];
  return coords;
}

RationalVector bracket(VoaContext& ctx, const GeneratorBasis& gens, const GradedVector& u, const GradedVector& v) {
  return reduce_to_generators(ctx, gens, ctx.engine().general_mode(u, 0, v));
}

LieTable compute_lie_table(VoaContext& ctx, const GeneratorBasis& gens) {
  LieTable t;
  t.dim = gens.size();
  for (const auto& g : gens) t.basis_labels.push_back(g.label);
  t.brackets.assign(t.dim, std::vector<RationalVector>(t.dim));
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) t.brackets[i][j] = bracket(ctx, gens, gens[i].vector, gens[j].vector);
  return t;
}

/*
  Closed forms on U = h + sum_{alpha in Phi} C iota(e_alpha):
    [h, e_alpha]       = <alpha, h> e_alpha
    [e_alpha, e_beta]  = eps(alpha, beta) e_{alpha+beta}   if <alpha,beta> = -1 and alpha+beta in Phi
                       = 0                                 if <alpha,beta> = -1 and alpha+beta not in Phi
                       = 0                                 if <alpha,beta> != -1 and alpha+beta != 0
    [e_alpha, e_-alpha] = eps(alpha, -alpha) alpha         if <alpha,alpha> = 2
                       = 0                                 if <alpha,alpha> > 2
  The eps(alpha,-alpha) factor is the sign of the fixed cocycle; it disappears
  if the section is renormalised.
*/
RationalVector closed_form_bracket(VoaContext& ctx, const GeneratorBasis& gens, std::size_t i, std::size_t j) {
  const Lattice& lattice = ctx.lattice();
  RationalVector out(gens.size());
  auto si = shape_of(gens.at(i));
  auto sj = shape_of(gens.at(j));
  if (!si || !sj) throw std::invalid_argument("closed_form_bracket: generator is not h or iota(e_alpha)");
  if (si->heisenberg && sj->heisenberg) return out;
  if (si->heisenberg != sj->heisenberg) {
    const auto& h = si->heisenberg ? *si : *sj;
    const auto& e = si->heisenberg ? *sj : *si;
    const std::int64_t pairing = lattice.dual(e.point)[static_cast<std::size_t>(h.color)];
    out[si->heisenberg ? j : i] = make_rational(si->heisenberg ? pairing : -pairing);
    return out;
  }
  const LatticeVector& alpha = si->point;
  const LatticeVector& beta = sj->point;
  const LatticeVector sum = alpha + beta;
  if (sum.is_zero()) {
    if (lattice.norm(alpha) != 2) return out;
    const int sign = ctx.cocycle()(alpha, beta);
    for (std::size_t c = 0; c < lattice.rank(); ++c) {
      if (alpha[c] == 0) continue;
      auto idx = find_heisenberg_generator(gens, static_cast<int>(c));
      if (!idx) throw std::invalid_argument("closed_form_bracket: missing Heisenberg generator");
      out[*idx] = make_rational(sign * alpha[c]);
    }
    return out;
  }
  if (lattice.inner(alpha, beta) != -1) return out;
  if (auto idx = find_lattice_generator(gens, sum)) out[*idx] = ctx.cocycle()(alpha, beta);
  return out;
}

std::vector<std::string> closed_form_mismatches(VoaContext& ctx, const GeneratorBasis& gens, const LieTable& t) {
  std::vector<std::string> diffs;
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) {
      RationalVector expected = closed_form_bracket(ctx, gens, i, j);
      if (expected == t.brackets[i][j]) continue;
      diffs.push_back("[" + t.basis_labels[i] + ", " + t.basis_labels[j] + "]: computed " +
                      format_coords(t, t.brackets[i][j]) + ", expected " + format_coords(t, expected));
    }
  return diffs;
}

LieTable lie_table(VoaContext& ctx, const GeneratorBasis& gens) {
  LieTable t = compute_lie_table(ctx, gens);
  auto diffs = closed_form_mismatches(ctx, gens, t);
  if (!diffs.empty()) {
    std::string msg = "bracket table disagrees with the closed forms:";
    for (const auto& d : diffs) msg += "\n  " + d;
    throw std::runtime_error(msg);
  }
  return t;
}

bool is_antisymmetric(const LieTable& t) {
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j)
      for (std::size_t k = 0; k < t.dim; ++k)
        if (t.brackets[i][j][k] + t.brackets[j][i][k] != 0) return false;
  return true;
}

bool satisfies_jacobi(const LieTable& t) {
  for (std::size_t a = 0; a < t.dim; ++a)
    for (std::size_t b = 0; b < t.dim; ++b)
      for (std::size_t c = 0; c < t.dim; ++c) {
        const auto x = unit_vector(t.dim, a);
        const auto y = unit_vector(t.dim, b);
        const auto z = unit_vector(t.dim, c);
        RationalVector total = apply_bracket(t, x, apply_bracket(t, y, z));
        const auto second = apply_bracket(t, y, apply_bracket(t, z, x));
        const auto third = apply_bracket(t, z, apply_bracket(t, x, y));
        for (std::size_t k = 0; k < t.dim; ++k) {
          total[k] += second[k] + third[k];
          if (!is_zero(total[k])) return false;
        }
      }
  return true;
}

KillingResult killing_radical(const LieTable& t) {
  const std::size_t d = t.dim;
  // ad(u_i)[k][j] = coefficient of u_k in [u_i, u_j]
  auto ad = [&](std::size_t i, std::size_t k, std::size_t j) -> const Rational& { return t.brackets[i][j][k]; };
  KillingResult result;
  result.killing.assign(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational trace = 0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const Rational& a = ad(i, k, l);
          if (is_zero(a)) continue;
          trace += a * ad(j, l, k);
        }
      result.killing[i][j] = trace;
      result.killing[j][i] = trace;
    }
  result.kernel = nullspace(result.killing, d);
  return result;
}

GeneratorBasis generating_basis(VoaContext& ctx) {
  std::int64_t top = 2;
  for (const auto& [norm, count] : ctx.phi().norm_histogram) top = std::max(top, norm);
  return order_basis(ctx.lattice(), complement_basis(ctx, static_cast<int>(top / 2)));
}

}  // namespace vlpbw
