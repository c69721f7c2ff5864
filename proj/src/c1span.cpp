#include "vlpbw/c1span.hpp"

#include <algorithm>
#include <set>

namespace vlpbw {

VoaContext::VoaContext(const Lattice& lattice) : engine_(lattice, TwoCocycle(lattice)), phi_(phi_set(lattice)) {}

const GradedPiece& VoaContext::piece(int n) {
  auto it = pieces_.find(n);
  if (it == pieces_.end()) it = pieces_.emplace(n, std::make_unique<GradedPiece>(lattice(), n)).first;
  return *it->second;
}

const SubspaceBasis& VoaContext::c1(int n) {
  auto it = c1_.find(n);
  if (it == c1_.end()) it = c1_.emplace(n, c1_bruteforce(*this, n)).first;
  return it->second;
}

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": weight must be >= 1");
}

}  // namespace

SubspaceBasis c1_bruteforce(VoaContext& ctx, int n) {
  require_positive(n, "c1_bruteforce");
  const GradedPiece& target = ctx.piece(n);
  SubspaceBasis out{n, RowSpace(target.dim())};
  ModeEngine& engine = ctx.engine();
  for (int p = 1; p < n && !out.space.full(); ++p) {
    const GradedPiece& left = ctx.piece(p);
    const GradedPiece& right = ctx.piece(n - p);
    for (const auto& u : left.basis()) {
      if (out.space.full()) break;
      const GradedVector uv(u);
      for (const auto& v : right.basis()) {
        GradedVector w = engine.general_mode(uv, -1, GradedVector(v));
        if (!w.is_zero()) out.space.insert(target.coordinates(w));
        if (out.space.full()) break;
      }
    }
  }
  for (const auto& w : ctx.piece(n - 1).basis()) {
    if (out.space.full()) break;
    GradedVector lw = engine.virasoro_Lm1(GradedVector(w));
    if (!lw.is_zero()) out.space.insert(target.coordinates(lw));
  }
  return out;
}

SubspaceBasis c1_closedform(VoaContext& ctx, int n) {
  require_positive(n, "c1_closedform");
  const GradedPiece& target = ctx.piece(n);
  const std::set<LatticeVector> phi(ctx.phi().phi.begin(), ctx.phi().phi.end());
  SubspaceBasis out{n, RowSpace(target.dim())};
  for (std::size_t i = 0; i < target.dim(); ++i) {
    const FockMonomial& m = target.basis()[i];
    const std::size_t k = m.parts.size();
    const bool zero_point = m.point.is_zero();
    bool in_k = false;
    if (k >= 2)
      in_k = true;
    else if (k == 1)
      in_k = !zero_point || m.parts.front().level >= 2;
    else
      in_k = !zero_point && !phi.contains(m.point);
    if (!in_k) continue;
    RationalVector e(target.dim());
    e[i] = 1;
    out.space.insert(std::move(e));
  }
  return out;
}

SubspaceBasis c2_subspace(VoaContext& ctx, int n) {
  require_positive(n, "c2_subspace");
  const GradedPiece& target = ctx.piece(n);
  SubspaceBasis out{n, RowSpace(target.dim())};
  ModeEngine& engine = ctx.engine();
  for (int p = 0; p <= n - 1 && !out.space.full(); ++p) {
    const GradedPiece& left = ctx.piece(p);
    const GradedPiece& right = ctx.piece(n - 1 - p);
    for (const auto& u : left.basis()) {
      const GradedVector uv(u);
      for (const auto& v : right.basis()) {
        GradedVector w = engine.general_mode(uv, -2, GradedVector(v));
        if (!w.is_zero()) out.space.insert(target.coordinates(w));
      }
    }
  }
  return out;
}

std::vector<std::size_t> q_dims(VoaContext& ctx, int n_max) {
  require_positive(n_max, "q_dims");
  std::vector<std::size_t> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(ctx.piece(n).dim() - ctx.c1(n).rank());
  return out;
}

std::size_t predicted_q_dim(const Lattice& lattice, const PhiReport& phi, int n) {
  std::size_t count = n == 1 ? lattice.rank() : 0;
  auto it = phi.norm_histogram.find(2 * static_cast<std::int64_t>(n));
  if (it != phi.norm_histogram.end()) count += it->second;
  return count;
}

std::vector<GradedVector> complement_candidates(const Lattice& lattice, const PhiReport& phi, int n) {
  std::vector<GradedVector> out;
  const std::size_t r = lattice.rank();
  if (n == 1)
    for (std::size_t i = 0; i < r; ++i)
      out.emplace_back(FockMonomial::vacuum(r).with_part({1, static_cast<int>(i)}));
  for (const auto& alpha : phi.phi)
    if (lattice.norm(alpha) == 2 * static_cast<std::int64_t>(n)) out.emplace_back(FockMonomial(alpha));
  return out;
}

std::map<int, std::vector<GradedVector>> complement_basis(VoaContext& ctx, int n_max) {
  require_positive(n_max, "complement_basis");
  std::map<int, std::vector<GradedVector>> out;
  for (int n = 1; n <= n_max; ++n) {
    const GradedPiece& piece = ctx.piece(n);
    RowSpace combined = ctx.c1(n).space;
    auto candidates = complement_candidates(ctx.lattice(), ctx.phi(), n);
    for (const auto& u : candidates) {
      if (!combined.insert(piece.coordinates(u)))
        throw ComplementMismatch("complement mismatch at weight " + std::to_string(n) + ": " + to_string(u) +
                                 " is dependent modulo C1");
    }
    if (!combined.full())
      throw ComplementMismatch("complement mismatch at weight " + std::to_string(n) + ": C1 + U has dimension " +
                               std::to_string(combined.rank()) + " < " + std::to_string(piece.dim()));
    out.emplace(n, std::move(candidates));
  }
  return out;
}

int default_weight_cutoff(const PhiReport& phi) {
  std::int64_t top = 0;
  for (const auto& [norm, count] : phi.norm_histogram) top = std::max(top, norm);
  return static_cast<int>(std::max<std::int64_t>(1, top / 2)) + 2;
}

}  // namespace vlpbw
