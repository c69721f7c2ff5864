#include "vlpbw/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vlpbw {

FockMonomial::FockMonomial(LatticeVector p, std::vector<Part> ps) : point(std::move(p)), parts(std::move(ps)) {
  std::sort(parts.begin(), parts.end(), part_precedes);
}

int FockMonomial::level_sum() const {
  int s = 0;
  for (const auto& p : parts) s += p.level;
  return s;
}

FockMonomial FockMonomial::with_part(Part p) const {
  FockMonomial out;
  out.point = point;
  out.parts.reserve(parts.size() + 1);
  auto pos = std::upper_bound(parts.begin(), parts.end(), p, part_precedes);
  out.parts.insert(out.parts.end(), parts.begin(), pos);
  out.parts.push_back(p);
  out.parts.insert(out.parts.end(), pos, parts.end());
  return out;
}

FockMonomial FockMonomial::without_part(std::size_t index) const {
  FockMonomial out;
  out.point = point;
  out.parts = parts;
  out.parts.erase(out.parts.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

int weight_of(const Lattice& lattice, const FockMonomial& m) {
  const std::int64_t norm = lattice.norm(m.point);
  if (norm % 2 != 0) throw std::logic_error("weight_of: odd norm in an even lattice");
  return static_cast<int>(norm / 2) + m.level_sum();
}

// ---------------------------------------------------------------- GradedVector

GradedVector::GradedVector(FockMonomial m, Rational c) {
  if (!vlpbw::is_zero(c)) terms_.emplace(std::move(m), std::move(c));
}

void GradedVector::add(const FockMonomial& m, const Rational& c) {
  if (vlpbw::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (vlpbw::is_zero(it->second)) terms_.erase(it);
}

Rational GradedVector::coefficient(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GradedVector& GradedVector::operator*=(const Rational& c) {
  if (vlpbw::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

std::optional<int> homogeneous_weight(const Lattice& lattice, const GradedVector& v) {
  std::optional<int> w;
  for (const auto& [m, c] : v.terms()) {
    int wm = weight_of(lattice, m);
    if (w && *w != wm) return std::nullopt;
    w = wm;
  }
  return w;
}

// ---------------------------------------------------------------- bases

std::vector<std::vector<Part>> colored_partitions(int n, int colors) {
  std::vector<std::vector<Part>> out;
  if (n < 0) return out;
  std::vector<Part> current;
  // Parts are emitted in canonical order, each no larger than the previous one.
  std::function<void(int, Part)> extend = [&](int remaining, Part cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int level = std::min(remaining, cap.level); level >= 1; --level) {
      int first_color = level == cap.level ? cap.color : 0;
      for (int color = first_color; color < colors; ++color) {
        current.push_back({level, color});
        extend(remaining - level, {level, color});
        current.pop_back();
      }
    }
  };
  extend(n, {n, 0});
  return out;
}

std::vector<FockMonomial> graded_basis(const Lattice& lattice, int n) {
  if (n < 0) throw std::invalid_argument("graded_basis: weight must be nonnegative");
  std::vector<FockMonomial> out;
  const int colors = static_cast<int>(lattice.rank());
  for (const auto& point : enumerate_up_to_norm(lattice, 2 * static_cast<std::int64_t>(n))) {
    const int rest = n - static_cast<int>(lattice.norm(point) / 2);
    for (auto& parts : colored_partitions(rest, colors)) {
      FockMonomial m;
      m.point = point;
      m.parts = std::move(parts);
      out.push_back(std::move(m));
    }
  }
  return out;
}

GradedPiece::GradedPiece(const Lattice& lattice, int weight) : weight_(weight), basis_(graded_basis(lattice, weight)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> GradedPiece::index_of(const FockMonomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RationalVector GradedPiece::coordinates(const GradedVector& v) const {
  RationalVector out(basis_.size());
  for (const auto& [m, c] : v.terms()) {
    auto idx = index_of(m);
    if (!idx)
      throw std::invalid_argument("GradedPiece: monomial " + to_string(m) + " is not of weight " +
                                  std::to_string(weight_));
    out[*idx] = c;
  }
  return out;
}

GradedVector GradedPiece::vector(const RationalVector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("GradedPiece: coordinate length mismatch");
  GradedVector v;
  for (std::size_t i = 0; i < coords.size(); ++i) v.add(basis_[i], coords[i]);
  return v;
}

// ---------------------------------------------------------------- printing

std::string to_string(const FockMonomial& m) {
  std::ostringstream out;
  for (const auto& p : m.parts) out << 'h' << (p.color + 1) << '(' << -p.level << ')';
  if (m.point.is_zero())
    out << '1';
  else
    out << "e" << to_string(m.point);
  return out.str();
}

std::string to_string(const GradedVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c) << ")*" << to_string(m);
  }
  return out.str();
}

}  // namespace vlpbw
