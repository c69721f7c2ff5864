#include "vlpbw/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vlpbw {

namespace {

std::optional<std::size_t> leading_column(const RationalVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return i;
  return std::nullopt;
}

// row -= factor * other, skipping zero entries of other
void axpy(RationalVector& row, const Rational& factor, const RationalVector& other) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!is_zero(other[i])) row[i] -= factor * other[i];
}

}  // namespace

RationalVector RowSpace::reduce(RationalVector v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("RowSpace: vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (is_zero(c)) continue;
    Rational factor = c;
    axpy(v, factor, rows_[r]);
  }
  return v;
}

bool RowSpace::insert(RationalVector v) {
  if (full()) return false;
  v = reduce(std::move(v));
  auto lead = leading_column(v);
  if (!lead) return false;
  const std::size_t q = *lead;
  Rational inv = 1 / v[q];
  for (auto& x : v)
    if (!is_zero(x)) x *= inv;
  for (auto& row : rows_) {
    if (is_zero(row[q])) continue;
    Rational factor = row[q];
    axpy(row, factor, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), q);
  auto offset = pos - pivots_.begin();
  pivots_.insert(pos, q);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool RowSpace::contains(const RationalVector& v) const {
  return !leading_column(reduce(v)).has_value();
}

bool RowSpace::contains(const RowSpace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const RationalVector& r) { return contains(r); });
}

std::size_t fraction_free_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]);
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<Integer> clear_denominators(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

IntegerMatrix hermite_normal_form(IntegerMatrix m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows; ++col) {
    // Euclid down the column until a single nonzero entry remains at `top`.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t r = top; r < rows; ++r) {
        if (sgn(m[r][col]) == 0) continue;
        if (best == rows || abs(m[r][col]) < abs(m[best][col])) best = r;
      }
      if (best == rows) break;
      std::swap(m[top], m[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows; ++r) {
        if (sgn(m[r][col]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[top][col].get_mpz_t());
        for (std::size_t c = col; c < cols; ++c) m[r][c] -= q * m[top][c];
        if (sgn(m[r][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m[top][col]) == 0) continue;
    if (sgn(m[top][col]) < 0)
      for (auto& x : m[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[top][col].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= q * m[top][c];
    }
    ++top;
  }
  m.resize(top);
  return m;
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  RowSpace echelon(cols);
  for (const auto& row : m) echelon.insert(row);
  const auto& pivots = echelon.pivots();
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -echelon.rows()[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve_in_span(const RationalMatrix& basis, const RationalVector& target) {
  const std::size_t k = basis.size();
  const std::size_t d = target.size();
  // Each working row is [vector | combination of basis rows that produced it].
  RowSpace echelon(d + k);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != d) throw std::invalid_argument("solve_in_span: length mismatch");
    RationalVector row(basis[j]);
    row.resize(d + k);
    row[d + j] = 1;
    echelon.insert(std::move(row));
  }
  RationalVector t(target);
  t.resize(d + k);
  RationalVector reduced = echelon.reduce(std::move(t));
  for (std::size_t i = 0; i < d; ++i)
    if (!is_zero(reduced[i])) return std::nullopt;
  // target - sum c_j basis_j == 0 with the tail recording -c.
  RationalVector coeffs(k);
  for (std::size_t j = 0; j < k; ++j) coeffs[j] = -reduced[d + j];
  return coeffs;
}

}  // namespace vlpbw
