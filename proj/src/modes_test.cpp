#include "vlpbw/modes.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace vlpbw;

namespace {

FockMonomial point(std::initializer_list<std::int64_t> p) { return FockMonomial(LatticeVector(p)); }

GradedVector vec(const FockMonomial& m, Rational c = 1) { return GradedVector(m, c); }

// b_c(-k) ... 1 on the zero point
FockMonomial heis(std::size_t rank, std::vector<Part> parts) { return FockMonomial(LatticeVector(rank), std::move(parts)); }

std::vector<FockMonomial> basis_up_to(const Lattice& l, int top) {
  std::vector<FockMonomial> out;
  for (int n = 0; n <= top; ++n)
    for (auto& m : graded_basis(l, n)) out.push_back(std::move(m));
  return out;
}

std::vector<Lattice> small_lattices() {
  return {named_lattice("A1"), Lattice(GramMatrix{{4}}), named_lattice("A2"), Lattice(GramMatrix{{2, 1}, {1, 4}})};
}

}  // namespace

TEST_CASE("Heisenberg modes") {
  const Lattice a1 = named_lattice("A1");
  const ModeEngine e(a1);
  const auto vac = vec(FockMonomial::vacuum(1));
  const auto h1 = vec(heis(1, {{1, 0}}));
  CHECK(e.heis_mode(0, 1, h1) == Rational(2) * vac);
  for (int m = 0; m <= 4; ++m) CHECK(e.heis_mode(0, m, vac).is_zero());
  CHECK(e.heis_mode(0, 0, vec(point({1}))) == Rational(2) * vec(point({1})));
  CHECK(e.heis_mode(0, -2, vac) == vec(heis(1, {{2, 0}})));
  CHECK(e.heis_mode(0, 2, h1).is_zero());
  CHECK_THROWS_AS(e.heis_mode(RationalVector(2), 1, vac), std::invalid_argument);
  // [b(m), b(n)] = m <b,b> delta_{m+n,0}
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const auto lhs = e.heis_mode(0, m, e.heis_mode(0, n, h1)) - e.heis_mode(0, n, e.heis_mode(0, m, h1));
      CHECK(lhs == (m + n == 0 ? Rational(2 * m) * h1 : GradedVector{}));
    }
}

TEST_CASE("lattice mode examples for a norm-2 vector") {
  const Lattice a1 = named_lattice("A1");
  ModeEngine e(a1);
  const LatticeVector alpha{1};
  const int sign = e.cocycle()(alpha, -alpha);
  CHECK(e.lattice_mode(alpha, -1, vec(point({1}))).is_zero());
  CHECK(e.lattice_mode(alpha, -2, vec(point({1}))).is_zero());
  CHECK(e.lattice_mode(alpha, -3, vec(point({1}))) == vec(point({2}), e.cocycle()(alpha, alpha)));
  CHECK(e.lattice_mode(alpha, 1, vec(point({-1}))) == vec(FockMonomial::vacuum(1), sign));
  CHECK(e.lattice_mode(alpha, 0, vec(point({-1}))) == vec(heis(1, {{1, 0}}), sign));
  CHECK(e.lattice_mode(alpha, 2, vec(point({-1}))).is_zero());
  CHECK_THROWS_AS(e.lattice_mode({1, 0}, 0, vec(point({1}))), std::invalid_argument);
}

TEST_CASE("zero lattice vector acts as the vacuum") {
  const Lattice a2 = named_lattice("A2");
  ModeEngine e(a2);
  for (const auto& v : basis_up_to(a2, 3))
    for (int n = -3; n <= 3; ++n) {
      const auto r = e.lattice_mode(a2.zero(), n, vec(v));
      CHECK(r == (n == -1 ? vec(v) : GradedVector{}));
      CHECK(e.general_mode(vec(FockMonomial::vacuum(2)), n, vec(v)) == r);
    }
}

TEST_CASE("lattice modes agree with the partition expansion of the exponentials") {
  for (const auto& l : small_lattices()) {
    CAPTURE(l.gram());
    ModeEngine e(l);
    const auto operands = basis_up_to(l, 3);
    for (const auto& alpha : enumerate_up_to_norm(l, 6)) {
      for (const auto& v : operands) {
        const oracle::Key key{v.point.coords, [&] {
                                oracle::Parts p;
                                for (const auto& part : v.parts) p.emplace_back(part.level, part.color);
                                return p;
                              }()};
        for (int n = -5; n <= 4; ++n) {
          const auto got = e.lattice_mode(alpha, n, vec(v));
          CHECK(oracle::from_library(got) == oracle::vertex_mode(l.gram(), alpha.coords, n, key));
        }
      }
    }
  }
}

TEST_CASE("general_mode of h(-1)1 is the Heisenberg mode") {
  for (const auto& l : small_lattices()) {
    ModeEngine e(l);
    for (std::size_t c = 0; c < l.rank(); ++c) {
      const auto h = vec(heis(l.rank(), {{1, static_cast<int>(c)}}));
      for (const auto& v : basis_up_to(l, l.rank() == 1 ? 4 : 3))
        for (int n = -4; n <= 4; ++n) CHECK(e.general_mode(h, n, vec(v)) == e.heis_mode(c, n, vec(v)));
    }
  }
}

TEST_CASE("general_mode of iota(e_alpha) is the lattice mode") {
  const Lattice a2 = named_lattice("A2");
  ModeEngine e(a2);
  for (const auto& alpha : shell(a2, 2))
    for (const auto& v : basis_up_to(a2, 2))
      for (int n = -3; n <= 2; ++n) CHECK(e.general_mode(vec(FockMonomial(alpha)), n, vec(v)) == e.lattice_mode(alpha, n, vec(v)));
  CHECK_THROWS_AS(e.general_mode(vec(point({1, 0})) + vec(FockMonomial::vacuum(2)), 0, vec(point({1, 0}))),
                  std::invalid_argument);
}

TEST_CASE("grading law on random homogeneous pairs") {
  std::mt19937_64 rng(11);
  for (const auto& l : small_lattices()) {
    ModeEngine e(l);
    std::vector<std::vector<FockMonomial>> pieces;
    for (int n = 0; n <= 3; ++n) pieces.push_back(graded_basis(l, n));
    for (int t = 0; t < 200; ++t) {
      const int wu = static_cast<int>(rng() % 4);
      const int wv = static_cast<int>(rng() % 4);
      const auto& u = pieces[wu][rng() % pieces[wu].size()];
      const auto& v = pieces[wv][rng() % pieces[wv].size()];
      const int n = static_cast<int>(rng() % 9) - 5;
      const auto r = e.general_mode(vec(u), n, vec(v));
      if (wu + wv - n - 1 < 0) CHECK(r.is_zero());
      if (!r.is_zero()) CHECK(homogeneous_weight(l, r) == wu + wv - n - 1);
    }
  }
}

TEST_CASE("Virasoro examples") {
  const Lattice a1 = named_lattice("A1");
  const ModeEngine e(a1);
  CHECK(e.virasoro_L0(vec(point({1}))) == vec(point({1})));
  CHECK(e.virasoro_L0(vec(FockMonomial::vacuum(1))).is_zero());
  CHECK(e.virasoro_L0(vec(FockMonomial(LatticeVector{1}, {{2, 0}}))) == vec(FockMonomial(LatticeVector{1}, {{2, 0}}), 3));
  CHECK(e.virasoro_Lm1(vec(heis(1, {{1, 0}}))) == vec(heis(1, {{2, 0}})));
  CHECK(e.virasoro_Lm1(vec(FockMonomial::vacuum(1))).is_zero());
  CHECK(e.virasoro_Lm1(vec(point({1}))) == vec(FockMonomial(LatticeVector{1}, {{1, 0}})));
  CHECK(e.omega() == vec(heis(1, {{1, 0}, {1, 0}}), Rational(1, 4)));
}

TEST_CASE("omega modes reproduce L(0) and L(-1)") {
  for (const auto& l : small_lattices()) {
    ModeEngine e(l);
    const auto omega = e.omega();
    CHECK(homogeneous_weight(l, omega) == 2);
    for (const auto& v : basis_up_to(l, l.rank() == 1 ? 4 : 3)) {
      CHECK(e.general_mode(omega, 1, vec(v)) == e.virasoro_L0(vec(v)));
      CHECK(e.general_mode(omega, 0, vec(v)) == e.virasoro_Lm1(vec(v)));
    }
  }
}

TEST_CASE("Heisenberg and lattice modes commute up to a shift") {
  for (const auto& l : small_lattices()) {
    ModeEngine e(l);
    const auto operands = basis_up_to(l, 2);
    for (const auto& alpha : enumerate_up_to_norm(l, 4)) {
      const auto pairing = l.dual(alpha);
      for (std::size_t c = 0; c < l.rank(); ++c)
        for (int m = -2; m <= 2; ++m)
          for (int n = -3; n <= 2; ++n)
            for (const auto& v : operands) {
              const auto w = vec(v);
              const auto lhs = e.heis_mode(c, m, e.lattice_mode(alpha, n, w)) - e.lattice_mode(alpha, n, e.heis_mode(c, m, w));
              CHECK(lhs == make_rational(pairing[c]) * e.lattice_mode(alpha, m + n, w));
            }
    }
  }
}

TEST_CASE("products of lattice vectors: zero, the product, or a descendant") {
  std::mt19937_64 rng(5);
  for (const auto& l : small_lattices()) {
    ModeEngine e(l);
    const auto points = enumerate_up_to_norm(l, 8);
    for (int t = 0; t < 60; ++t) {
      const auto& a = points[rng() % points.size()];
      const auto& b = points[rng() % points.size()];
      const int s = static_cast<int>(l.inner(a, b));
      for (int n = -s - 4; n <= -s + 2; ++n) {
        const auto r = e.lattice_mode(a, n, vec(FockMonomial(b)));
        if (n >= -s) {
          CHECK(r.is_zero());
        } else if (n == -1 - s) {
          CHECK(r == vec(FockMonomial(a + b), e.cocycle()(a, b)));
        } else {
          CHECK((a.is_zero() || !r.is_zero()));
          for (const auto& [m, c] : r.terms()) {
            CHECK(m.point == a + b);
            CHECK_FALSE(m.parts.empty());
          }
        }
      }
    }
  }
}

TEST_CASE("cache can be cleared without changing results") {
  const Lattice a1 = named_lattice("A1");
  ModeEngine e(a1);
  const auto u = vec(FockMonomial(LatticeVector{1}, {{1, 0}}));
  const auto v = vec(point({-1}));
  const auto first = e.general_mode(u, 0, v);
  CHECK(e.cache_size() > 0);
  e.clear_cache();
  CHECK(e.cache_size() == 0);
  CHECK(e.general_mode(u, 0, v) == first);
  CHECK_THROWS_AS(e.weight(GradedVector{}), std::invalid_argument);
  CHECK_THROWS_AS(ModeEngine(a1, TwoCocycle(named_lattice("A2"))), std::invalid_argument);
}
