#include "vlpbw/lattice.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace vlpbw;

namespace {

Lattice A1() { return named_lattice("A1"); }
Lattice A2() { return named_lattice("A2"); }
Lattice rank_one(std::int64_t g) { return Lattice(GramMatrix{{g}}); }

// Lattices used throughout: root lattices, scaled ones and a few that are not generated by roots.
std::vector<GramMatrix> test_grams() {
  return {
      {{2}},
      {{4}},
      {{6}},
      {{2, -1}, {-1, 2}},
      {{2, 0}, {0, 2}},
      {{2, 1}, {1, 4}},
      {{4, 1}, {1, 4}},
      {{4, -2}, {-2, 4}},
      {{4, 0}, {0, 6}},
      {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
      {{4, 1, 0}, {1, 4, 1}, {0, 1, 4}},
  };
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& vs) { return {vs.begin(), vs.end()}; }

std::vector<LatticeVector> from_oracle(const std::vector<oracle::Coords>& vs) {
  std::vector<LatticeVector> out;
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("Lattice validates its Gram matrix") {
  CHECK_THROWS_AS(Lattice(GramMatrix{}), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(GramMatrix{{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(GramMatrix{{2, 1}, {0, 2}}), std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS(Lattice(GramMatrix{{3}}), std::invalid_argument);             // odd
  CHECK_THROWS_AS(Lattice(GramMatrix{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(GramMatrix{{-2}}), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(GramMatrix{{2, 2}, {2, 2}}), std::invalid_argument);  // singular
  CHECK_THROWS_AS(Lattice(GramMatrix{{2, 3}, {3, 2}}), std::invalid_argument);  // indefinite
  Lattice l(GramMatrix{{2, -1}, {-1, 2}});
  CHECK(l.rank() == 2);
  CHECK(l.determinant() == 3);
  CHECK(l.inverse_gram()[0][0] == Rational(2, 3));
  CHECK(l.inverse_gram()[0][1] == Rational(1, 3));
}

TEST_CASE("inner products") {
  const Lattice a2 = A2();
  CHECK(inner(a2, {1, 0}, {0, 1}) == -1);
  CHECK(inner(a2, {0, 0}, {3, -7}) == 0);
  CHECK(inner(A1(), {2}, {2}) == 8);
  CHECK(a2.dual({1, 1}) == std::vector<std::int64_t>{1, 1});
  CHECK_THROWS_AS(inner(a2, {1}, {1, 0}), std::invalid_argument);
  CHECK(a2.inner(RationalVector{Rational(1, 2), 0}, RationalVector{Rational(1, 2), 0}) == Rational(1, 2));
}

TEST_CASE("LatticeVector arithmetic and formatting") {
  LatticeVector v{1, -2};
  CHECK(v + LatticeVector{1, 1} == LatticeVector{2, -1});
  CHECK(-v == LatticeVector{-1, 2});
  CHECK(3 * v == LatticeVector{3, -6});
  CHECK(LatticeVector::unit(3, 1) == LatticeVector{0, 1, 0});
  CHECK(to_string(v) == "[1,-2]");
  CHECK(LatticeVector(2).is_zero());
  CHECK_THROWS_AS(v += LatticeVector{1}, std::invalid_argument);
}

TEST_CASE("enumerate_up_to_norm examples") {
  CHECK(enumerate_up_to_norm(A1(), 4) == std::vector<LatticeVector>{{0}, {-1}, {1}});
  CHECK(enumerate_up_to_norm(A2(), 0) == std::vector<LatticeVector>{{0, 0}});
  CHECK(enumerate_up_to_norm(named_lattice("D4"), 0).size() == 1);
  const auto a2 = enumerate_up_to_norm(A2(), 2);
  CHECK(a2.size() == 7);
  CHECK(a2.front().is_zero());
  CHECK_THROWS_AS(enumerate_up_to_norm(A1(), -1), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the exhaustive box oracle") {
  for (const auto& g : test_grams()) {
    const Lattice l(g);
    for (std::int64_t n : {0, 2, 4, 6, 10}) {
      CAPTURE(g);
      CAPTURE(n);
      const auto expected = from_oracle(oracle::box_enumerate(g, n, n + 2));
      CHECK(enumerate_up_to_norm(l, n) == expected);
      CHECK(enumerate_box(l, n) == expected);
      CHECK(enumerate_pruned(l, n) == expected);
    }
  }
}

TEST_CASE("box and pruned enumeration agree on larger lattices") {
  for (const char* name : {"A3", "D4", "A4"}) {
    const Lattice l = named_lattice(name);
    for (std::int64_t n : {2, 4, 6}) CHECK(enumerate_box(l, n) == enumerate_pruned(l, n));
  }
  CHECK(box_size(A1(), 8) == 5);
}

TEST_CASE("shell examples") {
  CHECK(shell(A1(), 2) == std::vector<LatticeVector>{{-1}, {1}});
  CHECK(shell(rank_one(4), 2).empty());
  CHECK(as_set(shell(A2(), 2)) == std::set<LatticeVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  CHECK_THROWS_AS(shell(A1(), 3), std::invalid_argument);
  CHECK_THROWS_AS(shell(A1(), 0), std::invalid_argument);
}

TEST_CASE("minimal_norm") {
  CHECK(minimal_norm(A1()) == 2);
  CHECK(minimal_norm(rank_one(4)) == 4);
  CHECK(minimal_norm(Lattice(GramMatrix{{4, 1}, {1, 4}})) == 4);
  // the basis vectors are not the shortest here: b1 - b2 has norm 4
  CHECK(minimal_norm(Lattice(GramMatrix{{6, 4}, {4, 6}})) == 4);
}

TEST_CASE("phi_enumeration_bound examples") {
  CHECK(phi_enumeration_bound(A1()) == 2);
  CHECK(phi_enumeration_bound(Lattice(GramMatrix{{2, 0}, {0, 2}})) == 4);
  const auto family = orthogonal_family(A2());
  REQUIRE(family.size() == 2);
  CHECK(family[0] == LatticeVector{1, 0});
  CHECK(family[1] == LatticeVector{1, 2});
  CHECK(phi_enumeration_bound(A2()) == 8);
}

TEST_CASE("is_in_phi examples") {
  CHECK(is_in_phi(A1(), {1}));
  CHECK_FALSE(is_in_phi(A1(), {2}));
  CHECK(is_in_phi(rank_one(4), {1}));
  CHECK_THROWS_AS(is_in_phi(A1(), {0}), std::invalid_argument);
  CHECK_THROWS_AS(is_in_phi(A1(), {1, 0}), std::invalid_argument);
  auto w = phi_witness(A1(), {2}, 8);
  REQUIRE(w);
  CHECK(A1().inner(LatticeVector{2} - *w, *w) >= 0);
}

TEST_CASE("phi_set examples") {
  const auto a2 = phi_set(A2());
  CHECK(a2.phi.size() == 6);
  CHECK(a2.norm_histogram == std::map<std::int64_t, std::size_t>{{2, 6}});
  CHECK(a2.spans_lattice);
  CHECK(a2.enumeration_bound == 8);
  const auto g4 = phi_set(rank_one(4));
  CHECK(g4.phi == std::vector<LatticeVector>{{-1}, {1}});
  CHECK(g4.norm_histogram == std::map<std::int64_t, std::size_t>{{4, 2}});
  const auto d4 = phi_set(named_lattice("D4"));
  CHECK(d4.phi.size() == 24);
  CHECK(d4.norm_histogram == std::map<std::int64_t, std::size_t>{{2, 24}});
}

TEST_CASE("phi_set agrees with the definition and with the oracle") {
  for (const auto& g : test_grams()) {
    CAPTURE(g);
    const Lattice l(g);
    const auto coset = phi_set(l);
    const auto by_definition = phi_set_by_definition(l);
    CHECK(coset.phi == by_definition.phi);
    const std::int64_t bound = coset.enumeration_bound;
    // cleared Gram-Schmidt vectors can make the bound large; the box oracle only runs on small ones
    if (bound <= 24) CHECK(coset.phi == from_oracle(oracle::phi_by_definition(g, bound, bound + 2)));
    for (const auto& a : coset.phi) CHECK(l.norm(a) <= bound);
  }
}

TEST_CASE("membership is unchanged when the search ball grows") {
  for (const auto& g : test_grams()) {
    CAPTURE(g);
    const Lattice l(g);
    for (const auto& a : enumerate_up_to_norm(l, 8)) {
      if (a.is_zero()) continue;
      const bool member = is_in_phi(l, a);
      CHECK(member == !phi_witness(l, a, l.norm(a) + 2).has_value());
      CHECK(member == !phi_witness(l, a, 2 * l.norm(a)).has_value());
    }
  }
}

TEST_CASE("phi_set properties on every test lattice") {
  for (const auto& g : test_grams()) {
    CAPTURE(g);
    const Lattice l(g);
    const auto report = phi_set(l);
    const auto phi = as_set(report.phi);
    for (const auto& a : report.phi) {
      CHECK(phi.contains(-a));
      for (std::int64_t k : {-3, -2, 2, 3}) CHECK_FALSE(phi.contains(k * a));
      CHECK_FALSE(is_in_phi(l, 2 * a));
      for (const auto& b : report.phi)
        if (a != b) CHECK(l.inner(a, b) < l.norm(a));
    }
    CHECK(report.spans_lattice);
    CHECK(zspan_check(l, report.phi));
    for (const auto& v : shell(l, minimal_norm(l))) CHECK(phi.contains(v));
  }
}

TEST_CASE("phi_set is stable under reflections in norm-2 vectors") {
  // s(v) = v - <v,r> r is an isometry of an even lattice whenever <r,r> = 2
  std::vector<GramMatrix> grams = {{{2, -1}, {-1, 2}}, {{2, 1}, {1, 4}}, {{2, 0}, {0, 2}}};
  grams.push_back(named_lattice("A3").gram());
  grams.push_back(named_lattice("D4").gram());
  for (const auto& g : grams) {
    const Lattice l(g);
    const auto phi = phi_set(l).phi;
    const auto phi_as_set = as_set(phi);
    for (const auto& r : shell(l, 2)) {
      std::set<LatticeVector> image;
      for (const auto& a : phi) image.insert(a - l.inner(a, r) * r);
      CHECK(image == phi_as_set);
      for (const auto& v : enumerate_up_to_norm(l, 4)) {
        const auto s = v - l.inner(v, r) * r;
        CHECK(l.norm(s) == l.norm(v));
      }
    }
  }
}

TEST_CASE("zspan_check examples") {
  CHECK(zspan_check(A2(), phi_set(A2()).phi));
  CHECK_FALSE(zspan_check(A1(), {{2}}));
  CHECK(zspan_check(rank_one(4), {{1}, {-1}}));
  CHECK_FALSE(zspan_check(A2(), {{1, 1}, {-1, -1}}));
  CHECK(zspan_check(A2(), {{2, 1}, {1, 1}}));
  CHECK_THROWS_AS(zspan_check(A1(), {}), std::invalid_argument);
}

TEST_CASE("named_lattice") {
  CHECK(named_lattice("A1").gram() == GramMatrix{{2}});
  CHECK(named_lattice("A1", 2).gram() == GramMatrix{{4}});
  CHECK(named_lattice("A2").gram() == GramMatrix{{2, -1}, {-1, 2}});
  CHECK(named_lattice("D4").determinant() == 4);
  CHECK(named_lattice("E6").determinant() == 3);
  CHECK(named_lattice("E7").determinant() == 2);
  CHECK(named_lattice("E8").determinant() == 1);
  CHECK(named_lattice("A3").determinant() == 4);
  for (const char* bad : {"", "B2", "D3", "E9", "A", "A0", "Ax"})
    CHECK_THROWS_AS(named_lattice(bad), std::invalid_argument);
  CHECK_THROWS_AS(named_lattice("A1", 0), std::invalid_argument);
}

TEST_CASE("root lattices: phi equals the shell of norm 2k") {
  struct Case {
    const char* name;
    std::int64_t scale;
    std::size_t count;
  };
  for (const auto& c : {Case{"A1", 1, 2}, Case{"A1", 2, 2}, Case{"A2", 1, 6}, Case{"A2", 3, 6}, Case{"A3", 1, 12},
                        Case{"D4", 1, 24}, Case{"D4", 2, 24}}) {
    CAPTURE(c.name);
    CAPTURE(c.scale);
    const Lattice l = named_lattice(c.name, c.scale);
    const auto phi = phi_set(l).phi;
    CHECK(phi.size() == c.count);
    CHECK(as_set(phi) == as_set(shell(l, 2 * c.scale)));
  }
}
