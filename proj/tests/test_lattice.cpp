#include <random>

#include "agisos/error.hpp"
#include "agisos/lattice.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace agisos;

namespace {

Simplex u1() { return Simplex::create({{4, 2, 0}, {2, 4, 0}, {0, 0, 6}}); }
Simplex u2() { return Simplex::create({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an agisos::Error");
  return ErrorCode::InvalidArgument;
}

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) {
    Rational r(n, d);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_rational("x"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_rational("1/-2"); }) == ErrorCode::InvalidArgument);
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(fractional_part(Rational(-1, 3)) == Rational(2, 3));
}

TEST_CASE("validate_simplex accepts the two named simplices") {
  CHECK(u1().degree_sum() == 6);
  CHECK(u2().degree_sum() == 6);
  CHECK(u1().vertex_count() == 3);
  const auto segment = Simplex::create({{2, 0}, {0, 2}});
  CHECK(segment.degree_sum() == 2);
}

TEST_CASE("validate_simplex rejects malformed vertex sets") {
  CHECK(code_of([] { Simplex::create({{2, 0}, {2, 0}}); }) == ErrorCode::DuplicateVertex);
  CHECK(code_of([] { Simplex::create({{3, 3, 0}, {2, 4, 0}, {0, 0, 6}}); }) == ErrorCode::OddVertex);
  CHECK(code_of([] { Simplex::create({{-2, 8}, {2, 4}}); }) == ErrorCode::NegativeVertex);
  CHECK(code_of([] { Simplex::create({{2, 0}, {0, 4}}); }) == ErrorCode::UnequalDegreeSums);
  CHECK(code_of([] { Simplex::create({{2, 2}}); }) == ErrorCode::TooFewVertices);
  CHECK(code_of([] { Simplex::create({{2, 0}, {0, 2, 0}}); }) == ErrorCode::RaggedInput);
  // (2,2,2) is the average of the other two.
  CHECK(code_of([] { Simplex::create({{4, 2, 0}, {0, 2, 4}, {2, 2, 2}}); }) == ErrorCode::AffinelyDependent);
  CHECK(code_of([] { Simplex::create({{2, 0}, {0, 2}, {4, 0}}); }) == ErrorCode::UnequalDegreeSums);
}

TEST_CASE("fewer vertices than coordinates is a lower-dimensional simplex") {
  const auto s = Simplex::create({{2, 0, 0}, {0, 2, 0}});
  CHECK(barycentric_coordinates(s, {1, 1, 0}).weights == q({{1, 2}, {1, 2}}));
  CHECK(code_of([&] { barycentric_coordinates(s, {1, 0, 1}); }) == ErrorCode::NotInAffineHull);
  CHECK(enumerate_lattice_points(s, 1).size() == 3);
}

TEST_CASE("barycentric coordinates") {
  CHECK(barycentric_coordinates(u1(), {2, 2, 2}).weights == q({{1, 3}, {1, 3}, {1, 3}}));
  CHECK(barycentric_coordinates(u1(), {4, 2, 0}).weights == q({{1, 1}, {0, 1}, {0, 1}}));
  // Hand solution: 6*l3 = 1, 4*l1 + 2*l2 = 3, 2*l1 + 4*l2 = 2.
  CHECK(barycentric_coordinates(u1(), {3, 2, 1}).weights == q({{2, 3}, {1, 6}, {1, 6}}));
  CHECK(code_of([] { barycentric_coordinates(u1(), {1, 1, 1}); }) == ErrorCode::NotInAffineHull);
  const auto outside = barycentric_coordinates(u1(), {5, 1, 0});
  CHECK_FALSE(outside.nonnegative());
  CHECK(outside.weights == q({{3, 2}, {-1, 2}, {0, 1}}));
}

TEST_CASE("membership in the dilated simplex") {
  CHECK(contains(u1(), 2, {2, 2, 8}));
  CHECK(contains(u1(), 1, {2, 2, 2}));
  CHECK_FALSE(contains(u1(), 1, {5, 1, 0}));
  CHECK_FALSE(contains(u1(), 1, {1, 1, 1}));
  CHECK_FALSE(contains(u1(), 2, {2, 2, 2}));
  CHECK(is_vertex(u1(), 2, {8, 4, 0}));
  CHECK_FALSE(is_vertex(u1(), 1, {8, 4, 0}));
}

TEST_CASE("enumerate_lattice_points on the named simplices") {
  // Stars and bars: C(6 + 2, 2) triples summing to 6.
  const auto all = enumerate_lattice_points(u2(), 1);
  CHECK(all.size() == 28);
  for (const auto& p : all) CHECK(p.coordinate_sum() == 6);

  const PointSet expected{{4, 2, 0}, {2, 4, 0}, {0, 0, 6}, {3, 3, 0}, {2, 2, 2},
                          {1, 1, 4}, {2, 1, 3}, {1, 2, 3}, {3, 2, 1}, {2, 3, 1}};
  CHECK(enumerate_lattice_points(u1(), 1) == expected);
  CHECK(oracle::lattice_points({{4, 2, 0}, {2, 4, 0}, {0, 0, 6}}, 1) == expected);

  CHECK(enumerate_lattice_points(Simplex::create({{2, 0}, {0, 2}}), 1) == PointSet{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("enumeration budget") {
  EnumerationOptions tight;
  tight.max_box_points = 10;
  CHECK(search_box_size(u2(), 1) == 49);
  CHECK(code_of([&] { enumerate_lattice_points(u2(), 1, tight); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("even points and beads") {
  CHECK(even_points(enumerate_lattice_points(u1(), 1)) == PointSet{{4, 2, 0}, {2, 4, 0}, {0, 0, 6}, {2, 2, 2}});
  CHECK(even_points({}).empty());
  CHECK(even_points({{1, 1, 4}}).empty());

  CHECK(beads(u1(), 1) == PointSet{{4, 2, 0}, {2, 4, 0}, {0, 0, 6}});
  CHECK(beads(u1(), 2) == PointSet{{8, 4, 0}, {4, 8, 0}, {0, 0, 12}, {6, 6, 0}, {4, 2, 6}, {2, 4, 6}});
  CHECK(compositions(2, 3).size() == 6);
}

TEST_CASE("vertices have unit barycentric weights") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    Simplex s = [&] {
      for (;;) {
        try {
          return Simplex::create(oracle::random_vertex_set(rng, n, 8, 1 + rng() % 4));
        } catch (const Error&) {
        }
      }
    }();
    for (std::size_t i = 0; i < n; ++i) {
      const auto w = barycentric_coordinates(s, s.vertex(i)).weights;
      for (std::size_t j = 0; j < n; ++j) CHECK(w[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("enumeration, membership and beads agree with the brute-force oracle") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 30) {
    const std::size_t n = 2 + rng() % 3;
    const auto vs = oracle::random_vertex_set(rng, n, 6, 1 + rng() % 3);
    std::optional<Simplex> s;
    try {
      s = Simplex::create(vs);
    } catch (const Error&) {
      continue;
    }
    const Coord k = 1 + static_cast<Coord>(rng() % 2);
    const auto expected = oracle::lattice_points(vs, k);
    const auto got = enumerate_lattice_points(*s, k);
    REQUIRE(got == expected);
    for (const auto& p : got) CHECK(contains(*s, k, p));
    for (const auto& b : beads(*s, k)) {
      CHECK(got.contains(b));
      CHECK(b.is_even());
    }
    ++checked;
  }
}

TEST_CASE("barycentric round trip for integral combinations") {
  std::mt19937_64 rng(7);
  const Simplex s = Simplex::create({{6, 0, 0, 2}, {0, 4, 2, 2}, {2, 2, 2, 2}, {0, 0, 2, 6}});
  int hits = 0;
  for (int trial = 0; trial < 500 && hits < 60; ++trial) {
    // lambda = m / (k * D) with non-negative integers m summing to k * D.
    const Coord k = 1 + static_cast<Coord>(rng() % 3);
    const Coord D = 1 + static_cast<Coord>(rng() % 6);
    std::vector<Coord> m(4, 0);
    for (Coord unit = 0; unit < k * D; ++unit) ++m[rng() % 4];
    std::vector<Rational> lambda;
    std::vector<Rational> acc(4);
    for (std::size_t i = 0; i < 4; ++i) {
      Rational l(m[i], k * D);
      l.canonicalize();
      lambda.push_back(l);
      for (std::size_t j = 0; j < 4; ++j) acc[j] += l * k * s.vertex(i)[j];
    }
    std::vector<Coord> coords;
    bool integral = true;
    for (const auto& a : acc) {
      integral = integral && a.get_den() == 1;
      coords.push_back(integral ? a.get_num().get_si() : 0);
    }
    if (!integral) continue;
    ++hits;
    const LatticePoint p(coords);
    CHECK(contains(s, k, p));
    CHECK(barycentric_coordinates(s.dilated(k), p).weights == lambda);
  }
  CHECK(hits > 10);
}

TEST_CASE("lattice point arithmetic is overflow checked") {
  const LatticePoint big{std::numeric_limits<Coord>::max() - 1, 0};
  CHECK(code_of([&] { (void)(big + LatticePoint{2, 0}); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { (void)big.scaled(2); }) == ErrorCode::Overflow);
  CHECK(code_of([] { (void)(LatticePoint{1} + LatticePoint{1, 2}); }) == ErrorCode::ArityMismatch);
  CHECK(LatticePoint{4, 2}.halved() == LatticePoint{2, 1});
  CHECK(LatticePoint{4, 2, 0}.to_string() == "(4,2,0)");
}

}
