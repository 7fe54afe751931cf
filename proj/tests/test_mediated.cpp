#include <algorithm>
#include <random>

#include "agisos/error.hpp"
#include "agisos/mediated.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace agisos;

namespace {

const oracle::Points kU1{{4, 2, 0}, {2, 4, 0}, {0, 0, 6}};
const oracle::Points kU2{{6, 0, 0}, {0, 6, 0}, {0, 0, 6}};

Simplex make(const oracle::Points& v) { return Simplex::create(v); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an agisos::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("mediated") {

TEST_CASE("the displayed eight-point set is U2-mediated") {
  const PointSet S{{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {2, 2, 2}, {4, 2, 0}, {2, 4, 0}, {0, 2, 4}, {0, 4, 2}};
  const auto report = is_mediated(make(kU2), S);
  CHECK(report.mediated);
  CHECK(report.failures.empty());
  CHECK(report.certificate.entries.size() == 5);
  CHECK(report.certificate.valid_for(S));
  // Lexicographically smallest pair for the centroid.
  CHECK(report.certificate.entries.at({2, 2, 2}) == MidpointPair{{0, 2, 4}, {4, 2, 0}});
}

TEST_CASE("the even points of U1 do not mediate the centroid") {
  const PointSet S{{4, 2, 0}, {2, 4, 0}, {0, 0, 6}, {2, 2, 2}};
  const auto report = is_mediated(make(kU1), S);
  CHECK_FALSE(report.mediated);
  CHECK(report.failures == PointSet{{2, 2, 2}});
}

TEST_CASE("a vertex-only set is trivially mediated") {
  const PointSet S(kU1.begin(), kU1.end());
  const auto report = is_mediated(make(kU1), S);
  CHECK(report.mediated);
  CHECK(report.certificate.entries.empty());
}

TEST_CASE("is_mediated preconditions") {
  CHECK(code_of([] { is_mediated(make(kU1), {{4, 2, 0}, {2, 4, 0}}); }) == ErrorCode::VertexMissing);
  CHECK(code_of([] { is_mediated(make(kU1), {{4, 2, 0}, {2, 4, 0}, {0, 0, 6}, {5, 1, 0}}); }) ==
        ErrorCode::PointOutsideSimplex);
}

TEST_CASE("maximal mediated set of U1 matches the subset-search oracle") {
  const PointSet frozen{{4, 2, 0}, {2, 4, 0}, {0, 0, 6}, {3, 3, 0}, {2, 1, 3}, {1, 2, 3}};
  const auto search = oracle::maximal_by_subsets(kU1);
  CHECK(search.union_of_mediated == frozen);
  CHECK(search.union_is_mediated);
  CHECK(maximal_mediated_set(make(kU1)) == frozen);
}

TEST_CASE("maximal mediated set of U2 and of a segment") {
  const auto s2 = maximal_mediated_set(make(kU2));
  CHECK(s2.contains({2, 2, 2}));
  CHECK(s2.size() == 28);
  CHECK(maximal_mediated_set(Simplex::create({{2, 0}, {0, 2}})) == PointSet{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("sos membership") {
  CHECK_FALSE(sos_membership(make(kU1), {2, 2, 2}).sos);
  const auto h = sos_membership(make(kU2), {2, 2, 2});
  CHECK(h.sos);
  REQUIRE_FALSE(h.chain.empty());
  CHECK(h.chain.front().first == LatticePoint{2, 2, 2});
  const auto v = sos_membership(make(kU1), {4, 2, 0});
  CHECK(v.sos);
  CHECK(v.chain.empty());
  CHECK(code_of([] { sos_membership(make(kU1), {5, 1, 0}); }) == ErrorCode::PointOutsideSimplex);
}

TEST_CASE("the sos chain is itself a mediated set containing the apex") {
  const auto s = make(kU2);
  const auto h = sos_membership(s, {1, 1, 4});
  REQUIRE(h.sos);
  PointSet closure(kU2.begin(), kU2.end());
  MediationCertificate cert;
  for (const auto& [y, pair] : h.chain) {
    closure.insert(y);
    closure.insert(pair.first);
    closure.insert(pair.second);
    cert.entries.emplace(y, pair);
  }
  CHECK(cert.valid_for(closure));
  CHECK(is_mediated(s, closure).mediated);
}

TEST_CASE("maximality and closure under union on small random simplices") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 25) {
    const std::size_t n = 2 + rng() % 2;
    const auto vs = oracle::random_vertex_set(rng, n, 8, 1 + rng() % 4);
    std::optional<Simplex> s;
    try {
      s = Simplex::create(vs);
    } catch (const Error&) {
      continue;
    }
    const auto all = enumerate_lattice_points(*s, 1);
    if (all.size() > 12 + n) continue;  // keep the subset search at <= 2^12 subsets
    const auto search = oracle::maximal_by_subsets(vs);
    const auto got = maximal_mediated_set(*s);
    CHECK(got == search.union_of_mediated);
    CHECK(search.union_is_mediated);
    CHECK(oracle::is_mediated_by_definition(vs, got));
    for (const auto& v : vs) CHECK(got.contains(v));
    CHECK(std::includes(all.begin(), all.end(), got.begin(), got.end()));
    ++checked;
  }
}

TEST_CASE("deletion order does not change the fixed point") {
  std::mt19937_64 rng(5);
  for (const auto& vs : {kU1, kU2, oracle::Points{{8, 2, 0, 0}, {0, 4, 6, 0}, {2, 2, 2, 4}, {0, 0, 0, 10}}}) {
    const auto s = make(vs);
    const auto reference = maximal_mediated_set(s);
    const auto all = enumerate_lattice_points(s, 1);
    std::vector<LatticePoint> order(all.begin(), all.end());
    for (int round = 0; round < 10; ++round) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(greatest_mediated_subset(s, order) == reference);
    }
  }
}

}
