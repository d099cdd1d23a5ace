#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcs/arc_tools.hpp"
#include "arcs/rng.hpp"
#include "oracles.hpp"

using arcs::PlaneIndex;
using arcs::PointSet;

namespace {
PlaneIndex plane_of(std::uint32_t q) { return PlaneIndex(arcs::make_field_of_order(q)); }
}  // namespace

TEST_CASE("parabola arc") {
  for (auto q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 11U}) {
    const auto plane = plane_of(q);
    const auto par = arcs::parabola_arc(plane);
    CHECK(par.size() == q);
    CHECK(arcs::is_arc(par, plane));
    CHECK(oracle::is_arc(oracle::NaiveField(plane.field()), par.indices()));
  }
}

TEST_CASE("hyperoval in AG(2,4)") {
  const auto plane = plane_of(4);
  const oracle::NaiveField N(plane.field());
  std::uint64_t six_arcs = 0;
  oracle::for_each_subset(16, 6, [&](const std::vector<std::uint32_t>& s) {
    if (oracle::is_arc(N, s)) {
      ++six_arcs;
      CHECK(arcs::is_arc(PointSet(16, s), plane));
    }
  });
  CHECK(six_arcs > 0);
}

TEST_CASE("full-plane triple count") {
  for (auto q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
    const auto plane = plane_of(q);
    const auto all = PointSet::full(plane);
    const arcs::BigInt expected = arcs::BigInt(q * q + q) * arcs::binomial(q, 3);
    CHECK(arcs::count_collinear_triples(all, plane) == expected);
    if (q <= 5) CHECK(oracle::collinear_triples(oracle::NaiveField(plane.field()), all.indices()) == expected.get_ui());
  }
  CHECK(arcs::count_collinear_triples(PointSet::full(plane_of(3)), plane_of(3)) == 12);
  CHECK(arcs::count_collinear_triples(PointSet::full(plane_of(5)), plane_of(5)) == 300);
}

TEST_CASE("random subsets: triple counts and arc test against the oracle") {
  for (auto q : {4U, 5U, 7U}) {
    const auto plane = plane_of(q);
    const oracle::NaiveField N(plane.field());
    for (std::uint64_t t = 0; t < 60; ++t) {
      arcs::CounterRng rng(11, q, t);
      const auto k = static_cast<std::uint32_t>(rng.below(q * q + 1));
      const auto idx = rng.subset(q * q, k);
      const PointSet s(q * q, idx);
      CHECK(arcs::count_collinear_triples(s, plane) == oracle::collinear_triples(N, idx));
      CHECK(arcs::is_arc(s, plane) == oracle::is_arc(N, idx));
      for (auto v : idx) {
        std::uint64_t through = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
          for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (idx[i] != v && idx[j] != v && oracle::collinear(N, v, idx[i], idx[j])) ++through;
        CHECK(arcs::triples_through_point(s, v, plane) == through);
      }
    }
  }
}

TEST_CASE("line occupancy") {
  const auto plane = plane_of(5);
  const auto occ = arcs::line_occupancy(PointSet::full(plane), plane);
  REQUIRE(occ.size() == 30);
  for (auto c : occ) CHECK(c == 5);
  const auto par = arcs::line_occupancy(arcs::parabola_arc(plane), plane);
  for (auto c : par) CHECK(c <= 2);
}

TEST_CASE("triples through a point of the full plane") {
  for (auto q : {3U, 5U, 7U}) {
    const auto plane = plane_of(q);
    const auto all = PointSet::full(plane);
    const std::uint64_t per_point = (q + 1) * oracle::choose(q - 1, 2);
    for (std::uint32_t v = 0; v < q * q; v += 4) CHECK(arcs::triples_through_point(all, v, plane) == per_point);
    CHECK(arcs::supersat_bound(q, q * q).bound == per_point);
  }
  CHECK(arcs::triples_through_point(PointSet::full(plane_of(5)), 0, plane_of(5)) == 36);
}

TEST_CASE("supersaturation bound values") {
  CHECK(arcs::supersat_bound(7, 17).bound == 8);
  CHECK(arcs::supersat_bound(5, 6).bound == 0);
  CHECK(arcs::supersat_bound(5, 25).bound == 36);
  const auto d = arcs::supersat_bound(7, 17).decomposition;
  CHECK(d == arcs::SupersatDecomposition{2, 0, 17});
  for (std::uint64_t q : {3, 4, 5, 7}) {
    for (std::uint64_t n = 1; n <= q * q; ++n) {
      const auto b = arcs::supersat_bound(q, n);
      CHECK(b.decomposition.k * (q + 1) + b.decomposition.x + 1 == n);
      CHECK(b.decomposition.x < q + 1);
      CHECK(b.bound == oracle::choose(b.decomposition.k, 2) * (q + 1) + b.decomposition.k * b.decomposition.x);
    }
  }
  // A smaller k with n >= k(q+1) + x + 1 gives a weaker bound.
  CHECK(arcs::supersat_bound(7, 17, 1, 7).bound == 7);
  CHECK(arcs::supersat_bound(7, 17, 1, 7).bound <= arcs::supersat_bound(7, 17).bound);
  CHECK_THROWS_AS(arcs::supersat_bound(7, 17, 2, 8), std::invalid_argument);
  CHECK_THROWS_AS(arcs::supersat_bound(7, 16, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(arcs::supersat_bound(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(arcs::supersat_bound(5, 26), std::invalid_argument);
}

TEST_CASE("supersaturation holds exhaustively for q = 3") {
  const auto plane = plane_of(3);
  arcs::SupersatOptions opt;
  const auto rep = arcs::verify_supersaturation(plane, opt);
  CHECK(rep.exhaustive);
  CHECK(rep.trials == 511);
  CHECK(rep.violations == 0);
  CHECK(rep.min_slack >= 0);
}

TEST_CASE("supersaturation sampled, thread invariant") {
  const auto plane = plane_of(5);
  arcs::SupersatOptions opt;
  opt.trials_per_size = 50;
  opt.seed = 3;
  const auto one = arcs::verify_supersaturation(plane, opt);
  opt.threads = 3;
  const auto three = arcs::verify_supersaturation(plane, opt);
  CHECK_FALSE(one.exhaustive);
  CHECK(one.violations == 0);
  CHECK(one.trials == three.trials);
  CHECK(one.point_checks == three.point_checks);
  CHECK(one.min_slack == three.min_slack);
  CHECK(one.worst_size == three.worst_size);
}

TEST_CASE("explicit decomposition is verified too") {
  const auto plane = plane_of(3);
  arcs::SupersatOptions opt;
  opt.decomposition = std::make_pair(std::uint64_t{1}, std::uint64_t{2});
  const auto rep = arcs::verify_supersaturation(plane, opt);
  CHECK(rep.violations == 0);
}

TEST_CASE("errors") {
  const auto plane = plane_of(5);
  const PointSet s(25, {1, 2, 3});
  CHECK_THROWS_AS(arcs::triples_through_point(s, 4, plane), std::invalid_argument);
  CHECK_THROWS(PointSet(25, {25}));
  CHECK_THROWS_AS(arcs::is_arc(PointSet(16), plane), std::invalid_argument);
}
