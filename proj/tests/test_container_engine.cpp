#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arcs/container_engine.hpp"
#include "oracles.hpp"

using arcs::Bitset;
using arcs::ContainerParams;
using arcs::Graph;
using arcs::Rational;

namespace {
Bitset set_of(std::uint32_t n, std::initializer_list<std::uint32_t> xs) {
  Bitset b(n);
  for (auto x : xs) b.set(x);
  return b;
}

std::uint64_t naive_independent(const Graph& g, std::uint32_t s) {
  std::uint64_t c = 0;
  oracle::for_each_subset(g.vertex_count(), s, [&](const std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (g.has_edge(v[i], v[j])) return;
    ++c;
  });
  return c;
}
}  // namespace

TEST_CASE("max-degree vertex with min-index ties") {
  const Graph s = Graph::star(4);
  CHECK(arcs::max_degree_vertex(s, s.all_vertices()) == 0);
  CHECK(arcs::max_degree_vertex(Graph::cycle(5), set_of(5, {1, 2, 3})) == 2);
  CHECK(arcs::max_degree_vertex(Graph::cycle(5), set_of(5, {3, 4})) == 3);
  CHECK_THROWS_AS(arcs::max_degree_vertex(s, s.no_vertices()), std::invalid_argument);
}

TEST_CASE("Kleitman-Winston trace on C_5") {
  const Graph g = Graph::cycle(5);
  const ContainerParams p{5, Rational(1, 2), 2, 0, 2};
  const auto trace = arcs::kw_fingerprint_trace(g, set_of(5, {0, 2}), p);
  CHECK(trace.fingerprint.vertices == std::vector<std::uint32_t>{0});
  CHECK(trace.queried == std::vector<std::uint32_t>{0});
  const auto c = arcs::kw_container(g, trace.fingerprint, p);
  CHECK(c.vertices == set_of(5, {0, 2, 3}));
  CHECK(c.available == set_of(5, {2, 3}));
  const auto replay = arcs::kw_container_trace(g, trace.fingerprint, p);
  CHECK(replay.queried == trace.queried);
}

TEST_CASE("non-members are removed alone") {
  const Graph g = Graph::star(3);
  const ContainerParams p{4, Rational(0), 3, 0, 1};
  const auto trace = arcs::kw_fingerprint_trace(g, set_of(4, {1, 2, 3}), p);
  CHECK(trace.queried.front() == 0);
  CHECK(trace.fingerprint.vertices.size() <= 3);
}

TEST_CASE("local density") {
  CHECK_FALSE(arcs::check_local_density(Graph(6), 3, Rational(1, 10)).holds);
  const auto edgeless = arcs::check_local_density(Graph(6), 6, Rational(1, 10));
  CHECK_FALSE(edgeless.holds);
  CHECK(edgeless.worst == Bitset::full(6));
  CHECK(arcs::check_local_density(Graph::cycle(5), 5, Rational(1, 2)).holds);
  CHECK(arcs::check_local_density(Graph::cycle(5), 4, Rational(1, 2)).holds);
  CHECK_FALSE(arcs::check_local_density(Graph::cycle(5), 4, Rational(3, 5)).holds);
  CHECK(arcs::check_local_density(Graph::complete(7), 2, Rational(1)).holds);
}

TEST_CASE("density profile matches subset enumeration") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    arcs::CounterRng rng(2, 0, t);
    const Graph g = Graph::random(10, 2, 5, rng);
    const auto prof = arcs::density_profile(g);
    for (std::uint32_t u = 0; u <= 10; ++u) {
      std::uint64_t best = UINT64_MAX;
      oracle::for_each_subset(10, u, [&](const std::vector<std::uint32_t>& s) {
        Bitset b(10);
        for (auto x : s) b.set(x);
        best = std::min(best, g.edges_within(b));
      });
      CHECK(prof.min_edges[u] == best);
    }
  }
}

TEST_CASE("independent set counts") {
  CHECK(arcs::count_independent_sets_bruteforce(Graph::cycle(5), 2) == 5);
  CHECK(arcs::count_independent_sets_bruteforce(Graph::complete(4), 2) == 0);
  CHECK(arcs::count_independent_sets_bruteforce(Graph(6), 3) == 20);
  for (std::uint64_t t = 0; t < 10; ++t) {
    arcs::CounterRng rng(4, 0, t);
    const Graph g = Graph::random(12, 1, 3, rng);
    for (std::uint32_t s = 0; s <= 6; ++s) {
      CHECK(arcs::count_independent_sets_bruteforce(g, s) == naive_independent(g, s));
      std::uint64_t visited = 0;
      arcs::for_each_independent_set(g, s, [&](const Bitset& b) {
        CHECK(b.count() == s);
        CHECK(g.is_independent(b));
        ++visited;
      });
      CHECK(visited == naive_independent(g, s));
    }
  }
  CHECK_THROWS(arcs::count_independent_sets_bruteforce(Graph(30), 2));
}

TEST_CASE("container bound: trivial instances") {
  for (std::uint32_t n : {4U, 7U}) {
    for (std::uint64_t r = 0; r <= n; ++r) {
      const auto rep = arcs::verify_container_bound(Graph(n), ContainerParams{n, Rational(0), 0, r, n});
      CHECK(rep.assumptions_met);
      CHECK(rep.bound_lhs == rep.bound_rhs);
      CHECK(rep.bound_lhs == arcs::binomial(n, r));
      CHECK(rep.violations == 0);
    }
  }
  const auto k10 = arcs::verify_container_bound(Graph::complete(10), ContainerParams{10, Rational(1), 3, 0, 1});
  CHECK(k10.assumptions_met);
  CHECK(k10.bound_lhs == 0);
  CHECK(k10.bound_rhs == 120);
  CHECK(k10.status == arcs::ContainerStatus::kBoundHolds);
}

TEST_CASE("unmet assumptions are reported, not failed") {
  const auto rep = arcs::verify_container_bound(Graph(8), ContainerParams{8, Rational(1, 2), 1, 2, 4});
  CHECK_FALSE(rep.assumptions_met);
  CHECK(rep.status == arcs::ContainerStatus::kAssumptionsUnmet);
  CHECK(rep.soundness_violations == 0);
}

TEST_CASE("random instances satisfy both assumptions and the bound") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const auto inst = arcs::make_kw_instance(12, 7, i);
    const auto rep = arcs::verify_container_bound(inst.graph, inst.params);
    CAPTURE(i);
    CHECK(rep.assumptions_met);
    CHECK(rep.bound_lhs <= rep.bound_rhs);
    CHECK(rep.bound_lhs == naive_independent(inst.graph, static_cast<std::uint32_t>(inst.params.f + inst.params.r)));
    CHECK(rep.violations == 0);
  }
}

TEST_CASE("encoding soundness holds unconditionally") {
  for (std::uint64_t t = 0; t < 12; ++t) {
    arcs::CounterRng rng(8, 1, t);
    const Graph g = Graph::random(11, 1 + rng.below(4), 5, rng);
    const ContainerParams p{11, Rational(0), rng.below(5), 0, 1 + rng.below(11)};
    const auto rep = arcs::verify_encoding_soundness(g, p);
    CHECK(rep.sets_checked > 0);
    CHECK(rep.violations == 0);
  }
}

TEST_CASE("exponential and rational conditions") {
  const ContainerParams p{20, Rational(1, 4), 4, 0, 7};
  // e^{-1} * 20 = 7.36 > 7, (3/4)^4 * 20 = 6.33 <= 7.
  CHECK_FALSE(arcs::exp_condition_holds(p));
  CHECK(arcs::rational_condition_holds(p));
  for (std::uint64_t f = 0; f < 12; ++f)
    for (std::uint64_t R = 1; R <= 20; ++R) {
      const ContainerParams c{20, Rational(1, 5), f, 0, R};
      const double lhs = std::exp(-0.2 * double(f)) * 20.0;
      if (std::fabs(lhs - double(R)) > 1e-9) CHECK(arcs::exp_condition_holds(c) == (double(R) >= lhs));
      if (arcs::exp_condition_holds(c)) CHECK(arcs::rational_condition_holds(c));
    }
  CHECK(arcs::least_admissible_f(20, 7, Rational(1, 4)) == std::optional<std::uint64_t>(5));
  CHECK_FALSE(arcs::least_admissible_f(20, 7, Rational(0)).has_value());
  CHECK(arcs::least_admissible_f(20, 20, Rational(0)) == std::optional<std::uint64_t>(0));
}

TEST_CASE("parameter validation") {
  const Graph g(5);
  CHECK_THROWS_AS(arcs::validate(ContainerParams{5, Rational(3, 2), 1, 0, 2}, g), std::invalid_argument);
  CHECK_THROWS_AS(arcs::validate(ContainerParams{5, Rational(1, 2), 1, 0, 0}, g), std::invalid_argument);
  CHECK_THROWS_AS(arcs::validate(ContainerParams{6, Rational(1, 2), 1, 0, 2}, g), std::invalid_argument);
}
