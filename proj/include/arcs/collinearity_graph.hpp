#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arcs/arc_tools.hpp"
#include "arcs/bitset.hpp"
#include "arcs/numeric.hpp"
#include "arcs/plane_geometry.hpp"
#include "arcs/rng.hpp"

namespace arcs {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Vertex labels carry point indices for geometric graphs and default to
/// 0..n-1 for synthetic ones.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t n);
  Graph(std::uint32_t n, std::vector<std::uint32_t> labels);

  static Graph from_edges(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
  static Graph complete(std::uint32_t n);
  static Graph cycle(std::uint32_t n);
  /// Star with centre 0 and leaves 1..leaves.
  static Graph star(std::uint32_t leaves);
  /// G(n, p) with p = num/den; each pair decided by one draw from rng.
  static Graph random(std::uint32_t n, std::uint64_t num, std::uint64_t den, CounterRng& rng);

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return edges_; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }

  /// Adds {u, v}; returns false if it was already present. Self-loops throw.
  bool add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t degree(std::uint32_t v) const;
  const Bitset& neighbors(std::uint32_t v) const;

  /// Edges inside the vertex subset U.
  std::uint64_t edges_within(const Bitset& subset) const;
  bool is_independent(const Bitset& subset) const;

  /// Full vertex set / empty vertex set in this graph's universe.
  Bitset all_vertices() const { return Bitset::full(n_); }
  Bitset no_vertices() const { return Bitset(n_); }

 private:
  void check(std::uint32_t v) const;

  std::uint32_t n_ = 0;
  std::uint64_t edges_ = 0;
  std::vector<std::uint32_t> labels_;
  std::vector<Bitset> rows_;
};

/// Graph on P (vertices in increasing point index) where {x, y} is an edge
/// iff some z in F is collinear with x and y. Requires F ∩ P = ∅ and F an
/// arc; throws std::invalid_argument otherwise.
Graph build_collinearity_graph(const PointSet& arc, const PointSet& points, const PlaneIndex& plane);

/// Histogram of |{z ∈ F : x, y, z collinear}| over the edges {x, y}.
std::map<std::uint32_t, std::uint64_t> edge_multiplicity_histogram(const PointSet& arc, const PointSet& points,
                                                                   const PlaneIndex& plane);

/// Pairs of P collinear with z (z ∉ P): sum over lines L ∋ z of C(|L ∩ P|, 2).
std::uint64_t pairs_collinear_with(std::uint32_t z, const PointSet& points, const PlaneIndex& plane);

/// (eps * f_size / (8q)) * C(p_size, 2). Requires p_size >= (1 + eps) q.
Rational density_required(std::uint64_t q, const Rational& epsilon, std::uint64_t f_size, std::uint64_t p_size);

struct DensityWitness {
  std::uint64_t q = 0;
  Rational epsilon;
  std::uint64_t f_size = 0;
  std::uint64_t p_size = 0;
  Rational required;
  std::uint64_t actual = 0;

  bool holds() const { return Rational(BigInt(static_cast<unsigned long>(actual))) >= required; }
};

DensityWitness density_witness(const PointSet& arc, const PointSet& points, const PlaneIndex& plane,
                               const Rational& epsilon);

/// Random disjoint (F, P) for trial `trial`: F is a greedy random arc of
/// size in [1, q + 2] (or exactly `f_size` when reachable), P a uniform
/// subset of the complement with |P| >= min_p.
std::pair<PointSet, PointSet> random_arc_and_set(const PlaneIndex& plane, std::uint64_t min_p, std::uint64_t seed,
                                                 std::uint64_t trial, std::optional<std::uint32_t> f_size = std::nullopt);

struct DensityQResult {
  std::uint64_t q = 0;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint32_t max_multiplicity = 0;
  std::optional<Rational> min_ratio;  // min actual/required over trials with required > 0
};

struct DensityReport {
  Rational epsilon;
  std::vector<DensityQResult> per_q;
  std::uint64_t violations = 0;
  std::optional<Rational> min_ratio;
  /// Smallest tested q such that it and every larger tested q had no violations.
  std::optional<std::uint64_t> min_q_clean;
};

struct DensityOptions {
  std::vector<std::uint32_t> qs;
  Rational epsilon{1, 2};
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

DensityReport verify_density(const DensityOptions& options);

}  // namespace arcs
