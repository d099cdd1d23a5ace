#include "arcs/collinearity_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "arcs/finite_field.hpp"
#include "arcs/parallel.hpp"

namespace arcs {

Graph::Graph(std::uint32_t n) : n_(n), labels_(n), rows_(n, Bitset(n)) {
  std::iota(labels_.begin(), labels_.end(), 0U);
}

Graph::Graph(std::uint32_t n, std::vector<std::uint32_t> labels) : n_(n), labels_(std::move(labels)), rows_(n, Bitset(n)) {
  if (labels_.size() != n) throw std::invalid_argument("Graph: label count differs from vertex count");
}

Graph Graph::from_edges(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph Graph::star(std::uint32_t leaves) {
  Graph g(leaves + 1);
  for (std::uint32_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::random(std::uint32_t n, std::uint64_t num, std::uint64_t den, CounterRng& rng) {
  if (den == 0 || num > den) throw std::invalid_argument("Graph::random: need 0 <= num <= den, den > 0");
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rng.below(den) < num) g.add_edge(u, v);
  return g;
}

void Graph::check(std::uint32_t v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edges_;
  return true;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  check(u);
  check(v);
  return rows_[u].test(v);
}

std::uint32_t Graph::degree(std::uint32_t v) const {
  check(v);
  return static_cast<std::uint32_t>(rows_[v].count());
}

const Bitset& Graph::neighbors(std::uint32_t v) const {
  check(v);
  return rows_[v];
}

std::uint64_t Graph::edges_within(const Bitset& subset) const {
  std::uint64_t twice = 0;
  subset.for_each([&](std::size_t v) { twice += rows_[v].intersect_count(subset); });
  return twice / 2;
}

bool Graph::is_independent(const Bitset& subset) const {
  bool ok = true;
  subset.for_each([&](std::size_t v) { ok = ok && !rows_[v].intersects(subset); });
  return ok;
}

namespace {

void require_valid_pair(const PointSet& arc, const PointSet& points, const PlaneIndex& plane) {
  if (arc.universe() != plane.point_count() || points.universe() != plane.point_count())
    throw std::invalid_argument("point set universe does not match the plane");
  if (!arc.disjoint(points)) throw std::invalid_argument("F and P must be disjoint");
  if (!is_arc(arc, plane)) throw std::invalid_argument("F is not an arc");
}

// Calls fn(u, v) (vertex ids, u < v) once per (z, collinear pair) incidence.
template <class Fn>
void for_each_collinear_pair(const PointSet& arc, const PointSet& points, const PlaneIndex& plane,
                             const std::vector<std::uint32_t>& vertex_of, Fn&& fn) {
  std::vector<std::uint32_t> members;
  arc.bits().for_each([&](std::size_t z) {
    for (LineId l : plane.lines_through_point(static_cast<std::uint32_t>(z))) {
      members.clear();
      for (auto pt : plane.line_points(l))
        if (points.contains(pt)) members.push_back(vertex_of[pt]);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) fn(members[i], members[j]);
    }
  });
}

std::vector<std::uint32_t> vertex_map(const PointSet& points, const PlaneIndex& plane) {
  std::vector<std::uint32_t> vertex_of(plane.point_count(), 0);
  std::uint32_t next = 0;
  points.bits().for_each([&](std::size_t pt) { vertex_of[pt] = next++; });
  return vertex_of;
}

}  // namespace

Graph build_collinearity_graph(const PointSet& arc, const PointSet& points, const PlaneIndex& plane) {
  require_valid_pair(arc, points, plane);
  const auto vertex_of = vertex_map(points, plane);
  Graph g(static_cast<std::uint32_t>(points.size()), points.indices());
  for_each_collinear_pair(arc, points, plane, vertex_of, [&](std::uint32_t u, std::uint32_t v) { g.add_edge(u, v); });
  return g;
}

std::map<std::uint32_t, std::uint64_t> edge_multiplicity_histogram(const PointSet& arc, const PointSet& points,
                                                                   const PlaneIndex& plane) {
  require_valid_pair(arc, points, plane);
  const auto vertex_of = vertex_map(points, plane);
  const std::size_t n = points.size();
  std::vector<std::uint32_t> mult(n * n, 0);
  for_each_collinear_pair(arc, points, plane, vertex_of, [&](std::uint32_t u, std::uint32_t v) { ++mult[u * n + v]; });
  std::map<std::uint32_t, std::uint64_t> hist;
  for (auto m : mult)
    if (m) ++hist[m];
  return hist;
}

std::uint64_t pairs_collinear_with(std::uint32_t z, const PointSet& points, const PlaneIndex& plane) {
  if (points.contains(z)) throw std::invalid_argument("pairs_collinear_with: z must not lie in P");
  std::uint64_t total = 0;
  for (LineId l : plane.lines_through_point(z)) {
    const std::uint64_t lambda = points.bits().intersect_count(plane.points_on_line(l));
    if (lambda >= 2) total += lambda * (lambda - 1) / 2;
  }
  return total;
}

Rational density_required(std::uint64_t q, const Rational& epsilon, std::uint64_t f_size, std::uint64_t p_size) {
  if (sgn(epsilon) <= 0) throw std::invalid_argument("density_required: epsilon must be positive");
  const Rational qq(BigInt(static_cast<unsigned long>(q)));
  const Rational pp(BigInt(static_cast<unsigned long>(p_size)));
  if (pp < (1 + epsilon) * qq)
    throw std::invalid_argument("density_required: |P| = " + std::to_string(p_size) + " is below (1+eps)q");
  Rational r = epsilon * Rational(BigInt(static_cast<unsigned long>(f_size))) / (8 * qq) *
               Rational(binomial(p_size, 2));
  r.canonicalize();
  return r;
}

DensityWitness density_witness(const PointSet& arc, const PointSet& points, const PlaneIndex& plane,
                               const Rational& epsilon) {
  DensityWitness w;
  w.q = plane.q();
  w.epsilon = epsilon;
  w.f_size = arc.size();
  w.p_size = points.size();
  w.required = density_required(w.q, epsilon, w.f_size, w.p_size);
  w.actual = build_collinearity_graph(arc, points, plane).edge_count();
  return w;
}

std::pair<PointSet, PointSet> random_arc_and_set(const PlaneIndex& plane, std::uint64_t min_p, std::uint64_t seed,
                                                 std::uint64_t trial, std::optional<std::uint32_t> f_size) {
  const std::uint32_t q = plane.q();
  const std::uint32_t n_points = plane.point_count();
  CounterRng rng(seed, q, trial);
  const std::uint32_t target = f_size.value_or(1 + static_cast<std::uint32_t>(rng.below(q + 2)));

  PointSet arc(plane);
  std::vector<std::uint8_t> occ(plane.line_count(), 0);
  for (auto pt : rng.permutation(n_points)) {
    if (arc.size() >= target) break;
    const auto lines = plane.lines_through_point(pt);
    if (std::all_of(lines.begin(), lines.end(), [&](LineId l) { return occ[l.id] < 2; })) {
      arc.insert(pt);
      for (LineId l : lines) ++occ[l.id];
    }
  }

  const std::uint64_t max_p = n_points - arc.size();
  if (min_p > max_p) throw std::invalid_argument("random_arc_and_set: min |P| exceeds available points");
  std::uint64_t hi = max_p;
  if (rng.below(2) == 0) hi = std::min<std::uint64_t>(max_p, std::max<std::uint64_t>(min_p, 2ULL * (q + 1)));
  const auto p_size = static_cast<std::uint32_t>(min_p + rng.below(hi - min_p + 1));

  const auto rest = arc.complement().indices();
  PointSet points(plane);
  for (auto i : rng.subset(static_cast<std::uint32_t>(rest.size()), p_size)) points.insert(rest[i]);
  return {std::move(arc), std::move(points)};
}

DensityReport verify_density(const DensityOptions& options) {
  if (sgn(options.epsilon) <= 0) throw std::invalid_argument("verify_density: epsilon must be positive");
  std::vector<std::uint32_t> qs = options.qs;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<PlaneIndex> planes;
  for (auto q : qs) planes.emplace_back(make_field_of_order(q));

  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::vector<DensityQResult>> acc(threads, std::vector<DensityQResult>(qs.size()));
  const std::uint64_t trials = options.trials;

  parallel_for(qs.size() * trials, threads, [&](std::size_t task, unsigned w) {
    const std::size_t qi = task / trials;
    const std::uint64_t t = task % trials;
    const PlaneIndex& plane = planes[qi];
    const std::uint64_t q = plane.q();
    const BigInt min_p = ceil((1 + options.epsilon) * Rational(BigInt(static_cast<unsigned long>(q))));
    auto [arc, points] = random_arc_and_set(plane, min_p.get_ui(), options.seed, t);

    DensityQResult& r = acc[w][qi];
    ++r.trials;
    const auto hist = edge_multiplicity_histogram(arc, points, plane);
    if (!hist.empty()) r.max_multiplicity = std::max(r.max_multiplicity, hist.rbegin()->first);
    const DensityWitness wit = density_witness(arc, points, plane, options.epsilon);
    if (!wit.holds()) ++r.violations;
    if (sgn(wit.required) > 0) {
      Rational ratio = Rational(BigInt(static_cast<unsigned long>(wit.actual))) / wit.required;
      ratio.canonicalize();
      if (!r.min_ratio || ratio < *r.min_ratio) r.min_ratio = ratio;
    }
  });

  DensityReport report;
  report.epsilon = options.epsilon;
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    DensityQResult merged;
    merged.q = qs[qi];
    for (const auto& worker : acc) {
      const DensityQResult& r = worker[qi];
      merged.trials += r.trials;
      merged.violations += r.violations;
      merged.max_multiplicity = std::max(merged.max_multiplicity, r.max_multiplicity);
      if (r.min_ratio && (!merged.min_ratio || *r.min_ratio < *merged.min_ratio)) merged.min_ratio = r.min_ratio;
    }
    report.violations += merged.violations;
    if (merged.min_ratio && (!report.min_ratio || *merged.min_ratio < *report.min_ratio))
      report.min_ratio = merged.min_ratio;
    report.per_q.push_back(merged);
  }
  for (std::size_t qi = qs.size(); qi-- > 0;) {
    if (report.per_q[qi].violations != 0) break;
    report.min_q_clean = qs[qi];
  }
  return report;
}

}  // namespace arcs
