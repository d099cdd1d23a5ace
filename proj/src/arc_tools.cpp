#include "arcs/arc_tools.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "arcs/parallel.hpp"
#include "arcs/rng.hpp"

namespace arcs {

PointSet::PointSet(std::uint32_t universe, std::span<const std::uint32_t> indices) : bits_(universe) {
  for (auto i : indices) insert(i);
}

std::vector<std::uint32_t> PointSet::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

PointSet parabola_arc(const PlaneIndex& plane) {
  PointSet out(plane);
  const FieldSpec& f = plane.field();
  for (auto x : f.elements()) out.insert(plane.point(x, f.mul(x, x)).index);
  return out;
}

namespace {

void require_universe(const PointSet& points, const PlaneIndex& plane) {
  if (points.universe() != plane.point_count())
    throw std::invalid_argument("point set universe does not match the plane over F_" + std::to_string(plane.q()));
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

std::vector<std::uint32_t> line_occupancy(const PointSet& points, const PlaneIndex& plane) {
  require_universe(points, plane);
  std::vector<std::uint32_t> out(plane.line_count());
  for (std::uint32_t l = 0; l < plane.line_count(); ++l)
    out[l] = static_cast<std::uint32_t>(points.bits().intersect_count(plane.points_on_line({l})));
  return out;
}

bool is_arc(const PointSet& points, const PlaneIndex& plane) {
  require_universe(points, plane);
  if (points.size() < 3) return true;
  for (std::uint32_t l = 0; l < plane.line_count(); ++l)
    if (points.bits().intersect_count(plane.points_on_line({l})) > 2) return false;
  return true;
}

BigInt count_collinear_triples(const PointSet& points, const PlaneIndex& plane) {
  std::uint64_t total = 0;
  for (auto lambda : line_occupancy(points, plane)) total += choose3(lambda);
  return BigInt(static_cast<unsigned long>(total));
}

std::uint64_t triples_through_point(const PointSet& points, std::uint32_t v, const PlaneIndex& plane) {
  require_universe(points, plane);
  if (!points.contains(v)) throw std::invalid_argument("triples_through_point: point " + std::to_string(v) + " not in P");
  std::uint64_t total = 0;
  for (LineId l : plane.lines_through_point(v)) total += choose2(points.bits().intersect_count(plane.points_on_line(l)) - 1);
  return total;
}

SupersatBound supersat_bound(std::uint64_t q, std::uint64_t n) {
  if (q < 2) throw std::invalid_argument("supersat_bound: q must be >= 2");
  if (n < 1 || n > q * q)
    throw std::invalid_argument("supersat_bound: n = " + std::to_string(n) + " outside [1, q^2]");
  const std::uint64_t k = (n - 1) / (q + 1);
  return supersat_bound(q, n, k, n - 1 - k * (q + 1));
}

SupersatBound supersat_bound(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t x) {
  if (x >= q + 1) throw std::invalid_argument("supersat_bound: x must satisfy 0 <= x < q + 1");
  if (n < k * (q + 1) + x + 1) throw std::invalid_argument("supersat_bound: n < k(q+1) + x + 1");
  return {{k, x, n}, choose2(k) * (q + 1) + k * x};
}

namespace {

struct SupersatAccumulator {
  std::uint64_t trials = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
  std::uint64_t worst_size = 0;

  void observe(std::int64_t slack, std::uint64_t n) {
    ++checks;
    if (slack < 0) ++violations;
    if (slack < min_slack || (slack == min_slack && n < worst_size)) {
      min_slack = slack;
      worst_size = n;
    }
  }
  void merge(const SupersatAccumulator& o) {
    trials += o.trials;
    checks += o.checks;
    violations += o.violations;
    if (o.checks && (o.min_slack < min_slack || (o.min_slack == min_slack && o.worst_size < worst_size))) {
      min_slack = o.min_slack;
      worst_size = o.worst_size;
    }
  }
};

void check_subset(const PointSet& set, const PlaneIndex& plane, const SupersatOptions& opt, SupersatAccumulator& acc) {
  const std::uint64_t q = plane.q();
  const std::uint64_t n = set.size();
  std::uint64_t bound;
  if (opt.decomposition) {
    const auto [k, x] = *opt.decomposition;
    if (n < k * (q + 1) + x + 1) return;
    bound = supersat_bound(q, n, k, x).bound;
  } else {
    bound = supersat_bound(q, n).bound;
  }
  ++acc.trials;
  const auto occ = line_occupancy(set, plane);
  set.bits().for_each([&](std::size_t v) {
    std::uint64_t through = 0;
    for (LineId l : plane.lines_through_point(static_cast<std::uint32_t>(v))) through += choose2(occ[l.id] - 1);
    acc.observe(static_cast<std::int64_t>(through) - static_cast<std::int64_t>(bound), n);
  });
}

}  // namespace

SupersatReport verify_supersaturation(const PlaneIndex& plane, const SupersatOptions& options) {
  const std::uint32_t n_points = plane.point_count();
  const bool exhaustive = options.exhaustive.value_or(n_points <= 16);
  if (exhaustive && n_points > 24) throw std::invalid_argument("verify_supersaturation: exhaustive mode needs q^2 <= 24");
  const unsigned threads = std::max(1U, options.threads);
  std::vector<SupersatAccumulator> per_worker(threads);

  if (exhaustive) {
    constexpr std::uint64_t kChunk = 1U << 12;
    const std::uint64_t total = std::uint64_t{1} << n_points;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    parallel_for(chunks, threads, [&](std::size_t c, unsigned w) {
      const std::uint64_t lo = std::max<std::uint64_t>(1, c * kChunk);
      const std::uint64_t hi = std::min(total, (c + 1) * kChunk);
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        PointSet set(n_points);
        for (std::uint32_t i = 0; i < n_points; ++i)
          if ((mask >> i) & 1U) set.insert(i);
        check_subset(set, plane, options, per_worker[w]);
      }
    });
  } else {
    parallel_for(n_points, threads, [&](std::size_t size_minus_one, unsigned w) {
      const auto n = static_cast<std::uint32_t>(size_minus_one + 1);
      for (std::uint64_t t = 0; t < options.trials_per_size; ++t) {
        CounterRng rng(options.seed, n, t);
        const auto idx = rng.subset(n_points, n);
        check_subset(PointSet(n_points, idx), plane, options, per_worker[w]);
      }
    });
  }

  SupersatAccumulator all;
  for (const auto& acc : per_worker) all.merge(acc);
  SupersatReport report;
  report.q = plane.q();
  report.exhaustive = exhaustive;
  report.trials = all.trials;
  report.point_checks = all.checks;
  report.violations = all.violations;
  report.min_slack = all.checks ? all.min_slack : 0;
  report.worst_size = all.worst_size;
  return report;
}

}  // namespace arcs
