#include "arcs/census.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arcs/parallel.hpp"
#include "arcs/rng.hpp"

namespace arcs {

std::string to_string(CensusMethod m) { return m == CensusMethod::kExhaustive ? "exhaustive" : "sampled"; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Depth-first arc search over a plane with at most 64 * W points.
template <std::size_t W>
class ArcSearch {
 public:
  using Words = std::array<std::uint64_t, W>;

  ArcSearch(const PlaneIndex& plane, std::uint32_t m_max, std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
      : plane_(plane), m_max_(m_max), n_points_(plane.point_count()), nodes_(nodes), budget_(budget),
        occ_(plane.line_count(), 0), counts_(m_max + 1, 0) {
    masks_.resize(plane.line_count());
    for (std::uint32_t l = 0; l < plane.line_count(); ++l) {
      masks_[l].fill(0);
      for (auto pt : plane.line_points({l})) masks_[l][pt / 64] |= std::uint64_t{1} << (pt % 64);
    }
  }

  /// Counts every arc whose smallest point is `first`.
  void run_from(std::uint32_t first) {
    Words forbidden{};
    forbidden.fill(0);
    descend(first, forbidden, 1);
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  void descend(std::uint32_t pt, Words forbidden, std::uint32_t depth) {
    const auto lines = plane_.lines_through_point(pt);
    for (LineId l : lines)
      if (++occ_[l.id] == 2)
        for (std::size_t k = 0; k < W; ++k) forbidden[k] |= masks_[l.id][k];
    ++counts_[depth];
    tick();
    if (depth < m_max_) {
      const std::uint32_t start = pt + 1;
      for (std::size_t k = start / 64; k < W; ++k) {
        std::uint64_t free = ~forbidden[k];
        if (k == start / 64) free &= ~std::uint64_t{0} << (start % 64);
        while (free) {
          const auto next = static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(std::countr_zero(free)));
          free &= free - 1;
          if (next >= n_points_) break;
          descend(next, forbidden, depth + 1);
        }
      }
    }
    for (LineId l : lines) --occ_[l.id];
  }

  void tick() {
    if (++local_nodes_ == 4096) {
      if (nodes_.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_ > budget_)
        throw std::runtime_error("census: node budget of " + std::to_string(budget_) +
                                 " exceeded; lower --m-max or raise the budget");
      local_nodes_ = 0;
    }
  }

  const PlaneIndex& plane_;
  std::uint32_t m_max_;
  std::uint32_t n_points_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::uint64_t local_nodes_ = 0;
  std::vector<Words> masks_;
  std::vector<std::uint8_t> occ_;
  std::vector<std::uint64_t> counts_;
};

template <std::size_t W>
std::vector<std::uint64_t> census_counts(const PlaneIndex& plane, std::uint32_t m_max, unsigned threads,
                                         std::uint64_t budget) {
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<std::uint64_t>> per_worker(threads, std::vector<std::uint64_t>(m_max + 1, 0));
  std::vector<std::unique_ptr<ArcSearch<W>>> searches(threads);
  parallel_for(plane.point_count(), threads, [&](std::size_t first, unsigned w) {
    if (!searches[w]) searches[w] = std::make_unique<ArcSearch<W>>(plane, m_max, nodes, budget);
    searches[w]->run_from(static_cast<std::uint32_t>(first));
  });
  std::vector<std::uint64_t> total(m_max + 1, 0);
  total[0] = 1;
  for (const auto& s : searches)
    if (s)
      for (std::uint32_t m = 1; m <= m_max; ++m) total[m] += s->counts()[m];
  return total;
}

}  // namespace

std::vector<CensusRecord> enumerate_arcs(const PlaneIndex& plane, const CensusOptions& options) {
  const std::uint32_t q = plane.q();
  if (q > kFullCensusMaxQ && !options.m_max)
    throw std::invalid_argument("census: q = " + std::to_string(q) + " needs an explicit m_max cutoff");
  const std::uint32_t m_max = std::min(options.m_max.value_or(q + 2), plane.point_count());
  const unsigned threads = std::max(1U, options.threads);
  const auto start = Clock::now();

  std::vector<std::uint64_t> counts;
  const std::uint32_t words = (plane.point_count() + 63) / 64;
  if (m_max == 0) {
    counts = {1};
  } else if (words <= 1) {
    counts = census_counts<1>(plane, m_max, threads, options.node_budget);
  } else if (words <= 2) {
    counts = census_counts<2>(plane, m_max, threads, options.node_budget);
  } else if (words <= 4) {
    counts = census_counts<4>(plane, m_max, threads, options.node_budget);
  } else if (words <= 8) {
    counts = census_counts<8>(plane, m_max, threads, options.node_budget);
  } else if (words <= 16) {
    counts = census_counts<16>(plane, m_max, threads, options.node_budget);
  } else if (words <= 32) {
    counts = census_counts<32>(plane, m_max, threads, options.node_budget);
  } else {
    counts = census_counts<64>(plane, m_max, threads, options.node_budget);
  }

  const double elapsed = seconds_since(start);
  std::vector<CensusRecord> out;
  for (std::uint32_t m = 0; m <= m_max; ++m) {
    CensusRecord r;
    r.q = q;
    r.m = m;
    r.count = BigInt(static_cast<unsigned long>(counts[m]));
    r.method = CensusMethod::kExhaustive;
    r.runtime_seconds = elapsed;
    out.push_back(std::move(r));
  }
  return out;
}

BigInt trivial_lower_bound(std::uint64_t q, std::uint64_t m) {
  if (m > q) throw std::invalid_argument("trivial_lower_bound: m > q");
  return binomial(q, m);
}

CensusRecord SampleReport::as_record() const {
  CensusRecord r;
  r.q = q;
  r.m = m;
  r.count = floor(implied_lower_bound);
  r.method = CensusMethod::kSampled;
  r.trials = trials;
  r.seed = seed;
  r.ci_low = wilson_low;
  r.ci_high = wilson_high;
  return r;
}

SampleReport sample_arc_fraction(const PlaneIndex& plane, std::uint64_t m, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads) {
  if (trials < 1) throw std::invalid_argument("sample_arc_fraction: trials must be >= 1");
  const std::uint32_t n_points = plane.point_count();
  if (m > n_points) throw std::invalid_argument("sample_arc_fraction: m exceeds q^2");
  threads = std::max(1U, threads);

  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(threads, 0);
  std::vector<std::vector<std::uint8_t>> occ(threads);
  parallel_for(chunks, threads, [&](std::size_t c, unsigned w) {
    auto& o = occ[w];
    if (o.empty()) o.assign(plane.line_count(), 0);
    const std::uint64_t hi = std::min(trials, (c + 1) * kChunk);
    for (std::uint64_t t = c * kChunk; t < hi; ++t) {
      CounterRng rng(seed, m, t);
      const auto pts = rng.subset(n_points, static_cast<std::uint32_t>(m));
      bool arc = true;
      for (auto p : pts)
        for (LineId l : plane.lines_through_point(p))
          if (++o[l.id] > 2) arc = false;
      for (auto p : pts)
        for (LineId l : plane.lines_through_point(p)) o[l.id] = 0;
      if (arc) ++hits[w];
    }
  });

  SampleReport rep;
  rep.q = plane.q();
  rep.m = m;
  rep.trials = trials;
  rep.seed = seed;
  for (auto h : hits) rep.hits += h;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(rep.hits) / n;
  const double z = kWilsonZ95;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  rep.estimate = p;
  rep.wilson_low = std::max(0.0, centre - half);
  rep.wilson_high = std::min(1.0, centre + half);
  rep.wilson_sigma = half / z;
  rep.implied_lower_bound = Rational(binomial(n_points, m) * BigInt(static_cast<unsigned long>(rep.hits)),
                                     BigInt(static_cast<unsigned long>(trials)));
  rep.implied_lower_bound.canonicalize();
  return rep;
}

TheoremInstanceReport verify_theorem_instance(std::uint64_t q, const Rational& epsilon, std::uint64_t m,
                                              const TheoremInstanceOptions& options) {
  TheoremInstanceReport rep;
  rep.q = q;
  rep.epsilon = epsilon;
  rep.m = m;
  const PlaneIndex plane(make_field_of_order(static_cast<std::uint32_t>(q)));
  if (q <= kFullCensusMaxQ) {
    CensusOptions co;
    co.m_max = static_cast<std::uint32_t>(m);
    co.threads = options.threads;
    co.node_budget = options.node_budget;
    rep.census = enumerate_arcs(plane, co).at(m);
    rep.lower_asserted = true;
  } else {
    rep.census = sample_arc_fraction(plane, m, options.trials, options.seed, options.threads).as_record();
  }
  rep.lower = m <= q ? trivial_lower_bound(q, m) : BigInt(0);
  rep.upper = binomial((1 + epsilon) * Rational(BigInt(static_cast<unsigned long>(q))), m);
  rep.lower_holds = rep.lower <= rep.census.count;
  rep.below_upper = Rational(rep.census.count) <= rep.upper;
  rep.chain = theorem_bound_chain(q, epsilon, m, options.c_constant);
  return rep;
}

}  // namespace arcs
