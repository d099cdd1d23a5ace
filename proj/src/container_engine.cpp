#include "arcs/container_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "arcs/exact_real.hpp"
#include "arcs/rng.hpp"

namespace arcs {
namespace {

Rational from_u64(std::uint64_t v) { return Rational(BigInt(static_cast<unsigned long>(v))); }

std::vector<std::uint32_t> row_masks(const Graph& g, std::uint32_t limit) {
  const std::uint32_t n = g.vertex_count();
  if (n > limit) throw std::invalid_argument("graph too large for exhaustive enumeration (N = " + std::to_string(n) + ")");
  std::vector<std::uint32_t> rows(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](std::size_t u) { rows[v] |= 1U << u; });
  return rows;
}

Bitset mask_to_bitset(std::uint32_t mask, std::uint32_t n) {
  Bitset b(n);
  for (std::uint32_t v = 0; v < n; ++v)
    if ((mask >> v) & 1U) b.set(v);
  return b;
}

template <class Oracle>
KwTrace run_kw(const Graph& g, const ContainerParams& params, Oracle&& in_set) {
  KwTrace t;
  t.available = g.all_vertices();
  while (t.available.count() > params.R && t.fingerprint.vertices.size() < params.f) {
    const std::uint32_t v = max_degree_vertex(g, t.available);
    t.queried.push_back(v);
    ++t.fingerprint.steps_taken;
    if (in_set(v)) {
      t.fingerprint.vertices.push_back(v);
      t.available.reset(v);
      t.available -= g.neighbors(v);
    } else {
      t.available.reset(v);
    }
  }
  return t;
}

Rational slack(std::uint64_t edges, std::uint64_t size, const Rational& beta) {
  Rational s = from_u64(edges) - beta * from_u64(size < 2 ? 0 : size * (size - 1) / 2);
  s.canonicalize();
  return s;
}

}  // namespace

void validate(const ContainerParams& params, const Graph& g) {
  if (params.n_vertices != g.vertex_count())
    throw std::invalid_argument("ContainerParams: N = " + std::to_string(params.n_vertices) +
                                " but graph has " + std::to_string(g.vertex_count()) + " vertices");
  if (sgn(params.beta) < 0 || params.beta > 1) throw std::invalid_argument("ContainerParams: beta must lie in [0, 1]");
  if (params.R == 0) throw std::invalid_argument("ContainerParams: R must be positive");
}

bool exp_condition_holds(const ContainerParams& params) {
  if (params.R >= params.n_vertices) return true;
  const Rational exponent = params.beta * from_u64(params.f);
  return compare_exp(exponent, from_u64(params.n_vertices) / from_u64(params.R)) >= 0;
}

bool rational_condition_holds(const ContainerParams& params) {
  const Rational base = 1 - params.beta;
  Rational power;
  mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), params.f);
  mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), params.f);
  power.canonicalize();
  return power * from_u64(params.n_vertices) <= from_u64(params.R);
}

std::uint32_t max_degree_vertex(const Graph& g, const Bitset& available) {
  if (available.none()) throw std::invalid_argument("max_degree_vertex: empty vertex set");
  std::uint32_t best = 0;
  std::size_t best_deg = 0;
  bool first = true;
  available.for_each([&](std::size_t v) {
    const std::size_t d = g.neighbors(static_cast<std::uint32_t>(v)).intersect_count(available);
    if (first || d > best_deg) {
      best = static_cast<std::uint32_t>(v);
      best_deg = d;
      first = false;
    }
  });
  return best;
}

KwTrace kw_fingerprint_trace(const Graph& g, const Bitset& independent, const ContainerParams& params) {
  validate(params, g);
  if (!g.is_independent(independent)) throw std::invalid_argument("kw_fingerprint: I is not independent");
  return run_kw(g, params, [&](std::uint32_t v) { return independent.test(v); });
}

Fingerprint kw_fingerprint(const Graph& g, const Bitset& independent, const ContainerParams& params) {
  return kw_fingerprint_trace(g, independent, params).fingerprint;
}

KwTrace kw_container_trace(const Graph& g, const Fingerprint& fingerprint, const ContainerParams& params) {
  validate(params, g);
  Bitset s = g.no_vertices();
  for (auto v : fingerprint.vertices) s.set(v);
  if (!g.is_independent(s)) throw std::invalid_argument("kw_container: fingerprint is not independent");
  return run_kw(g, params, [&](std::uint32_t v) { return s.test(v); });
}

Container kw_container(const Graph& g, const Fingerprint& fingerprint, const ContainerParams& params) {
  KwTrace t = kw_container_trace(g, fingerprint, params);
  Container c{t.available, t.available};
  for (auto v : fingerprint.vertices) c.vertices.set(v);
  return c;
}

DensityProfile density_profile(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  const auto rows = row_masks(g, kExhaustiveDensityLimit + 4);
  DensityProfile p;
  p.min_edges.assign(n + 1, std::numeric_limits<std::uint64_t>::max());
  p.argmin.assign(n + 1, 0);
  p.min_edges[0] = 0;
  std::uint32_t mask = 0;
  std::uint64_t edges = 0;
  std::uint32_t size = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(i));
    const std::uint32_t bit = 1U << v;
    if (mask & bit) {
      mask ^= bit;
      edges -= static_cast<std::uint64_t>(std::popcount(rows[v] & mask));
      --size;
    } else {
      edges += static_cast<std::uint64_t>(std::popcount(rows[v] & mask));
      mask |= bit;
      ++size;
    }
    if (edges < p.min_edges[size] || (edges == p.min_edges[size] && mask < p.argmin[size])) {
      p.min_edges[size] = edges;
      p.argmin[size] = mask;
    }
  }
  return p;
}

LocalDensityResult check_local_density(const Graph& g, std::uint64_t R, const Rational& beta, std::uint64_t seed) {
  const std::uint32_t n = g.vertex_count();
  LocalDensityResult res;
  res.worst = g.no_vertices();
  res.worst_slack = 0;
  if (R > n) return res;

  bool have = false;
  auto consider = [&](const Bitset& u, std::uint64_t edges) {
    const Rational s = slack(edges, u.count(), beta);
    if (!have || s < res.worst_slack) {
      res.worst = u;
      res.worst_edges = edges;
      res.worst_slack = s;
      have = true;
    }
  };

  if (n <= kExhaustiveDensityLimit) {
    const DensityProfile p = density_profile(g);
    for (std::uint64_t u = R; u <= n; ++u) consider(mask_to_bitset(p.argmin[u], n), p.min_edges[u]);
  } else {
    res.exhaustive = false;
    // Greedy peeling: dropping the densest vertex gives sparse subsets.
    Bitset u = g.all_vertices();
    while (true) {
      consider(u, g.edges_within(u));
      if (u.count() <= R || u.none()) break;
      u.reset(max_degree_vertex(g, u));
    }
    CounterRng rng(seed, 0x64656e73ULL, n);
    for (int t = 0; t < 512; ++t) {
      const auto size = static_cast<std::uint32_t>(R + rng.below(n - R + 1));
      Bitset s = g.no_vertices();
      for (auto v : rng.subset(n, size)) s.set(v);
      consider(s, g.edges_within(s));
    }
  }
  res.holds = sgn(res.worst_slack) >= 0;
  return res;
}

namespace {

std::uint64_t count_rec(const std::vector<std::uint32_t>& rows, std::uint32_t cands, std::uint64_t need) {
  if (need == 0) return 1;
  if (static_cast<std::uint64_t>(std::popcount(cands)) < need) return 0;
  std::uint64_t total = 0;
  while (cands) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(cands));
    cands &= cands - 1;
    total += count_rec(rows, cands & ~rows[v], need - 1);
  }
  return total;
}

void enum_rec(const std::vector<std::uint32_t>& rows, std::uint32_t chosen, std::uint32_t cands, std::uint64_t size,
              std::optional<std::uint64_t> target, std::uint32_t n, const std::function<void(const Bitset&)>& fn) {
  if (!target || size == *target) fn(mask_to_bitset(chosen, n));
  if (target && (size == *target || static_cast<std::uint64_t>(std::popcount(cands)) < *target - size)) return;
  while (cands) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(cands));
    cands &= cands - 1;
    enum_rec(rows, chosen | (1U << v), cands & ~rows[v], size + 1, target, n, fn);
  }
}

}  // namespace

BigInt count_independent_sets_bruteforce(const Graph& g, std::uint64_t s, std::uint32_t max_n) {
  const auto rows = row_masks(g, std::min(max_n, kBruteForceLimit));
  const std::uint32_t n = g.vertex_count();
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  return BigInt(static_cast<unsigned long>(count_rec(rows, all, s)));
}

void for_each_independent_set(const Graph& g, std::optional<std::uint64_t> s,
                              const std::function<void(const Bitset&)>& fn) {
  const auto rows = row_masks(g, kBruteForceLimit);
  const std::uint32_t n = g.vertex_count();
  enum_rec(rows, 0, (1U << n) - 1, 0, s, n, fn);
}

std::string to_string(ContainerStatus s) {
  switch (s) {
    case ContainerStatus::kAssumptionsUnmet: return "assumptions_unmet";
    case ContainerStatus::kBoundHolds: return "bound_holds";
    case ContainerStatus::kBoundViolated: return "bound_violated";
  }
  return "unknown";
}

namespace {

struct EncodingCheck {
  bool fingerprint_ok = true;
  bool sound = true;
  bool replay_ok = true;
  std::size_t available = 0;
};

EncodingCheck check_encoding(const Graph& g, const Bitset& independent, const ContainerParams& params) {
  EncodingCheck c;
  const KwTrace forward = kw_fingerprint_trace(g, independent, params);
  const KwTrace replay = kw_container_trace(g, forward.fingerprint, params);
  Bitset container = replay.available;
  Bitset s = g.no_vertices();
  for (auto v : forward.fingerprint.vertices) {
    container.set(v);
    s.set(v);
  }
  c.fingerprint_ok = forward.fingerprint.vertices.size() <= params.f;
  c.sound = (independent - s).is_subset_of(replay.available) && independent.is_subset_of(container);
  c.replay_ok = forward.queried == replay.queried && forward.available == replay.available;
  c.available = replay.available.count();
  return c;
}

}  // namespace

ContainerReport verify_container_bound(const Graph& g, const ContainerParams& params, std::uint64_t seed) {
  validate(params, g);
  ContainerReport rep;
  rep.params = params;
  const LocalDensityResult density = check_local_density(g, params.R, params.beta, seed);
  rep.density_holds = density.holds;
  rep.density_exhaustive = density.exhaustive;
  rep.exp_condition = exp_condition_holds(params);
  rep.rational_condition = rational_condition_holds(params);
  rep.assumptions_met = rep.density_holds && rep.exp_condition;

  rep.bound_lhs = count_independent_sets_bruteforce(g, params.f + params.r);
  rep.bound_rhs = binomial(params.n_vertices, params.f) * binomial(params.R, params.r);

  for_each_independent_set(g, params.f + params.r, [&](const Bitset& independent) {
    ++rep.sets_checked;
    const EncodingCheck c = check_encoding(g, independent, params);
    if (!c.fingerprint_ok) ++rep.fingerprint_violations;
    if (!c.sound) ++rep.soundness_violations;
    if (!c.replay_ok) ++rep.replay_violations;
    if (rep.assumptions_met && c.available > params.R) ++rep.container_violations;
  });

  if (!rep.assumptions_met)
    rep.status = ContainerStatus::kAssumptionsUnmet;
  else
    rep.status = rep.bound_lhs <= rep.bound_rhs ? ContainerStatus::kBoundHolds : ContainerStatus::kBoundViolated;
  rep.violations = rep.fingerprint_violations + rep.container_violations + rep.soundness_violations +
                   rep.replay_violations + (rep.status == ContainerStatus::kBoundViolated ? 1 : 0);
  return rep;
}

SoundnessReport verify_encoding_soundness(const Graph& g, const ContainerParams& params) {
  validate(params, g);
  SoundnessReport rep;
  for_each_independent_set(g, std::nullopt, [&](const Bitset& independent) {
    ++rep.sets_checked;
    const EncodingCheck c = check_encoding(g, independent, params);
    if (!c.fingerprint_ok || !c.sound || !c.replay_ok) ++rep.violations;
  });
  return rep;
}

std::optional<std::uint64_t> least_admissible_f(std::uint32_t n, std::uint64_t R, const Rational& beta) {
  if (R >= n) return 0;
  if (sgn(beta) <= 0) return std::nullopt;
  const Rational target = from_u64(n) / from_u64(R);
  auto ok = [&](std::uint64_t f) { return compare_exp(beta * from_u64(f), target) >= 0; };
  const double estimate = std::log(static_cast<double>(n) / static_cast<double>(R)) / beta.get_d();
  auto f = static_cast<std::uint64_t>(std::max(0.0, std::floor(estimate)));
  while (f > 0 && ok(f - 1)) --f;
  while (!ok(f)) ++f;
  return f;
}

KwInstance make_kw_instance(std::uint32_t n, std::uint64_t seed, std::uint64_t index) {
  if (n < 2 || n > kExhaustiveDensityLimit) throw std::invalid_argument("make_kw_instance: need 2 <= N <= 22");
  CounterRng rng(seed, 0x6b770000ULL + n, index);
  const std::uint64_t num = 2 + rng.below(7);
  KwInstance inst{Graph::random(n, num, 10, rng), {}};
  const std::uint64_t r_lo = std::max<std::uint64_t>(2, n / 4);
  std::uint64_t R = r_lo + rng.below(n - r_lo + 1);

  const DensityProfile profile = density_profile(inst.graph);
  Rational beta = 1;
  for (std::uint64_t u = std::max<std::uint64_t>(R, 2); u <= n; ++u) {
    Rational d(BigInt(static_cast<unsigned long>(profile.min_edges[u])), BigInt(static_cast<unsigned long>(u * (u - 1) / 2)));
    d.canonicalize();
    beta = std::min(beta, d);
  }
  auto f = least_admissible_f(n, R, beta);
  if (!f) {
    R = n;
    f = 0;
  }
  inst.params = {n, beta, *f, rng.below(3), R};
  return inst;
}

}  // namespace arcs
