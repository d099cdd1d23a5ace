#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcs/arc_tools.hpp"
#include "arcs/bound_chain.hpp"
#include "arcs/numeric.hpp"
#include "arcs/plane_geometry.hpp"

namespace arcs {

enum class CensusMethod { kExhaustive, kSampled };
std::string to_string(CensusMethod m);

/// N_m: the number of m-point arcs in AG(2, q).
struct CensusRecord {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  BigInt count;
  CensusMethod method = CensusMethod::kExhaustive;
  // Sampled records only.
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> ci_low;   // 95% Wilson bounds on the arc fraction
  std::optional<double> ci_high;
  double runtime_seconds = 0.0;
};

inline constexpr std::uint32_t kFullCensusMaxQ = 8;
inline constexpr std::uint64_t kDefaultNodeBudget = 4'000'000'000ULL;

struct CensusOptions {
  /// Largest arc size counted; defaults to q + 2. Required for q > 8.
  std::optional<std::uint32_t> m_max;
  unsigned threads = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Exact N_m for m = 0..m_max by depth-first search over increasing point
/// indices, tracking per-line occupancy and the set of points that would
/// complete a collinear triple. Work is split by first point; counts are
/// identical for every thread count. Throws std::runtime_error when the
/// search exceeds the node budget.
std::vector<CensusRecord> enumerate_arcs(const PlaneIndex& plane, const CensusOptions& options);

/// C(q, m), realised by the m-subsets of the parabola arc. Requires m <= q.
BigInt trivial_lower_bound(std::uint64_t q, std::uint64_t m);

struct SampleReport {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
  double wilson_sigma = 0.0;  // half-width / z
  Rational implied_lower_bound;  // hits * C(q^2, m) / trials

  CensusRecord as_record() const;
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

/// Fraction of uniform m-subsets that are arcs. Trial t draws from a
/// generator keyed by (seed, m, t), so the result is independent of thread
/// count.
SampleReport sample_arc_fraction(const PlaneIndex& plane, std::uint64_t m, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 1);

struct TheoremInstanceOptions {
  unsigned threads = 1;
  std::uint64_t trials = 100000;  // when N_m has to be sampled
  std::uint64_t seed = 0;
  std::optional<Rational> c_constant;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct TheoremInstanceReport {
  std::uint64_t q = 0;
  Rational epsilon;
  std::uint64_t m = 0;
  CensusRecord census;
  BigInt lower;          // C(q, m)
  Rational upper;        // C((1 + eps) q, m)
  bool lower_holds = false;
  bool lower_asserted = false;  // only exact counts are asserted
  bool below_upper = false;     // reported, not asserted
  BoundReport chain;
};

/// Compares N_m against C(q, m) and C((1 + eps) q, m). N_m is exact when
/// q <= 8 and sampled otherwise.
TheoremInstanceReport verify_theorem_instance(std::uint64_t q, const Rational& epsilon, std::uint64_t m,
                                              const TheoremInstanceOptions& options);

}  // namespace arcs
