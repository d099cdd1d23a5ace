#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arcs/bitset.hpp"
#include "arcs/collinearity_graph.hpp"
#include "arcs/numeric.hpp"

namespace arcs {

struct ContainerParams {
  std::uint32_t n_vertices = 0;
  Rational beta;        // in [0, 1]
  std::uint64_t f = 0;  // fingerprint budget
  std::uint64_t r = 0;
  std::uint64_t R = 1;  // container threshold
};

/// Throws std::invalid_argument for beta outside [0, 1], R = 0, or a vertex
/// count that does not match the graph.
void validate(const ContainerParams& params, const Graph& g);

/// R >= e^{-beta f} N, decided exactly.
bool exp_condition_holds(const ContainerParams& params);
/// (1 - beta)^f N <= R in rationals. Implied by exp_condition_holds, and
/// sufficient for the run to end with at most R available vertices.
bool rational_condition_holds(const ContainerParams& params);

struct Fingerprint {
  std::vector<std::uint32_t> vertices;  // selection order
  std::uint64_t steps_taken = 0;
};

struct Container {
  Bitset vertices;   // S ∪ A_final
  Bitset available;  // A_final: the part that must hold I \ S
};

/// Full record of one run: which vertices were queried, in order.
struct KwTrace {
  Fingerprint fingerprint;
  Bitset available;
  std::vector<std::uint32_t> queried;
};

/// Vertex of maximum degree in G[A]; ties go to the smallest index.
/// Throws std::invalid_argument for empty A.
std::uint32_t max_degree_vertex(const Graph& g, const Bitset& available);

/// Kleitman–Winston selection run: while |A| > R and |S| < f, query the
/// maximum-degree vertex v of G[A]; if v ∈ I, add it to S and remove v and
/// its neighbours from A, otherwise remove v alone.
KwTrace kw_fingerprint_trace(const Graph& g, const Bitset& independent, const ContainerParams& params);
Fingerprint kw_fingerprint(const Graph& g, const Bitset& independent, const ContainerParams& params);

/// Replays the run with membership in S as the oracle.
KwTrace kw_container_trace(const Graph& g, const Fingerprint& fingerprint, const ContainerParams& params);
Container kw_container(const Graph& g, const Fingerprint& fingerprint, const ContainerParams& params);

struct LocalDensityResult {
  bool holds = true;
  bool exhaustive = true;
  Bitset worst;              // subset with the smallest e(U) - beta C(|U|, 2)
  std::uint64_t worst_edges = 0;
  Rational worst_slack;      // e(U) - beta C(|U|, 2) at `worst`
};

inline constexpr std::uint32_t kExhaustiveDensityLimit = 22;
inline constexpr std::uint32_t kBruteForceLimit = 26;

/// Minimum e(U) over |U| = u, for each u in [0, N]; exhaustive (Gray-code
/// sweep), so N <= kExhaustiveDensityLimit + 4.
struct DensityProfile {
  std::vector<std::uint64_t> min_edges;
  std::vector<std::uint32_t> argmin;  // bitmask attaining min_edges[u]
};
DensityProfile density_profile(const Graph& g);

/// Looks for U with |U| >= R and e(U) < beta C(|U|, 2). Exhaustive for
/// N <= kExhaustiveDensityLimit; above that a greedy peeling plus random
/// search that can refute but not certify.
LocalDensityResult check_local_density(const Graph& g, std::uint64_t R, const Rational& beta, std::uint64_t seed = 0);

/// Exact number of independent sets of size s by enumeration.
BigInt count_independent_sets_bruteforce(const Graph& g, std::uint64_t s, std::uint32_t max_n = kBruteForceLimit);

/// Calls fn(I) for every independent set of size s (or every size when
/// s is nullopt), in lexicographic order of sorted vertex lists.
void for_each_independent_set(const Graph& g, std::optional<std::uint64_t> s,
                              const std::function<void(const Bitset&)>& fn);

enum class ContainerStatus { kAssumptionsUnmet, kBoundHolds, kBoundViolated };
std::string to_string(ContainerStatus s);

struct ContainerReport {
  ContainerParams params;
  ContainerStatus status = ContainerStatus::kAssumptionsUnmet;
  bool density_holds = false;
  bool density_exhaustive = true;
  bool exp_condition = false;
  bool rational_condition = false;
  bool assumptions_met = false;
  BigInt bound_lhs;  // independent sets of size f + r
  BigInt bound_rhs;  // C(N, f) C(R, r)
  std::uint64_t sets_checked = 0;
  std::uint64_t fingerprint_violations = 0;  // |S| > f
  std::uint64_t container_violations = 0;    // |A_final| > R (assumptions met)
  std::uint64_t soundness_violations = 0;    // I \ S not inside the container
  std::uint64_t replay_violations = 0;       // replay queried a different sequence
  std::uint64_t violations = 0;              // all of the above plus a bound failure
};

ContainerReport verify_container_bound(const Graph& g, const ContainerParams& params, std::uint64_t seed = 0);

/// Per-set encoding checks over every independent set (any size): I \ S
/// inside the container, replay consistency, |S| <= f.
struct SoundnessReport {
  std::uint64_t sets_checked = 0;
  std::uint64_t violations = 0;
};
SoundnessReport verify_encoding_soundness(const Graph& g, const ContainerParams& params);

/// A random graph with parameters chosen so that both assumptions hold:
/// beta is the exact minimum density over |U| >= R and f is the least
/// value with R >= e^{-beta f} N.
struct KwInstance {
  Graph graph;
  ContainerParams params;
};
KwInstance make_kw_instance(std::uint32_t n, std::uint64_t seed, std::uint64_t index);

/// Smallest f with R >= e^{-beta f} N, if any (beta = 0 needs R >= N).
std::optional<std::uint64_t> least_admissible_f(std::uint32_t n, std::uint64_t R, const Rational& beta);

}  // namespace arcs
