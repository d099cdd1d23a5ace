#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "arcs/bitset.hpp"
#include "arcs/numeric.hpp"
#include "arcs/plane_geometry.hpp"

namespace arcs {

/// A subset of the q^2 points of a plane, with a cached cardinality.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::uint32_t universe) : bits_(universe) {}
  explicit PointSet(const PlaneIndex& plane) : bits_(plane.point_count()) {}
  PointSet(std::uint32_t universe, std::span<const std::uint32_t> indices);
  PointSet(std::uint32_t universe, std::initializer_list<std::uint32_t> indices)
      : PointSet(universe, std::span<const std::uint32_t>(indices.begin(), indices.size())) {}
  explicit PointSet(Bitset bits) : bits_(std::move(bits)), size_(bits_.count()) {}

  static PointSet full(const PlaneIndex& plane) { return PointSet(Bitset::full(plane.point_count())); }

  std::uint32_t universe() const noexcept { return static_cast<std::uint32_t>(bits_.size()); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(std::uint32_t i) const { return bits_.test(i); }
  const Bitset& bits() const noexcept { return bits_; }

  void insert(std::uint32_t i) {
    if (!bits_.test(i)) {
      bits_.set(i);
      ++size_;
    }
  }
  void erase(std::uint32_t i) {
    if (bits_.test(i)) {
      bits_.reset(i);
      --size_;
    }
  }

  std::vector<std::uint32_t> indices() const;

  bool disjoint(const PointSet& o) const { return !bits_.intersects(o.bits_); }
  bool subset_of(const PointSet& o) const { return bits_.is_subset_of(o.bits_); }
  PointSet complement() const { return PointSet(Bitset::full(bits_.size()) - bits_); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }

 private:
  Bitset bits_;
  std::size_t size_ = 0;
};

/// The parabola {(x, x^2)}: an arc of size q.
PointSet parabola_arc(const PlaneIndex& plane);

/// |L ∩ P| for every line L, indexed by line id.
std::vector<std::uint32_t> line_occupancy(const PointSet& points, const PlaneIndex& plane);

/// No line meets P in three or more points.
bool is_arc(const PointSet& points, const PlaneIndex& plane);

/// Number of collinear triples inside P: sum over lines of C(|L ∩ P|, 3).
BigInt count_collinear_triples(const PointSet& points, const PlaneIndex& plane);

/// Unordered pairs {x, y} ⊆ P \ {v} collinear with v. Requires v ∈ P.
std::uint64_t triples_through_point(const PointSet& points, std::uint32_t v, const PlaneIndex& plane);

/// n = k(q+1) + x + 1 with 0 <= x < q + 1.
struct SupersatDecomposition {
  std::uint64_t k = 0;
  std::uint64_t x = 0;
  std::uint64_t n = 0;
  friend bool operator==(const SupersatDecomposition&, const SupersatDecomposition&) = default;
};

struct SupersatBound {
  SupersatDecomposition decomposition;
  std::uint64_t bound = 0;  // C(k,2)(q+1) + kx
};

/// Per-point lower bound on collinear triples for |P| = n, using the
/// largest admissible k. Requires 1 <= n <= q^2.
SupersatBound supersat_bound(std::uint64_t q, std::uint64_t n);

/// Same bound for an explicit decomposition; requires 0 <= x < q + 1 and
/// n >= k(q+1) + x + 1.
SupersatBound supersat_bound(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t x);

struct SupersatOptions {
  /// Random subsets drawn per size n in [1, q^2]; ignored when exhaustive.
  std::uint64_t trials_per_size = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Enumerate every subset. Defaults to true when q^2 <= 16.
  std::optional<bool> exhaustive;
  /// Explicit (k, x) to test instead of the maximal decomposition; sizes
  /// below k(q+1) + x + 1 are skipped.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> decomposition;
};

struct SupersatReport {
  std::uint64_t q = 0;
  bool exhaustive = false;
  std::uint64_t trials = 0;        // subsets examined
  std::uint64_t point_checks = 0;  // (P, v) pairs examined
  std::uint64_t violations = 0;
  std::int64_t min_slack = 0;      // min over checks of count - bound
  std::uint64_t worst_size = 0;    // |P| attaining min_slack
};

/// Checks triples_through_point(P, v) >= supersat_bound(q, |P|) for every
/// v in each examined P.
SupersatReport verify_supersaturation(const PlaneIndex& plane, const SupersatOptions& options);

}  // namespace arcs
