#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arcs/bitset.hpp"
#include "arcs/finite_field.hpp"

namespace arcs {

/// A point of AG(2, q). `index` = x.index * q + y.index.
struct Point {
  FieldElement x;
  FieldElement y;
  std::uint32_t index = 0;
  std::uint32_t q = 0;  // order of the field the coordinates live in
  friend bool operator==(const Point&, const Point&) = default;
};

struct LineId {
  std::uint32_t id = 0;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

/// y = slope * x + intercept, or x = intercept when vertical.
struct LineForm {
  bool vertical = false;
  FieldElement slope;
  FieldElement intercept;
  friend bool operator==(const LineForm&, const LineForm&) = default;
};

inline constexpr std::uint32_t kDefaultMaxPlaneOrder = 64;

/// Incidence tables of the affine plane over a fixed field.
///
/// Line ids: y = s x + c gets s * q + c (slope-major), the vertical x = c
/// gets q^2 + c. Every line stores both its sorted point list and a q^2-bit
/// membership mask.
class PlaneIndex {
 public:
  explicit PlaneIndex(FieldSpec field, std::uint32_t max_order = kDefaultMaxPlaneOrder);

  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t point_count() const noexcept { return q_ * q_; }
  std::uint32_t line_count() const noexcept { return q_ * q_ + q_; }

  Point point(std::uint32_t index) const;
  Point point(FieldElement x, FieldElement y) const;

  LineForm line_form(LineId line) const;
  LineId line_id(const LineForm& form) const;

  const Bitset& points_on_line(LineId line) const;
  std::span<const std::uint32_t> line_points(LineId line) const;
  /// The q + 1 lines through a point, ascending by id (vertical last).
  std::span<const LineId> lines_through_point(std::uint32_t point_index) const;
  /// The unique line through two distinct points.
  LineId line_of_pair(std::uint32_t a, std::uint32_t b) const;

  bool contains(const Point& p) const noexcept { return p.q == q_ && p.index < point_count(); }

 private:
  void check_line(LineId line) const;
  void check_point(std::uint32_t index) const;

  FieldSpec field_;
  std::uint32_t q_;
  std::vector<Bitset> line_masks_;
  std::vector<std::uint32_t> line_points_;  // q entries per line
  std::vector<LineId> point_lines_;         // q + 1 entries per point
};

PlaneIndex build_plane_index(const FieldSpec& field, std::uint32_t max_order = kDefaultMaxPlaneOrder);

/// Exhaustive check of the incidence axioms of a built plane.
struct IncidenceCheck {
  std::uint64_t points = 0;
  std::uint64_t lines = 0;
  std::uint64_t incidences = 0;
  bool line_count_ok = false;        // q^2 + q
  bool points_per_line_ok = false;   // q each
  bool lines_per_point_ok = false;   // q + 1 each
  bool unique_line_per_pair_ok = false;
  bool all_ok() const { return line_count_ok && points_per_line_ok && lines_per_point_ok && unique_line_per_pair_ok; }
};
IncidenceCheck check_incidence(const PlaneIndex& plane);

/// Zero determinant of (b - a, c - a). Repeated points count as collinear.
/// Throws std::invalid_argument when the points are not all over `field`.
bool collinear(const FieldSpec& field, const Point& a, const Point& b, const Point& c);

/// Throws std::invalid_argument for a == b.
LineForm line_through(const FieldSpec& field, const Point& a, const Point& b);

}  // namespace arcs
