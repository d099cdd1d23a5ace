#include "arcs/plane_geometry.hpp"

#include <stdexcept>
#include <algorithm>
#include <string>

namespace arcs {

PlaneIndex::PlaneIndex(FieldSpec field, std::uint32_t max_order) : field_(std::move(field)), q_(field_.q()) {
  if (q_ > max_order)
    throw std::invalid_argument("plane over F_" + std::to_string(q_) + " exceeds plane limit " +
                                std::to_string(max_order));
  const std::uint32_t n_points = point_count();
  const std::uint32_t n_lines = line_count();
  line_masks_.assign(n_lines, Bitset(n_points));
  line_points_.resize(static_cast<std::size_t>(n_lines) * q_);
  point_lines_.resize(static_cast<std::size_t>(n_points) * (q_ + 1));

  for (std::uint32_t line = 0; line < n_lines; ++line) {
    const LineForm form = line_form({line});
    for (std::uint32_t t = 0; t < q_; ++t) {
      std::uint32_t pt;
      if (form.vertical) {
        pt = form.intercept.index * q_ + t;
      } else {
        const FieldElement y = field_.add(field_.mul(form.slope, {t}), form.intercept);
        pt = t * q_ + y.index;
      }
      line_points_[static_cast<std::size_t>(line) * q_ + t] = pt;
      line_masks_[line].set(pt);
    }
  }
  for (std::uint32_t pt = 0; pt < n_points; ++pt) {
    const FieldElement x{pt / q_}, y{pt % q_};
    LineId* out = &point_lines_[static_cast<std::size_t>(pt) * (q_ + 1)];
    for (std::uint32_t s = 0; s < q_; ++s) {
      const FieldElement c = field_.sub(y, field_.mul({s}, x));
      out[s] = {s * q_ + c.index};
    }
    out[q_] = {q_ * q_ + x.index};
  }
}

void PlaneIndex::check_line(LineId line) const {
  if (line.id >= line_count()) throw std::out_of_range("line id " + std::to_string(line.id) + " out of range");
}

void PlaneIndex::check_point(std::uint32_t index) const {
  if (index >= point_count()) throw std::out_of_range("point index " + std::to_string(index) + " out of range");
}

Point PlaneIndex::point(std::uint32_t index) const {
  check_point(index);
  return {{index / q_}, {index % q_}, index, q_};
}

Point PlaneIndex::point(FieldElement x, FieldElement y) const {
  if (x.index >= q_ || y.index >= q_) throw std::out_of_range("coordinate outside field");
  return {x, y, x.index * q_ + y.index, q_};
}

LineForm PlaneIndex::line_form(LineId line) const {
  check_line(line);
  if (line.id >= q_ * q_) return {true, {0}, {line.id - q_ * q_}};
  return {false, {line.id / q_}, {line.id % q_}};
}

LineId PlaneIndex::line_id(const LineForm& form) const {
  if (form.intercept.index >= q_ || form.slope.index >= q_) throw std::out_of_range("line form outside field");
  return form.vertical ? LineId{q_ * q_ + form.intercept.index} : LineId{form.slope.index * q_ + form.intercept.index};
}

const Bitset& PlaneIndex::points_on_line(LineId line) const {
  check_line(line);
  return line_masks_[line.id];
}

std::span<const std::uint32_t> PlaneIndex::line_points(LineId line) const {
  check_line(line);
  return {line_points_.data() + static_cast<std::size_t>(line.id) * q_, q_};
}

std::span<const LineId> PlaneIndex::lines_through_point(std::uint32_t point_index) const {
  check_point(point_index);
  return {point_lines_.data() + static_cast<std::size_t>(point_index) * (q_ + 1), q_ + 1};
}

LineId PlaneIndex::line_of_pair(std::uint32_t a, std::uint32_t b) const {
  return line_id(line_through(field_, point(a), point(b)));
}

PlaneIndex build_plane_index(const FieldSpec& field, std::uint32_t max_order) { return PlaneIndex(field, max_order); }

IncidenceCheck check_incidence(const PlaneIndex& plane) {
  const std::uint64_t q = plane.q();
  const std::uint64_t n = plane.point_count();
  IncidenceCheck c;
  c.points = n;
  c.lines = plane.line_count();
  c.line_count_ok = c.lines == q * q + q;

  std::vector<std::uint32_t> per_point(n, 0);
  c.points_per_line_ok = true;
  for (std::uint32_t l = 0; l < c.lines; ++l) {
    const auto pts = plane.line_points({l});
    const Bitset& mask = plane.points_on_line({l});
    if (pts.size() != q || mask.count() != q) c.points_per_line_ok = false;
    for (auto pt : pts) {
      ++per_point[pt];
      if (!mask.test(pt)) c.points_per_line_ok = false;
    }
    c.incidences += pts.size();
  }
  c.lines_per_point_ok = true;
  for (std::uint32_t pt = 0; pt < n; ++pt) {
    if (per_point[pt] != q + 1) c.lines_per_point_ok = false;
    for (LineId l : plane.lines_through_point(pt))
      if (!plane.points_on_line(l).test(pt)) c.lines_per_point_ok = false;
  }

  // Every pair covered by exactly one line, and line_of_pair names it.
  std::vector<std::uint8_t> covered(n * n, 0);
  bool ok = true;
  for (std::uint32_t l = 0; l < c.lines; ++l) {
    const auto pts = plane.line_points({l});
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto& slot = covered[std::min(pts[i], pts[j]) * n + std::max(pts[i], pts[j])];
        if (slot++ != 0) ok = false;
      }
  }
  for (std::uint32_t a = 0; a < n && ok; ++a)
    for (std::uint32_t b = a + 1; b < n && ok; ++b) {
      if (covered[a * n + b] != 1) ok = false;
      else if (!plane.points_on_line(plane.line_of_pair(a, b)).test(a) ||
               !plane.points_on_line(plane.line_of_pair(a, b)).test(b))
        ok = false;
    }
  c.unique_line_per_pair_ok = ok;
  return c;
}

namespace {

void require_field(const FieldSpec& field, const Point& p) {
  if (p.q != field.q() || p.x.index >= field.q() || p.y.index >= field.q())
    throw std::invalid_argument("point is not over F_" + std::to_string(field.q()));
}

}  // namespace

bool collinear(const FieldSpec& field, const Point& a, const Point& b, const Point& c) {
  require_field(field, a);
  require_field(field, b);
  require_field(field, c);
  const FieldElement lhs = field.mul(field.sub(b.x, a.x), field.sub(c.y, a.y));
  const FieldElement rhs = field.mul(field.sub(b.y, a.y), field.sub(c.x, a.x));
  return lhs == rhs;
}

LineForm line_through(const FieldSpec& field, const Point& a, const Point& b) {
  require_field(field, a);
  require_field(field, b);
  if (a.x == b.x && a.y == b.y) throw std::invalid_argument("line_through: points coincide");
  if (a.x == b.x) return {true, {0}, a.x};
  const FieldElement slope = field.div(field.sub(b.y, a.y), field.sub(b.x, a.x));
  const FieldElement intercept = field.sub(a.y, field.mul(slope, a.x));
  return {false, slope, intercept};
}

}  // namespace arcs
