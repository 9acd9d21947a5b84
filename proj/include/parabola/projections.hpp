#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parabola/exec.hpp"
#include "parabola/field.hpp"
#include "parabola/point_sets.hpp"
#include "parabola/poly.hpp"

namespace parabola {

/// A point (d) of the line at infinity: a finite slope or the vertical
/// direction (inf).
class Direction {
 public:
  static Direction slope(Elem d) { return Direction(false, d); }
  static Direction infinity() { return Direction(true, Elem{0}); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful for finite directions.
  Elem slope_value() const { return d_; }

  /// "inf" or the slope as a decimal.
  std::string to_string() const;

  /// Finite slopes by nu(d), then inf.
  friend auto operator<=>(const Direction& a, const Direction& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.d_ <=> b.d_;
  }
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Direction(bool inf, Elem d) : infinite_(inf), d_(d) {}

  bool infinite_;
  Elem d_;
};

/// All p + 1 directions in canonical order (0, 1, ..., p-1, inf).
std::vector<Direction> all_directions(std::uint32_t p);

/// counts[b] = |S ∩ {Y = dX + b}| for finite d, and |S ∩ {X + b = 0}| for
/// inf. Note the sign: for inf, index b refers to column -b.
struct ProjectionTable {
  Direction direction = Direction::infinity();
  std::vector<std::int64_t> counts;

  std::int64_t total() const;
  /// Sorted copy of counts.
  std::vector<std::int64_t> spectrum() const;
};

ProjectionTable projection(const ColumnIntervalSet& s, Direction d);
ProjectionTable projection(const BitPointSet& s, Direction d);

/// Tables for every direction, in canonical direction order.
std::vector<ProjectionTable> projection_all(const ColumnIntervalSet& s, Exec exec = Exec::parallel);
std::vector<ProjectionTable> projection_all(const BitPointSet& s, Exec exec = Exec::parallel);

/// t = (beta - (d+1)/2) (d-1) / (2 alpha), so that pr_d(b) = pr_1(b - t) for
/// the set below f. Throws ZeroSlope for d = 0.
Elem shift_offset(const PrimeModulus& m, const QuadraticPoly& f, Elem d);

struct ShiftFailure {
  Elem d;
  Elem b;
  std::int64_t expected = 0;  // pr_1(b - t)
  std::int64_t actual = 0;    // pr_d(b)
};

struct ShiftCheck {
  bool ok = true;
  std::int64_t cases = 0;
  std::optional<ShiftFailure> failure;  // first in (d, b) order
};

/// Exhaustive check of the shift identity over every d != 0 and every b.
ShiftCheck verify_shift(const PrimeModulus& m, const QuadraticPoly& f, Exec exec = Exec::parallel);

/// -chi((beta-1)^2 + 4 alpha (b + 1 - gamma)), which equals
/// pr_1(b+1) - pr_1(b) for the set below f.
int projection_step(const PrimeModulus& m, const QuadraticPoly& f, Elem b);

struct ImageInterval {
  std::int64_t min = 0;
  std::int64_t max = 0;
  bool contiguous = true;

  /// max - min: one less than the number of attained values when contiguous.
  std::int64_t length() const { return max - min; }
};

ImageInterval image_interval(const ProjectionTable& t);

struct DirectionClass {
  Direction direction = Direction::infinity();
  bool special = false;
  std::vector<std::int64_t> spectrum;  // sorted counts
};

/// Equidistributed iff every line meets S in floor(|S|/p) or ceil(|S|/p).
DirectionClass classify_direction(const ProjectionTable& t, std::int64_t set_size);
DirectionClass classify_direction(const ColumnIntervalSet& s, Direction d);

std::vector<Direction> special_directions(const ColumnIntervalSet& s, Exec exec = Exec::parallel);

}  // namespace parabola
