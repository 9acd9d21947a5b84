#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "parabola/field.hpp"
#include "parabola/point_sets.hpp"
#include "parabola/projections.hpp"

namespace parabola {

/// Point of PG(2,p) in canonical homogeneous coordinates: z = 1 for affine
/// points, otherwise (1, d, 0) for slope d and (0, 1, 0) for inf.
struct ProjectivePoint {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 1;

  static ProjectivePoint affine(AffinePoint a) { return {a.x, a.y, 1}; }
  static ProjectivePoint at_infinity(Direction d) {
    return d.is_infinite() ? ProjectivePoint{0, 1, 0}
                           : ProjectivePoint{1, static_cast<std::uint32_t>(d.slope_value().value()), 0};
  }

  bool is_affine() const { return z != 0; }
  std::string to_string() const;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Scales (x, y, z) != 0 to the canonical representative above.
ProjectivePoint canonical_point(const PrimeModulus& m, std::uint64_t x, std::uint64_t y,
                                std::uint64_t z);

/// Element of PGL(3,p): an invertible 3x3 matrix acting on column vectors,
/// stored scaled so the first nonzero entry in row-major order is 1.
class Projectivity {
 public:
  using Entries = std::array<std::uint32_t, 9>;

  /// Canonicalises. Throws SingularMatrix when det = 0.
  static Projectivity from_matrix(const PrimeModulus& m, const std::array<std::int64_t, 9>& a);
  static Projectivity identity();
  /// (X, Y, Z) -> (-X, Y, Z).
  static Projectivity reflection(const PrimeModulus& m);
  /// (X, Y, Z) -> (aX + bZ, Y, Z). Throws SingularMatrix when a = 0.
  static Projectivity horizontal_affinity(const PrimeModulus& m, Elem a, Elem b);

  const Entries& entries() const { return e_; }

  ProjectivePoint apply(const PrimeModulus& m, ProjectivePoint pt) const;
  /// Image of an affine point; empty when it lands on the line at infinity.
  std::optional<AffinePoint> apply(const PrimeModulus& m, AffinePoint pt) const;

  /// (this ∘ other)(P) = this(other(P)).
  Projectivity compose(const PrimeModulus& m, const Projectivity& other) const;
  Projectivity inverse(const PrimeModulus& m) const;

  /// True iff the map has the form (aX + bZ, Y, Z) up to scalar.
  bool is_horizontal_affinity() const;

  std::string to_string() const;

  friend auto operator<=>(const Projectivity&, const Projectivity&) = default;

 private:
  explicit Projectivity(const Entries& e) : e_(e) {}

  Entries e_;
};

/// Determinant of a 3x3 matrix over F_p.
Elem determinant(const PrimeModulus& m, const Projectivity::Entries& a);

/// (x, y) -> A (x, y) + t with det A != 0.
struct AffineMap {
  std::array<std::uint32_t, 4> a{1, 0, 0, 1};  // row-major 2x2
  std::array<std::uint32_t, 2> t{0, 0};

  AffinePoint apply(std::uint32_t p, AffinePoint pt) const;
  Projectivity to_projectivity(const PrimeModulus& m) const;
  std::string to_string() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Image of s under M; empty if some point of s maps onto the line at infinity.
/// Throws SingularMatrix via Projectivity construction only.
std::optional<BitPointSet> apply_projectivity(const PrimeModulus& m, const BitPointSet& s,
                                              const Projectivity& M);

BitPointSet apply_affine(const BitPointSet& s, const AffineMap& f);

}  // namespace parabola
