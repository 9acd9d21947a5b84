#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parabola/field.hpp"
#include "parabola/poly.hpp"

namespace parabola {

/// y < f(x), y <= f(x), y > f(x), y >= f(x).
enum class Variant { lt, le, gt, ge };

const char* to_string(Variant v);
/// Accepts "lt", "le", "gt", "ge". Throws std::invalid_argument otherwise.
Variant parse_variant(const std::string& s);

struct AffinePoint {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

class BitPointSet;

/// How a column set was built; kept for serialization and reports.
struct Construction {
  enum class Kind { parabola, diagonal };
  Kind kind = Kind::parabola;
  std::optional<QuadraticPoly> poly;
  Variant variant = Variant::lt;
};

/// Point set whose intersection with each vertical line X = x is the
/// nu-interval [lo[x], hi[x]). This is exact for every set in the family,
/// and O(p) in memory.
class ColumnIntervalSet {
 public:
  /// Throws std::invalid_argument unless 0 <= lo[x] <= hi[x] <= p for all x.
  ColumnIntervalSet(std::uint32_t p, std::vector<std::uint32_t> lo, std::vector<std::uint32_t> hi,
                    std::optional<Construction> how = std::nullopt);

  std::uint32_t p() const { return p_; }
  const std::vector<std::uint32_t>& lo() const { return lo_; }
  const std::vector<std::uint32_t>& hi() const { return hi_; }
  std::uint32_t height(std::uint32_t x) const { return hi_[x] - lo_[x]; }
  const std::optional<Construction>& construction() const { return how_; }

  std::int64_t size() const;
  bool contains(std::uint32_t x, std::uint32_t y) const { return lo_[x] <= y && y < hi_[x]; }

  BitPointSet to_bitset() const;
  BitPointSet complement() const;

  friend bool operator==(const ColumnIntervalSet& a, const ColumnIntervalSet& b) {
    return a.p_ == b.p_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> lo_;
  std::vector<std::uint32_t> hi_;
  std::optional<Construction> how_;
};

/// Arbitrary subset of AG(2,p), one bit per point, row-major in x.
class BitPointSet {
 public:
  explicit BitPointSet(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  bool contains(std::uint32_t x, std::uint32_t y) const {
    const std::size_t i = index(x, y);
    return (words_[i >> 6] >> (i & 63U)) & 1U;
  }
  void insert(std::uint32_t x, std::uint32_t y) {
    const std::size_t i = index(x, y);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63U);
  }

  std::int64_t size() const;
  BitPointSet complement() const;
  /// All points in ascending (x, y) order.
  std::vector<AffinePoint> points() const;

  /// Back to column intervals when every column is a single nu-interval.
  std::optional<ColumnIntervalSet> to_column_intervals() const;

  friend bool operator==(const BitPointSet&, const BitPointSet&) = default;

 private:
  std::size_t index(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::size_t>(x) * p_ + y;
  }

  std::uint32_t p_;
  std::vector<std::uint64_t> words_;
};

/// Point sets are indexed by 32-bit coordinates and may use p^2 bits.
inline constexpr std::uint64_t kMaxPointSetPrime = 1U << 15;

/// Throws ZeroLeadingCoefficient via QuadraticPoly, std::invalid_argument if
/// p exceeds kMaxPointSetPrime.
ColumnIntervalSet build_parabola_set(const PrimeModulus& m, const QuadraticPoly& f, Variant v);

/// {(x, y) : y < x}.
ColumnIntervalSet build_diagonal_set(const PrimeModulus& m);

/// All of AG(2,p).
ColumnIntervalSet build_full_plane(const PrimeModulus& m);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// 1, 2 or 4/3 according to p mod 8.
Rational size_constant(std::uint64_t p);

struct SizeReport {
  std::int64_t size = 0;
  std::int64_t binomial = 0;  // p(p-1)/2
  bool divisible = false;
  bool within_bound = false;
  Rational c_p;
};

/// Size of the set below f and the divisibility and deviation bound.
SizeReport verify_size_theorem(const PrimeModulus& m, const QuadraticPoly& f);

/// |S| for the set below alpha X^2 + gamma, computed from the square sum
/// rather than by summing columns. Throws BetaNonzero when beta != 0.
std::int64_t size_via_decomposition(const PrimeModulus& m, const QuadraticPoly& f);

nlohmann::ordered_json to_json(const ColumnIntervalSet& s);
/// Rebuilds from the construction fields and checks the stored columns.
/// Throws std::invalid_argument on any mismatch.
ColumnIntervalSet column_set_from_json(const nlohmann::ordered_json& j);

}  // namespace parabola
