#pragma once

#include <cstdint>
#include <string>

namespace parabola {

/// Closed interval [lo, hi] guaranteed to contain an irrational bound such as
/// sqrt(p) ln(p). Every floating step widens the interval outward, so
/// comparisons against it never certify a false inequality.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
};

Enclosure sqrt_p_ln_p(std::uint64_t p);
Enclosure sqrt_p_over_two_pi(std::uint64_t p);

/// k * e for a non-negative integer k.
Enclosure scaled(const Enclosure& e, std::uint64_t k);

/// lhs <= bound holds for certain.
inline bool certainly_le(double lhs, const Enclosure& bound) { return lhs <= bound.lo; }
/// lhs >= bound holds for certain.
inline bool certainly_ge(double lhs, const Enclosure& bound) { return lhs >= bound.hi; }

/// 12 significant digits, for reports.
std::string format_bound(double v);

}  // namespace parabola
