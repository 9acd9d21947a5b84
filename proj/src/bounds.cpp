#include "parabola/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace parabola {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// libm log is not correctly rounded; 4 ulps is well beyond glibc's error.
double down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
  return x;
}

double up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
  return x;
}

Enclosure sqrt_enclosure(std::uint64_t p) {
  const double s = std::sqrt(static_cast<double>(p));
  return {down(s, 2), up(s, 2)};
}

}  // namespace

Enclosure sqrt_p_ln_p(std::uint64_t p) {
  const Enclosure s = sqrt_enclosure(p);
  const double l = std::log(static_cast<double>(p));
  const Enclosure ln{down(l, 4), up(l, 4)};
  return {down(s.lo * ln.lo), up(s.hi * ln.hi)};
}

Enclosure sqrt_p_over_two_pi(std::uint64_t p) {
  const Enclosure s = sqrt_enclosure(p);
  const double two_pi = 2.0 * std::numbers::pi;
  return {down(s.lo / up(two_pi, 2)), up(s.hi / down(two_pi, 2))};
}

Enclosure scaled(const Enclosure& e, std::uint64_t k) {
  const auto kd = static_cast<double>(k);
  return {down(e.lo * kd), up(e.hi * kd)};
}

std::string format_bound(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace parabola
