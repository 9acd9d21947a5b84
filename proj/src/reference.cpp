#include "parabola/reference.hpp"

#include <algorithm>
#include <cstdlib>

namespace parabola::reference {

ProjectionTable projection_naive(const ColumnIntervalSet& s, Direction d) {
  const std::uint32_t p = s.p();
  ProjectionTable t{d, std::vector<std::int64_t>(p, 0)};
  for (std::uint32_t b = 0; b < p; ++b) {
    if (d.is_infinite()) {
      // X + b = 0
      const std::uint32_t x = (p - b) % p;
      for (std::uint32_t y = 0; y < p; ++y) t.counts[b] += s.contains(x, y) ? 1 : 0;
    } else {
      // Y = dX + b
      for (std::uint32_t x = 0; x < p; ++x) {
        const auto y = static_cast<std::uint32_t>((d.slope_value().value() * x + b) % p);
        t.counts[b] += s.contains(x, y) ? 1 : 0;
      }
    }
  }
  return t;
}

std::int64_t max_abs_interval_naive(const PrimeModulus& m) {
  std::int64_t best = 0;
  for (std::uint64_t a = 0; a < m.p(); ++a) {
    std::int64_t sum = 0;
    for (std::uint64_t b = a; b < m.p(); ++b) {
      sum += m.chi(Elem{b});
      best = std::max<std::int64_t>(best, std::llabs(sum));
    }
  }
  return best;
}

std::vector<Projectivity> stabilizer_naive(const PrimeModulus& m, const BitPointSet& s) {
  const std::uint32_t p = s.p();
  const auto pts = s.points();
  std::vector<Projectivity> out;
  Projectivity::Entries e{};
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 8; i >= 0; --i) {
      e[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    int lead = 0;
    while (lead < 9 && e[lead] == 0) ++lead;
    if (lead == 9 || e[lead] != 1) continue;
    if (determinant(m, e).value() == 0) continue;
    const auto M = Projectivity::from_matrix(
        m, {e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7], e[8]});
    const auto img = apply_projectivity(m, s, M);
    if (img && *img == s) out.push_back(M);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AffineMap> isomorphic_affine_naive(const BitPointSet& a, const BitPointSet& b) {
  const std::uint32_t p = a.p();
  if (a.size() != b.size()) return std::nullopt;
  AffineMap f;
  for (std::uint32_t a0 = 0; a0 < p; ++a0)
    for (std::uint32_t a1 = 0; a1 < p; ++a1)
      for (std::uint32_t a2 = 0; a2 < p; ++a2)
        for (std::uint32_t a3 = 0; a3 < p; ++a3) {
          if ((std::uint64_t{a0} * a3 + std::uint64_t{p - a1} * a2) % p == 0) continue;
          for (std::uint32_t t0 = 0; t0 < p; ++t0)
            for (std::uint32_t t1 = 0; t1 < p; ++t1) {
              f.a = {a0, a1, a2, a3};
              f.t = {t0, t1};
              if (apply_affine(a, f) == b) return f;
            }
        }
  return std::nullopt;
}

}  // namespace parabola::reference
