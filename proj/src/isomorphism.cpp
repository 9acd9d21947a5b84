#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "parabola/symmetry.hpp"
#include "search_util.hpp"

namespace parabola {

std::vector<std::vector<std::int64_t>> direction_spectra_invariant(const BitPointSet& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& t : projection_all(s, Exec::serial)) out.push_back(t.spectrum());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AffineMap> isomorphic_affine(const PrimeModulus& m, const BitPointSet& a,
                                           const BitPointSet& b, const SearchOptions& opts) {
  const std::uint32_t p = a.p();
  if (b.p() != p || m.p() != p) throw std::invalid_argument("point sets live in different planes");
  detail::check_cap(p, opts.max_p, "AGL(2,p)");
  if (a == b) return AffineMap{};
  if (a.size() != b.size()) return std::nullopt;
  if (direction_spectra_invariant(a) != direction_spectra_invariant(b)) return std::nullopt;

  const auto pa = a.points();
  const auto pb = b.points();
  const auto probes = select_probes(pa, std::max<std::size_t>(opts.probe_count, 1), opts.seed);
  const AffinePoint anchor = probes.front();

  // Outer index enumerates the first row of A; the lowest index with a hit
  // wins, so the answer does not depend on scheduling.
  const auto outer_n = static_cast<std::int64_t>(p) * p;
  std::vector<std::optional<AffineMap>> hit(static_cast<std::size_t>(outer_n));
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};

  auto maps_into_b = [&](const AffineMap& f, const std::vector<AffinePoint>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](AffinePoint pt) {
      const AffinePoint img = f.apply(p, pt);
      return b.contains(img.x, img.y);
    });
  };

  auto search_outer = [&](std::int64_t o) {
    if (o > best.load(std::memory_order_relaxed)) return;
    const auto a0 = static_cast<std::uint32_t>(o / p);
    const auto a1 = static_cast<std::uint32_t>(o % p);
    for (std::uint32_t a2 = 0; a2 < p; ++a2) {
      for (std::uint32_t a3 = 0; a3 < p; ++a3) {
        if ((std::uint64_t{a0} * a3 + std::uint64_t{p - a1} * a2) % p == 0) continue;
        AffineMap f;
        f.a = {a0, a1, a2, a3};
        const AffinePoint lin = f.apply(p, anchor);
        for (const AffinePoint& q : pb) {
          f.t = {(q.x + p - lin.x) % p, (q.y + p - lin.y) % p};
          if (maps_into_b(f, probes) && maps_into_b(f, pa)) {
            hit[static_cast<std::size_t>(o)] = f;
            std::int64_t cur = best.load();
            while (o < cur && !best.compare_exchange_weak(cur, o)) {
            }
            return;
          }
        }
      }
    }
  };

  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t o = 0; o < outer_n; ++o) search_outer(o);
  } else {
    for (std::int64_t o = 0; o < outer_n; ++o) {
      search_outer(o);
      if (hit[static_cast<std::size_t>(o)]) break;
    }
  }

  for (const auto& h : hit) {
    if (h) return h;
  }
  return std::nullopt;
}

}  // namespace parabola
