#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "parabola/errors.hpp"
#include "parabola/symmetry.hpp"
#include "search_util.hpp"

namespace parabola {

std::uint64_t search_cap_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("PARABOLA_MAX_SEARCH_P");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || cap == 0) return fallback;
  return cap;
}

SearchOptions SearchOptions::pgl_defaults() {
  SearchOptions o;
  o.max_p = search_cap_from_env(kDefaultPglCap);
  return o;
}

SearchOptions SearchOptions::agl_defaults() {
  SearchOptions o;
  o.max_p = search_cap_from_env(kDefaultAglCap);
  return o;
}

std::vector<AffinePoint> select_probes(const std::vector<AffinePoint>& pts, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<AffinePoint> pool = pts;
  std::mt19937_64 rng(seed);
  const std::size_t k = std::min(count, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

namespace {

struct Row {
  std::uint32_t a, b, c;

  std::uint32_t at(AffinePoint pt, std::uint32_t p) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * pt.x + std::uint64_t{b} * pt.y + c) % p);
  }
};

}  // namespace

std::vector<Projectivity> stabilizer_bruteforce(const PrimeModulus& m, const BitPointSet& s,
                                                const SearchOptions& opts) {
  const std::uint32_t p = s.p();
  detail::check_cap(p, opts.max_p, "PGL(3,p)");

  const std::vector<AffinePoint> pts = s.points();
  const std::vector<AffinePoint> probes = select_probes(pts, opts.probe_count, opts.seed);

  std::vector<std::uint32_t> inv(p, 0);
  for (std::uint32_t v = 1; v < p; ++v) inv[v] = static_cast<std::uint32_t>(m.inv(Elem{v}).value());

  // Third rows that keep every point of s affine.
  std::vector<Row> z_rows;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t c = 0; c < p; ++c) {
        const Row r{a, b, c};
        if (a == 0 && b == 0 && c == 0) continue;
        if (std::all_of(pts.begin(), pts.end(), [&](AffinePoint pt) { return r.at(pt, p) != 0; })) {
          z_rows.push_back(r);
        }
      }
    }
  }

  // First rows with leading entry 1 fix the scalar.
  std::vector<Row> lead_rows;
  for (std::uint32_t b = 0; b < p; ++b) {
    for (std::uint32_t c = 0; c < p; ++c) lead_rows.push_back({1, b, c});
  }
  for (std::uint32_t c = 0; c < p; ++c) lead_rows.push_back({0, 1, c});
  lead_rows.push_back({0, 0, 1});

  std::vector<std::vector<Projectivity>> found(lead_rows.size());

  auto search_lead = [&](std::size_t li) {
    const Row r0 = lead_rows[li];
    std::vector<std::uint32_t> probe_x(probes.size()), probe_zinv(probes.size());
    for (const Row& rz : z_rows) {
      for (std::size_t k = 0; k < probes.size(); ++k) {
        probe_zinv[k] = inv[rz.at(probes[k], p)];
        probe_x[k] = static_cast<std::uint32_t>(std::uint64_t{r0.at(probes[k], p)} * probe_zinv[k] % p);
      }

      // The second row's constant term is pinned by where probe 0 lands.
      auto try_row1 = [&](Row r1) {
        for (std::size_t k = 1; k < probes.size(); ++k) {
          const auto y = static_cast<std::uint32_t>(std::uint64_t{r1.at(probes[k], p)} * probe_zinv[k] % p);
          if (!s.contains(probe_x[k], y)) return;
        }
        const Projectivity::Entries e{r0.a, r0.b, r0.c, r1.a, r1.b, r1.c, rz.a, rz.b, rz.c};
        if (determinant(m, e).value() == 0) return;
        for (const AffinePoint& pt : pts) {
          const std::uint64_t zi = inv[rz.at(pt, p)];
          const auto x = static_cast<std::uint32_t>(r0.at(pt, p) * zi % p);
          const auto y = static_cast<std::uint32_t>(r1.at(pt, p) * zi % p);
          if (!s.contains(x, y)) return;
        }
        found[li].push_back(Projectivity::from_matrix(
            m, {r0.a, r0.b, r0.c, r1.a, r1.b, r1.c, rz.a, rz.b, rz.c}));
      };

      for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) {
          if (probes.empty()) {
            for (std::uint32_t c = 0; c < p; ++c) try_row1({a, b, c});
            continue;
          }
          // r1(P0) = y0' z0 for every y0' in column x0'.
          const AffinePoint p0 = probes[0];
          const std::uint32_t z0 = rz.at(p0, p);
          const std::uint32_t partial = Row{a, b, 0}.at(p0, p);
          for (std::uint32_t y = 0; y < p; ++y) {
            if (!s.contains(probe_x[0], y)) continue;
            const std::uint64_t target = std::uint64_t{y} * z0 % p;
            try_row1({a, b, static_cast<std::uint32_t>((target + p - partial) % p)});
          }
        }
      }
    }
  };

  const auto n = static_cast<std::int64_t>(lead_rows.size());
  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) search_lead(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < n; ++i) search_lead(static_cast<std::size_t>(i));
  }

  std::vector<Projectivity> out;
  for (auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Projectivity> stabilizer_structured(const PrimeModulus& m, const ColumnIntervalSet& s,
                                                Exec exec) {
  const std::uint32_t p = s.p();
  std::vector<std::vector<Projectivity>> found(p);
  auto search_scale = [&](std::uint32_t a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      bool ok = true;
      for (std::uint32_t x = 0; x < p && ok; ++x) {
        const auto img = static_cast<std::uint32_t>((std::uint64_t{a} * x + b) % p);
        ok = s.lo()[x] == s.lo()[img] && s.hi()[x] == s.hi()[img];
      }
      if (ok) found[a].push_back(Projectivity::horizontal_affinity(m, Elem{a}, Elem{b}));
    }
  };
  const auto n = static_cast<std::int64_t>(p);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t a = 1; a < n; ++a) search_scale(static_cast<std::uint32_t>(a));
  } else {
    for (std::int64_t a = 1; a < n; ++a) search_scale(static_cast<std::uint32_t>(a));
  }
  std::vector<Projectivity> out;
  for (auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumFingerprint spectrum_fingerprint(const std::vector<ProjectionTable>& tables,
                                         const ColumnIntervalSet& s, ProjectivePoint P) {
  const std::uint32_t p = s.p();
  SpectrumFingerprint fp;
  fp.point = P;
  auto& ms = fp.multiset;
  if (P.is_affine()) {
    for (std::uint32_t d = 0; d < p; ++d) {
      const std::uint64_t b = (P.y + p - std::uint64_t{d} * P.x % p) % p;
      ms.push_back(tables[d].counts[b]);
    }
    ms.push_back(s.height(P.x));
  } else {
    const std::size_t idx = P.x == 0 ? p : P.y;
    ms = tables[idx].counts;
    ms.push_back(0);  // the line at infinity
  }
  std::sort(ms.begin(), ms.end());
  std::vector<std::int64_t> distinct = ms;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  fp.distinct_count = static_cast<std::int64_t>(distinct.size());
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    if (distinct[i + 1] == distinct[i] + 1) ++fp.consecutive_pair_count;
  }
  return fp;
}

SpectrumFingerprint spectrum_fingerprint(const ColumnIntervalSet& s, ProjectivePoint P) {
  return spectrum_fingerprint(projection_all(s, Exec::serial), s, P);
}

nlohmann::ordered_json to_json(const Projectivity& g) {
  const auto& e = g.entries();
  return nlohmann::ordered_json::array({{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}});
}

}  // namespace parabola
