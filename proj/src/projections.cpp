#include "parabola/projections.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "parabola/errors.hpp"

namespace parabola {

void set_parallel_width(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int parallel_width() { return omp_get_max_threads(); }

std::string Direction::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(d_.value());
}

std::vector<Direction> all_directions(std::uint32_t p) {
  std::vector<Direction> out;
  out.reserve(p + 1);
  for (std::uint32_t d = 0; d < p; ++d) out.push_back(Direction::slope(Elem{d}));
  out.push_back(Direction::infinity());
  return out;
}

std::int64_t ProjectionTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::vector<std::int64_t> ProjectionTable::spectrum() const {
  auto s = counts;
  std::sort(s.begin(), s.end());
  return s;
}

ProjectionTable projection(const ColumnIntervalSet& s, Direction d) {
  const std::uint32_t p = s.p();
  ProjectionTable t{d, std::vector<std::int64_t>(p, 0)};

  if (d.is_infinite()) {
    for (std::uint32_t b = 0; b < p; ++b) t.counts[b] = s.height(b == 0 ? 0 : p - b);
    return t;
  }

  // Column x contributes to b = y - d x for y in [lo, hi): a cyclic run of
  // consecutive intercepts. Accumulate the runs in a difference array.
  const std::uint64_t slope = d.slope_value().value();
  std::vector<std::int64_t> diff(p + 1, 0);
  std::int64_t everywhere = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint32_t len = s.height(x);
    if (len == 0) continue;
    if (len == p) {
      ++everywhere;
      continue;
    }
    const std::uint64_t dx = slope * x % p;
    const std::uint32_t start = static_cast<std::uint32_t>((s.lo()[x] + p - dx) % p);
    const std::uint32_t end = start + len;
    if (end <= p) {
      ++diff[start];
      --diff[end];
    } else {
      ++diff[start];
      --diff[p];
      ++diff[0];
      --diff[end - p];
    }
  }
  std::int64_t run = everywhere;
  for (std::uint32_t b = 0; b < p; ++b) {
    run += diff[b];
    t.counts[b] = run;
  }
  return t;
}

namespace {

ProjectionTable project_points(const std::vector<AffinePoint>& pts, std::uint32_t p, Direction d) {
  ProjectionTable t{d, std::vector<std::int64_t>(p, 0)};
  for (const AffinePoint& pt : pts) {
    if (d.is_infinite()) {
      ++t.counts[pt.x == 0 ? 0 : p - pt.x];
    } else {
      const std::uint64_t dx = d.slope_value().value() * pt.x % p;
      ++t.counts[(pt.y + p - dx) % p];
    }
  }
  return t;
}

}  // namespace

ProjectionTable projection(const BitPointSet& s, Direction d) {
  return project_points(s.points(), s.p(), d);
}

namespace {

template <typename Set>
std::vector<ProjectionTable> projection_all_impl(const Set& s, Exec exec) {
  const auto dirs = all_directions(s.p());
  std::vector<ProjectionTable> out(dirs.size());
  const auto n = static_cast<std::int64_t>(dirs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = projection(s, dirs[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = projection(s, dirs[i]);
  }
  return out;
}

}  // namespace

std::vector<ProjectionTable> projection_all(const ColumnIntervalSet& s, Exec exec) {
  return projection_all_impl(s, exec);
}

std::vector<ProjectionTable> projection_all(const BitPointSet& s, Exec exec) {
  const auto pts = s.points();
  const auto dirs = all_directions(s.p());
  std::vector<ProjectionTable> out(dirs.size());
  const auto n = static_cast<std::int64_t>(dirs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = project_points(pts, s.p(), dirs[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = project_points(pts, s.p(), dirs[i]);
  }
  return out;
}

Elem shift_offset(const PrimeModulus& m, const QuadraticPoly& f, Elem d) {
  if (d.value() == 0) throw ZeroSlope("shift offset is only defined for d != 0");
  const Elem half = m.inv(Elem{2});
  const Elem d_plus_half = m.mul(m.add(d, Elem{1}), half);
  const Elem lhs = m.sub(f.beta(), d_plus_half);
  const Elem rhs = m.div(m.sub(d, Elem{1}), m.mul(Elem{2}, f.alpha()));
  return m.mul(lhs, rhs);
}

ShiftCheck verify_shift(const PrimeModulus& m, const QuadraticPoly& f, Exec exec) {
  const auto s = build_parabola_set(m, f, Variant::lt);
  const auto tables = projection_all(s, exec);
  const std::uint32_t p = s.p();
  const auto& base = tables[1].counts;

  ShiftCheck out;
  for (std::uint32_t d = 1; d < p; ++d) {
    const Elem t = shift_offset(m, f, Elem{d});
    const auto& cur = tables[d].counts;
    for (std::uint32_t b = 0; b < p; ++b) {
      ++out.cases;
      const std::int64_t expected = base[m.sub(Elem{b}, t).value()];
      if (cur[b] != expected) {
        out.ok = false;
        out.failure = ShiftFailure{Elem{d}, Elem{b}, expected, cur[b]};
        return out;
      }
    }
  }
  return out;
}

int projection_step(const PrimeModulus& m, const QuadraticPoly& f, Elem b) {
  const Elem bm1 = m.sub(f.beta(), Elem{1});
  const Elem shifted = m.sub(m.add(b, Elem{1}), f.gamma());
  const Elem disc = m.add(m.mul(bm1, bm1), m.mul(m.mul(Elem{4}, f.alpha()), shifted));
  return -m.chi(disc);
}

ImageInterval image_interval(const ProjectionTable& t) {
  ImageInterval out;
  if (t.counts.empty()) return out;
  const auto [lo, hi] = std::minmax_element(t.counts.begin(), t.counts.end());
  out.min = *lo;
  out.max = *hi;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(out.max - out.min + 1), 0);
  for (std::int64_t c : t.counts) hit[static_cast<std::size_t>(c - out.min)] = 1;
  out.contiguous = std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
  return out;
}

DirectionClass classify_direction(const ProjectionTable& t, std::int64_t set_size) {
  const auto p = static_cast<std::int64_t>(t.counts.size());
  const std::int64_t floor_avg = set_size / p;
  const std::int64_t ceil_avg = (set_size + p - 1) / p;
  DirectionClass out{t.direction, false, t.spectrum()};
  out.special = std::any_of(t.counts.begin(), t.counts.end(),
                            [&](std::int64_t c) { return c != floor_avg && c != ceil_avg; });
  return out;
}

DirectionClass classify_direction(const ColumnIntervalSet& s, Direction d) {
  return classify_direction(projection(s, d), s.size());
}

std::vector<Direction> special_directions(const ColumnIntervalSet& s, Exec exec) {
  const std::int64_t n = s.size();
  std::vector<Direction> out;
  for (const auto& t : projection_all(s, exec)) {
    if (classify_direction(t, n).special) out.push_back(t.direction);
  }
  return out;
}

}  // namespace parabola
