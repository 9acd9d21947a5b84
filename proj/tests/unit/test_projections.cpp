#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "parabola/errors.hpp"
#include "parabola/projections.hpp"
#include "parabola/reference.hpp"

using namespace parabola;

namespace {

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q <= n; q += 2) {
    if (is_odd_prime(q)) out.push_back(q);
  }
  return out;
}

std::vector<QuadraticPoly> small_family(const PrimeModulus& m) {
  std::vector<QuadraticPoly> out;
  const auto p = m.p();
  for (Elem a : {Elem{1}, m.least_nonsquare()}) {
    for (std::uint64_t b : {std::uint64_t{0}, std::uint64_t{1}}) {
      for (std::uint64_t c : {std::uint64_t{0}, std::uint64_t{1}, (p - 1) / 2}) {
        out.emplace_back(a, Elem{b}, Elem{c});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("directions") {
  const auto dirs = all_directions(5);
  REQUIRE(dirs.size() == 6);
  CHECK(dirs.front() == Direction::slope(Elem{0}));
  CHECK(dirs.back().is_infinite());
  CHECK(dirs.back().to_string() == "inf");
  CHECK(dirs[3].to_string() == "3");
  CHECK(std::is_sorted(dirs.begin(), dirs.end()));
}

TEST_CASE("projection examples for X^2 at p = 5") {
  const auto m = make_field(5);
  const auto s = build_parabola_set(m, QuadraticPoly(Elem{1}, Elem{0}, Elem{0}), Variant::lt);
  CHECK(projection(s, Direction::slope(Elem{1})).counts == std::vector<std::int64_t>{2, 2, 1, 2, 3});
  CHECK(projection(s, Direction::slope(Elem{2})).counts == std::vector<std::int64_t>{1, 2, 3, 2, 2});
  CHECK(projection(s, Direction::infinity()).spectrum() == std::vector<std::int64_t>{0, 1, 1, 4, 4});
  // index b of the vertical table is column -b
  CHECK(projection(s, Direction::infinity()).counts == std::vector<std::int64_t>{0, 1, 4, 4, 1});
}

TEST_CASE("fast projection agrees with the naive count") {
  for (auto p : odd_primes_upto(61)) {
    const auto m = make_field(p);
    std::vector<ColumnIntervalSet> sets{build_diagonal_set(m), build_full_plane(m)};
    for (const auto& f : small_family(m)) {
      for (auto v : {Variant::lt, Variant::le, Variant::gt, Variant::ge}) sets.push_back(build_parabola_set(m, f, v));
    }
    for (const auto& s : sets) {
      const auto fast = projection_all(s, Exec::serial);
      const auto par = projection_all(s, Exec::parallel);
      const auto bits = projection_all(s.to_bitset(), Exec::serial);
      const auto dirs = all_directions(static_cast<std::uint32_t>(p));
      REQUIRE(fast.size() == p + 1);
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        const auto naive = reference::projection_naive(s, dirs[i]);
        REQUIRE(fast[i].counts == naive.counts);
        REQUIRE(par[i].counts == naive.counts);
        REQUIRE(bits[i].counts == naive.counts);
        CHECK(fast[i].total() == s.size());
      }
    }
  }
}

TEST_CASE("shift offset") {
  const auto m = make_field(7);
  const QuadraticPoly f(Elem{1}, Elem{0}, Elem{1});
  CHECK(shift_offset(m, f, Elem{3}) == Elem{5});
  CHECK(shift_offset(m, f, Elem{1}) == Elem{0});
  CHECK_THROWS_AS(shift_offset(m, f, Elem{0}), ZeroSlope);
}

TEST_CASE("shift identity holds exhaustively on small primes") {
  for (auto p : odd_primes_upto(61)) {
    const auto m = make_field(p);
    for (const auto& f : small_family(m)) {
      const auto r = verify_shift(m, f, Exec::serial);
      CHECK(r.ok);
      CHECK(r.cases == static_cast<std::int64_t>((p - 1) * p));
    }
  }
  // every alpha, beta, gamma at p = 11
  const auto m = make_field(11);
  for (std::uint64_t a = 1; a < 11; ++a) {
    for (std::uint64_t b = 0; b < 11; ++b) {
      for (std::uint64_t c = 0; c < 11; ++c) CHECK(verify_shift(m, QuadraticPoly(Elem{a}, Elem{b}, Elem{c})).ok);
    }
  }
}

TEST_CASE("step formula reproduces pr_1") {
  for (auto p : odd_primes_upto(199)) {
    const auto m = make_field(p);
    for (const auto& f : small_family(m)) {
      const auto s = build_parabola_set(m, f, Variant::lt);
      const auto t = projection(s, Direction::slope(Elem{1}));
      std::int64_t running = t.counts[0];
      for (std::uint64_t b = 0; b + 1 < p; ++b) {
        const int step = projection_step(m, f, Elem{b});
        REQUIRE(t.counts[b + 1] - t.counts[b] == step);
        running += step;
        REQUIRE(running == t.counts[b + 1]);
      }
      // wrap from p-1 back to 0
      REQUIRE(t.counts[0] - t.counts[p - 1] == projection_step(m, f, Elem{p - 1}));
    }
  }
}

TEST_CASE("image interval") {
  ProjectionTable t;
  t.counts = {3, 1, 2, 2};
  auto r = image_interval(t);
  CHECK(r.min == 1);
  CHECK(r.max == 3);
  CHECK(r.contiguous);
  CHECK(r.length() == 2);
  t.counts = {0, 3, 3};
  CHECK_FALSE(image_interval(t).contiguous);

  for (auto p : odd_primes_upto(199)) {
    const auto m = make_field(p);
    const double lower = std::sqrt(static_cast<double>(p)) / (2 * std::numbers::pi);
    const double upper = std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p));
    for (const auto& f : small_family(m)) {
      const auto s = build_parabola_set(m, f, Variant::lt);
      const auto r1 = image_interval(projection(s, Direction::slope(Elem{1})));
      CHECK(r1.contiguous);
      CHECK(static_cast<double>(r1.length()) <= upper);
      CHECK(static_cast<double>(r1.length()) >= lower);
    }
  }
}

TEST_CASE("all finite nonzero directions share one multiset") {
  for (std::uint64_t p : {5, 7, 13, 31}) {
    const auto m = make_field(p);
    for (const auto& f : small_family(m)) {
      const auto s = build_parabola_set(m, f, Variant::lt);
      const auto tables = projection_all(s, Exec::serial);
      for (std::uint64_t d = 2; d < p; ++d) CHECK(tables[d].spectrum() == tables[1].spectrum());
    }
  }
}

TEST_CASE("direction classification") {
  ProjectionTable flat;
  flat.counts = {2, 2, 3, 2, 3};
  CHECK_FALSE(classify_direction(flat, 12).special);
  ProjectionTable bumpy;
  bumpy.counts = {1, 2, 3, 3, 3};
  CHECK(classify_direction(bumpy, 12).special);
}

TEST_CASE("the diagonal set has special directions 0, 1 and inf") {
  for (auto p : odd_primes_upto(199)) {
    const auto m = make_field(p);
    const std::vector<Direction> expected{Direction::slope(Elem{0}), Direction::slope(Elem{1}), Direction::infinity()};
    CHECK(special_directions(build_diagonal_set(m)) == expected);
  }
  CHECK(special_directions(build_full_plane(make_field(7))).empty());
}
