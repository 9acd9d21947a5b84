#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "parabola/errors.hpp"
#include "parabola/reference.hpp"
#include "parabola/symmetry.hpp"

using namespace parabola;

namespace {

BitPointSet below(const PrimeModulus& m, std::uint64_t a, std::uint64_t c, Variant v = Variant::lt) {
  return build_parabola_set(m, QuadraticPoly(Elem{a}, Elem{0}, Elem{c}), v).to_bitset();
}

bool contains(const std::vector<Projectivity>& g, const Projectivity& x) {
  return std::binary_search(g.begin(), g.end(), x);
}

SearchOptions serial_search() {
  SearchOptions o;
  o.exec = Exec::serial;
  return o;
}

}  // namespace

TEST_CASE("canonical projective points") {
  const auto m = make_field(7);
  CHECK(canonical_point(m, 2, 4, 2) == ProjectivePoint{1, 2, 1});
  CHECK(canonical_point(m, 3, 6, 0) == ProjectivePoint{1, 2, 0});
  CHECK(canonical_point(m, 0, 5, 0) == ProjectivePoint{0, 1, 0});
  CHECK(ProjectivePoint::at_infinity(Direction::infinity()) == ProjectivePoint{0, 1, 0});
  CHECK(ProjectivePoint::at_infinity(Direction::slope(Elem{3})) == ProjectivePoint{1, 3, 0});
}

TEST_CASE("projectivity canonical form and action") {
  const auto m = make_field(5);
  const auto a = Projectivity::from_matrix(m, {2, 0, 0, 0, 2, 0, 0, 0, 2});
  CHECK(a == Projectivity::identity());
  CHECK_THROWS_AS(Projectivity::from_matrix(m, {1, 2, 3, 2, 4, 1, 0, 0, 0}), SingularMatrix);

  const auto r = Projectivity::reflection(m);
  CHECK(r.entries() == Projectivity::Entries{1, 0, 0, 0, 4, 0, 0, 0, 4});
  CHECK(r.apply(m, AffinePoint{2, 3}) == AffinePoint{3, 3});
  CHECK(r.is_horizontal_affinity());
  CHECK(r.compose(m, r) == Projectivity::identity());

  // swaps Z and X, so (0, y) goes to infinity
  const auto swap = Projectivity::from_matrix(m, {0, 0, 1, 0, 1, 0, 1, 0, 0});
  CHECK_FALSE(swap.apply(m, AffinePoint{0, 2}).has_value());
  CHECK(swap.apply(m, ProjectivePoint{0, 2, 1}) == ProjectivePoint{1, 2, 0});

  const auto g = Projectivity::from_matrix(m, {1, 2, 3, 0, 1, 4, 2, 0, 1});
  CHECK(g.compose(m, g.inverse(m)) == Projectivity::identity());
  CHECK(g.inverse(m).compose(m, g) == Projectivity::identity());
  CHECK_FALSE(g.is_horizontal_affinity());
  CHECK(determinant(m, {1, 0, 0, 0, 1, 0, 0, 0, 1}) == Elem{1});

  const AffineMap f{{1, 1, 0, 1}, {2, 0}};
  const auto fp = f.to_projectivity(m);
  for (std::uint32_t x = 0; x < 5; ++x) {
    for (std::uint32_t y = 0; y < 5; ++y) CHECK(fp.apply(m, AffinePoint{x, y}) == f.apply(5, AffinePoint{x, y}));
  }
}

TEST_CASE("probe selection is seeded and deterministic") {
  std::vector<AffinePoint> pts;
  for (std::uint32_t i = 0; i < 100; ++i) pts.push_back({i, i});
  const auto a = select_probes(pts, 10, 42);
  CHECK(a.size() == 10);
  CHECK(a == select_probes(pts, 10, 42));
  CHECK(a != select_probes(pts, 10, 43));
  CHECK(select_probes(pts, 500, 1).size() == 100);
}

TEST_CASE("pruned brute force matches the full matrix scan") {
  for (std::uint64_t p : {3, 5}) {
    const auto m = make_field(p);
    const std::vector<BitPointSet> sets{below(m, 1, 0), below(m, 1, 1), below(m, m.least_nonsquare().value(), 2),
                                        build_diagonal_set(m).to_bitset(), below(m, 1, 0, Variant::le)};
    for (const auto& s : sets) {
      CHECK(stabilizer_bruteforce(m, s, serial_search()) == reference::stabilizer_naive(m, s));
    }
  }
}

TEST_CASE("stabilizer orders at p = 3 and p = 5") {
  const auto m3 = make_field(3);
  CHECK(stabilizer_bruteforce(m3, below(m3, 1, 0)).size() == 72);
  CHECK(stabilizer_bruteforce(m3, below(m3, 1, 1)).size() == 12);
  CHECK(stabilizer_bruteforce(m3, build_diagonal_set(m3).to_bitset()).size() == 24);
  const auto m5 = make_field(5);
  CHECK(stabilizer_bruteforce(m5, below(m5, 1, 0)).size() == 2);
  CHECK(stabilizer_bruteforce(m5, below(m5, 1, 1)).size() == 4);
  CHECK(stabilizer_bruteforce(m5, build_diagonal_set(m5).to_bitset()).size() == 6);
  // the full plane is fixed by exactly AGL(2,5)
  CHECK(stabilizer_bruteforce(m5, build_full_plane(m5).to_bitset()).size() == 12000);
}

TEST_CASE("stabilizers are groups containing the identity and the reflection") {
  for (std::uint64_t p : {5, 7}) {
    const auto m = make_field(p);
    for (std::uint64_t c : {0, 1, 3}) {
      const auto s = below(m, 1, c);
      const auto g = stabilizer_bruteforce(m, s);
      CHECK(contains(g, Projectivity::identity()));
      CHECK(contains(g, Projectivity::reflection(m)));
      for (const auto& x : g) {
        CHECK(contains(g, x.inverse(m)));
        for (const auto& y : g) REQUIRE(contains(g, x.compose(m, y)));
        const auto img = apply_projectivity(m, s, x);
        REQUIRE(img.has_value());
        CHECK(*img == s);
      }
    }
  }
}

TEST_CASE("serial and parallel brute force agree, independent of the probe seed") {
  const auto m = make_field(7);
  const auto s = below(m, 3, 2, Variant::le);
  SearchOptions a = serial_search();
  SearchOptions b;
  b.seed = 12345;
  CHECK(stabilizer_bruteforce(m, s, a) == stabilizer_bruteforce(m, s, b));
}

TEST_CASE("structured search agrees with brute force on horizontal affinities") {
  for (std::uint64_t p : {5, 7, 11}) {
    const auto m = make_field(p);
    for (std::uint64_t c : {0, 1, 2}) {
      const auto cs = build_parabola_set(m, QuadraticPoly(Elem{1}, Elem{0}, Elem{c}), Variant::lt);
      const auto structured = stabilizer_structured(m, cs);
      const auto brute = stabilizer_bruteforce(m, cs.to_bitset());
      std::vector<Projectivity> restricted;
      std::copy_if(brute.begin(), brute.end(), std::back_inserter(restricted),
                   [](const Projectivity& g) { return g.is_horizontal_affinity(); });
      CHECK(structured == restricted);
      CHECK(stabilizer_structured(m, cs, Exec::serial) == structured);
    }
  }
}

TEST_CASE("structured stabilizer at p = 97 and 101 is {identity, reflection}") {
  for (std::uint64_t p : {97, 101}) {
    const auto m = make_field(p);
    for (std::uint64_t a : {std::uint64_t{1}, m.least_nonsquare().value()}) {
      for (std::uint64_t c : {std::uint64_t{0}, std::uint64_t{1}, (p - 1) / 2}) {
        const auto s = build_parabola_set(m, QuadraticPoly(Elem{a}, Elem{0}, Elem{c}), Variant::lt);
        const std::vector<Projectivity> expected{Projectivity::identity(), Projectivity::reflection(m)};
        auto sorted = expected;
        std::sort(sorted.begin(), sorted.end());
        CHECK(stabilizer_structured(m, s) == sorted);
      }
    }
  }
}

TEST_CASE("search caps") {
  const auto m = make_field(17);
  const auto s = below(m, 1, 0);
  CHECK_THROWS_AS(stabilizer_bruteforce(m, s), TooLarge);
  CHECK_THROWS_AS(isomorphic_affine(m, s, s), TooLarge);

  ::setenv("PARABOLA_MAX_SEARCH_P", "3", 1);
  CHECK(SearchOptions::pgl_defaults().max_p == 3);
  CHECK(SearchOptions::agl_defaults().max_p == 3);
  const auto m5 = make_field(5);
  CHECK_THROWS_AS(stabilizer_bruteforce(m5, below(m5, 1, 0), SearchOptions::pgl_defaults()), TooLarge);
  ::setenv("PARABOLA_MAX_SEARCH_P", "junk", 1);
  CHECK(SearchOptions::pgl_defaults().max_p == kDefaultPglCap);
  ::unsetenv("PARABOLA_MAX_SEARCH_P");
  CHECK(SearchOptions::agl_defaults().max_p == kDefaultAglCap);
}

TEST_CASE("spectrum fingerprints") {
  const auto m = make_field(5);
  const auto s = build_parabola_set(m, QuadraticPoly(Elem{1}, Elem{0}, Elem{0}), Variant::lt);
  const auto inf = spectrum_fingerprint(s, ProjectivePoint{0, 1, 0});
  CHECK(inf.multiset == std::vector<std::int64_t>{0, 0, 1, 1, 4, 4});
  CHECK(inf.distinct_count == 3);
  CHECK(inf.consecutive_pair_count == 1);

  // lines through an affine point cover S once each, plus the point itself p times
  for (std::uint32_t x = 0; x < 5; ++x) {
    for (std::uint32_t y = 0; y < 5; ++y) {
      const auto fp = spectrum_fingerprint(s, ProjectivePoint{x, y, 1});
      std::int64_t total = 0;
      for (auto c : fp.multiset) total += c;
      CHECK(fp.multiset.size() == 6);
      CHECK(total == s.size() + (s.contains(x, y) ? 5 : 0));
    }
  }
}

TEST_CASE("affine isomorphism search agrees with the exhaustive scan") {
  for (std::uint64_t p : {3, 5}) {
    const auto m = make_field(p);
    std::vector<BitPointSet> sets;
    for (std::uint64_t a : {std::uint64_t{1}, m.least_nonsquare().value()}) {
      for (std::uint64_t c = 0; c < p; ++c) {
        sets.push_back(below(m, a, c, Variant::lt));
        sets.push_back(below(m, a, c, Variant::le));
      }
    }
    sets.push_back(build_diagonal_set(m).to_bitset());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const auto fast = isomorphic_affine(m, sets[i], sets[j]);
        const auto naive = reference::isomorphic_affine_naive(sets[i], sets[j]);
        REQUIRE(fast.has_value() == naive.has_value());
        if (fast) CHECK(apply_affine(sets[i], *fast) == sets[j]);
        if (fast) CHECK(direction_spectra_invariant(sets[i]) == direction_spectra_invariant(sets[j]));
      }
    }
  }
}

TEST_CASE("isomorphic images are found") {
  const auto m = make_field(7);
  const auto s = below(m, 1, 2);
  const AffineMap f{{2, 1, 3, 4}, {4, 6}};
  const auto t = apply_affine(s, f);
  const auto g = isomorphic_affine(m, s, t);
  REQUIRE(g.has_value());
  CHECK(apply_affine(s, *g) == t);
  CHECK(isomorphic_affine(m, s, s) == AffineMap{});
}

TEST_CASE("parameter recovery") {
  for (std::uint64_t p : {7, 11, 13, 97}) {
    const auto m = make_field(p);
    for (std::uint64_t a : {std::uint64_t{1}, m.least_nonsquare().value()}) {
      const auto cls = m.is_square(Elem{a}) ? CoefficientClass::square : CoefficientClass::nonsquare;
      for (std::uint64_t c = 0; c < p; ++c) {
        const QuadraticPoly f(Elem{a}, Elem{0}, Elem{c});
        const auto le = recover_parameters(m, build_parabola_set(m, f, Variant::le));
        CHECK(le == RecoveredParameters{cls, Elem{c}, Variant::le});

        const auto lt = recover_parameters(m, build_parabola_set(m, f, Variant::lt));
        const auto img = f.image_mask(m);
        if (img[0]) {
          CHECK(lt == RecoveredParameters{cls, Elem{c}, Variant::lt});
        } else {
          CHECK(lt == RecoveredParameters{cls, m.sub(Elem{c}, Elem{1}), Variant::le});
        }
      }
    }
  }
  const auto m = make_field(7);
  CHECK_THROWS_AS(recover_parameters(m, build_full_plane(m)), NotAParabolaSet);
}

TEST_CASE("classification counts") {
  for (std::uint64_t p : {5, 7, 11, 13, 97}) {
    const auto r = classify_family(make_field(p));
    CHECK(r.members.size() == 4 * p);
    CHECK(r.class_count == 3 * p + 1);
    CHECK(r.expected_count == 3 * p + 1);
    CHECK(r.merge_rule_count == 3 * p + 1);
  }
}

TEST_CASE("classification oracle at p = 5") {
  ClassifyOptions o;
  o.run_oracle = true;
  const auto r = classify_family(make_field(5), o);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->class_count == 16);
  CHECK(r.oracle->agrees);
  CHECK(r.oracle->discrepancies.empty());
  const auto j = to_json(r);
  CHECK(j["class_count"] == 16);
}
