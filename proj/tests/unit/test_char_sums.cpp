#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "parabola/bounds.hpp"
#include "parabola/char_sums.hpp"
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

// Residues x with x^2 hitting them, enumerated independently of the tables.
std::vector<Elem> squares_by_enumeration(std::uint64_t p) {
  std::vector<bool> hit(p, false);
  for (std::uint64_t x = 1; x < p; ++x) hit[x * x % p] = true;
  std::vector<Elem> out;
  for (std::uint64_t y = 1; y < p; ++y) {
    if (hit[y]) out.emplace_back(y);
  }
  return out;
}

}  // namespace

TEST_CASE("character sum profile") {
  const auto p5 = char_sum_profile(make_field(5));
  CHECK(p5.prefix == std::vector<std::int64_t>{0, 1, 0, -1, 0});
  const auto p3 = char_sum_profile(make_field(3));
  CHECK(p3.prefix == std::vector<std::int64_t>{0, 1, 0});

  for (auto p : odd_primes_upto(199)) {
    const auto m = make_field(p);
    const auto prof = char_sum_profile(m);
    CHECK(prof.prefix.back() == 0);
    CHECK(prof.max_abs_interval == reference::max_abs_interval_naive(m));
  }
}

TEST_CASE("Polya-Vinogradov bound") {
  CHECK(verify_polya_vinogradov(make_field(3)));
  CHECK(verify_polya_vinogradov(make_field(5)));
  CHECK(verify_polya_vinogradov(make_field(97)));
  for (auto p : odd_primes_upto(499)) CHECK(verify_polya_vinogradov(make_field(p)));
}

TEST_CASE("bound enclosures contain the true value") {
  for (std::uint64_t p : {3ULL, 5ULL, 97ULL, 9973ULL}) {
    const long double exact = std::sqrt(static_cast<long double>(p)) * std::log(static_cast<long double>(p));
    const Enclosure e = sqrt_p_ln_p(p);
    CHECK(e.lo < e.hi);
    CHECK(static_cast<long double>(e.lo) <= exact);
    CHECK(static_cast<long double>(e.hi) >= exact);
    const long double small = std::sqrt(static_cast<long double>(p)) / (2 * std::numbers::pi_v<long double>);
    const Enclosure s = sqrt_p_over_two_pi(p);
    CHECK(static_cast<long double>(s.lo) <= small);
    CHECK(static_cast<long double>(s.hi) >= small);
  }
  CHECK(format_bound(sqrt_p_ln_p(5).mid()) == "3.59881257777");
}

TEST_CASE("Csikvari witness") {
  const auto w5 = csikvari_witness(make_field(5));
  CHECK(std::llabs(w5.sum) == 1);
  const auto w3 = csikvari_witness(make_field(3));
  CHECK(std::llabs(w3.sum) == 1);
  // chi mod 13 partial sums: 1,0,1,2,1,0,-1,-2,-1,0,-1,0
  const auto w13 = csikvari_witness(make_field(13));
  CHECK(w13.b == Elem{4});
  CHECK(w13.sum == 2);
  for (auto p : odd_primes_upto(499)) CHECK_NOTHROW(csikvari_witness(make_field(p)));
}

TEST_CASE("Lebesgue data and identity") {
  const auto d13 = lebesgue_data(make_field(13));
  CHECK(d13.square_nu_sum == 39);
  CHECK(d13.which == LebesgueCase::one_mod_4);
  const auto d7 = lebesgue_data(make_field(7));
  CHECK(d7.n == 1);
  CHECK(d7.square_nu_sum == 7);
  CHECK(d7.which == LebesgueCase::minus_one_mod_8);
  const auto d11 = lebesgue_data(make_field(11));
  CHECK(d11.n == 1);
  CHECK(d11.square_nu_sum == 22);
  CHECK(d11.which == LebesgueCase::three_mod_8);

  CHECK(lebesgue_formula(11, 1) == 22);
  CHECK_FALSE(lebesgue_formula(11, 0).has_value());  // 110/6

  for (auto p : odd_primes_upto(3000)) {
    const auto d = lebesgue_data(make_field(p));
    std::int64_t direct = 0;
    for (Elem q : squares_by_enumeration(p)) direct += static_cast<std::int64_t>(q.value());
    CHECK(d.square_nu_sum == direct);
    CHECK(verify_lebesgue_identity(d));
  }
}

TEST_CASE("Lebesgue corollary bounds") {
  CHECK(verify_lebesgue_corollary(make_field(13)));
  CHECK(verify_lebesgue_corollary(make_field(7)));
  CHECK(verify_lebesgue_corollary(make_field(11)));
  for (auto p : odd_primes_upto(3000)) CHECK(verify_lebesgue_corollary(make_field(p)));
}

TEST_CASE("consecutive pairs") {
  const auto m = make_field(13);
  const std::vector<Elem> q{Elem{1}, Elem{3}, Elem{4}, Elem{9}, Elem{10}, Elem{12}};
  const std::vector<Elem> n{Elem{2}, Elem{5}, Elem{6}, Elem{7}, Elem{8}, Elem{11}};
  CHECK(consecutive_pairs(m, q) == 2);
  CHECK(consecutive_pairs(m, n) == 3);
  CHECK(consecutive_pairs(m, std::vector<Elem>{}) == 0);
  // (12, 0) wraps around and does not count
  CHECK(consecutive_pairs(m, std::vector<Elem>{Elem{12}, Elem{0}}) == 0);
}

TEST_CASE("Jacobsthal counts") {
  for (auto p : odd_primes_upto(499)) {
    const auto m = make_field(p);
    const auto sp = static_cast<std::int64_t>(p);
    CHECK(consecutive_pairs(m, m.squares()) == (sp - 3) / 4);
    CHECK(consecutive_pairs(m, m.nonsquares()) == (sp - 1) / 4);
  }
}

TEST_CASE("quadratic images contain many consecutive pairs") {
  const auto m13 = make_field(13);
  const QuadraticPoly x2(Elem{1}, Elem{0}, Elem{0});
  CHECK(consecutive_pairs(x2.image_mask(m13)) == 3);
  CHECK(verify_quadratic_image_pairs(m13, x2));
  const auto m5 = make_field(5);
  CHECK(consecutive_pairs(x2.image_mask(m5)) == 1);

  for (auto p : odd_primes_upto(101)) {
    const auto m = make_field(p);
    for (std::uint64_t g = 0; g < p; ++g) {
      const QuadraticPoly f(Elem{1}, Elem{0}, Elem{g});
      CHECK(verify_quadratic_image_pairs(m, f));
      CHECK(verify_quadratic_image_pairs(m, QuadraticPoly(m.least_nonsquare(), Elem{g}, Elem{1})));
    }
  }
}
