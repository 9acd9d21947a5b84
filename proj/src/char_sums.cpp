#include "parabola/char_sums.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "parabola/bounds.hpp"
#include "parabola/errors.hpp"

namespace parabola {

CharSumProfile char_sum_profile(const PrimeModulus& m) {
  const std::uint64_t p = m.p();
  CharSumProfile out;
  out.prefix.assign(p, 0);
  std::int64_t run = 0;
  for (std::uint64_t t = 1; t < p; ++t) {
    run += m.chi(Elem{t});
    out.prefix[t] = run;
  }
  const auto [lo, hi] = std::minmax_element(out.prefix.begin(), out.prefix.end());
  out.max_abs_interval = *hi - *lo;
  return out;
}

bool verify_polya_vinogradov(const PrimeModulus& m, const CharSumProfile& profile) {
  return certainly_le(static_cast<double>(profile.max_abs_interval), sqrt_p_ln_p(m.p()));
}

bool verify_polya_vinogradov(const PrimeModulus& m) {
  return verify_polya_vinogradov(m, char_sum_profile(m));
}

CsikvariWitness csikvari_witness(const PrimeModulus& m) {
  const CharSumProfile prof = char_sum_profile(m);
  CsikvariWitness best{Elem{1}, prof.prefix[1]};
  for (std::uint64_t b = 2; b < m.p(); ++b) {
    if (std::llabs(prof.prefix[b]) > std::llabs(best.sum)) best = {Elem{b}, prof.prefix[b]};
  }
  if (!certainly_ge(static_cast<double>(std::llabs(best.sum)), sqrt_p_over_two_pi(m.p()))) {
    throw BoundViolated("no partial character sum reaches sqrt(p)/(2pi) for p = " +
                        std::to_string(m.p()));
  }
  return best;
}

const char* to_string(LebesgueCase c) {
  switch (c) {
    case LebesgueCase::one_mod_4: return "1 mod 4";
    case LebesgueCase::minus_one_mod_8: return "-1 mod 8";
    case LebesgueCase::three_mod_8: return "3 mod 8";
  }
  return "?";
}

LebesgueCase lebesgue_case(std::uint64_t p) {
  if (p % 4 == 1) return LebesgueCase::one_mod_4;
  return p % 8 == 7 ? LebesgueCase::minus_one_mod_8 : LebesgueCase::three_mod_8;
}

LebesgueData lebesgue_data(const PrimeModulus& m) {
  const std::uint64_t p = m.p();
  LebesgueData d;
  d.p = p;
  d.which = lebesgue_case(p);
  for (std::uint64_t x = 1; x < p; ++x) {
    const int c = m.chi(Elem{x});
    if (c == 1) d.square_nu_sum += static_cast<std::int64_t>(x);
    if (c == -1 && x <= (p - 1) / 2) ++d.n;
  }
  return d;
}

std::optional<std::int64_t> lebesgue_formula(std::uint64_t p, std::int64_t n) {
  const auto sp = static_cast<std::int64_t>(p);
  switch (lebesgue_case(p)) {
    case LebesgueCase::one_mod_4: return sp * (sp - 1) / 4;
    case LebesgueCase::minus_one_mod_8: return sp * n;
    case LebesgueCase::three_mod_8: {
      // p (n/3 + (p-1)/6) = p (2n + p - 1) / 6
      const std::int64_t num = sp * (2 * n + sp - 1);
      if (num % 6 != 0) return std::nullopt;
      return num / 6;
    }
  }
  return std::nullopt;
}

bool verify_lebesgue_identity(const LebesgueData& d) {
  const auto f = lebesgue_formula(d.p, d.n);
  return f && *f == d.square_nu_sum;
}

bool verify_lebesgue_corollary(const LebesgueData& d) {
  const auto sp = static_cast<std::int64_t>(d.p);
  const Enclosure e = sqrt_p_ln_p(d.p);

  // |n - (p-1)/4| <= e/2  <=>  |4n - (p-1)| <= 2e
  const std::int64_t dn = std::llabs(4 * d.n - (sp - 1));
  if (!certainly_le(static_cast<double>(dn), scaled(e, 2))) return false;

  // |S - p(p-1)/4| <= k p e  <=>  den |4S - p(p-1)| <= 4 num p e
  const std::int64_t ds = std::llabs(4 * d.square_nu_sum - sp * (sp - 1));
  switch (d.which) {
    case LebesgueCase::one_mod_4: return ds == 0;
    case LebesgueCase::minus_one_mod_8:  // k = 1/2
      return certainly_le(static_cast<double>(ds), scaled(e, 2 * d.p));
    case LebesgueCase::three_mod_8:  // k = 1/6
      return certainly_le(static_cast<double>(3 * ds), scaled(e, 2 * d.p));
  }
  return false;
}

bool verify_lebesgue_corollary(const PrimeModulus& m) {
  return verify_lebesgue_corollary(lebesgue_data(m));
}

std::int64_t consecutive_pairs(std::span<const std::uint8_t> mask) {
  std::int64_t count = 0;
  for (std::size_t x = 0; x + 1 < mask.size(); ++x) {
    if (mask[x] && mask[x + 1]) ++count;
  }
  return count;
}

std::int64_t consecutive_pairs(const PrimeModulus& m, std::span<const Elem> s) {
  std::vector<std::uint8_t> mask(m.p(), 0);
  for (Elem e : s) mask[e.value()] = 1;
  return consecutive_pairs(mask);
}

bool verify_quadratic_image_pairs(const PrimeModulus& m, const QuadraticPoly& f) {
  const auto mask = f.image_mask(m);
  return 4 * consecutive_pairs(mask) >= static_cast<std::int64_t>(m.p()) - 5;
}

}  // namespace parabola
