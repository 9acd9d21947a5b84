#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parabola/field.hpp"
#include "parabola/poly.hpp"

namespace parabola {

/// prefix[t] = sum_{x=1}^{t} chi(x) for t in [0, p-1]. Any interval sum over
/// [a, b] within one period is a difference of two prefix entries, so the
/// largest |interval sum| is max(prefix) - min(prefix).
struct CharSumProfile {
  std::vector<std::int64_t> prefix;
  std::int64_t max_abs_interval = 0;
};

CharSumProfile char_sum_profile(const PrimeModulus& m);

/// max |sum chi| over intervals <= sqrt(p) ln(p), certified.
bool verify_polya_vinogradov(const PrimeModulus& m);
bool verify_polya_vinogradov(const PrimeModulus& m, const CharSumProfile& profile);

struct CsikvariWitness {
  Elem b;
  std::int64_t sum = 0;
};

/// Smallest b in [1, p-1] maximising |sum_{x=1}^{b} chi(x)|. Throws
/// BoundViolated if that maximum is not certifiably >= sqrt(p)/(2 pi).
CsikvariWitness csikvari_witness(const PrimeModulus& m);

enum class LebesgueCase { one_mod_4, minus_one_mod_8, three_mod_8 };

const char* to_string(LebesgueCase c);
LebesgueCase lebesgue_case(std::uint64_t p);

struct LebesgueData {
  std::uint64_t p = 0;
  std::int64_t n = 0;              // |N ∩ [1, (p-1)/2]|, by enumeration
  std::int64_t square_nu_sum = 0;  // sum of nu(x) over x in Q, by enumeration
  LebesgueCase which = LebesgueCase::one_mod_4;
};

LebesgueData lebesgue_data(const PrimeModulus& m);

/// Closed form for sum_{x in Q} nu(x) given n. Empty when the 3 mod 8 case
/// p(n/3 + (p-1)/6) is not an integer.
std::optional<std::int64_t> lebesgue_formula(std::uint64_t p, std::int64_t n);

bool verify_lebesgue_identity(const LebesgueData& d);

/// |n - (p-1)/4| <= sqrt(p) ln(p) / 2 and the case bound on the square sum.
bool verify_lebesgue_corollary(const PrimeModulus& m);
bool verify_lebesgue_corollary(const LebesgueData& d);

/// Number of x in s with x+1 in s and x+1 != 0 (no wraparound pair).
std::int64_t consecutive_pairs(const PrimeModulus& m, std::span<const Elem> s);
std::int64_t consecutive_pairs(std::span<const std::uint8_t> mask);

/// Image of f has at least (p-5)/4 consecutive pairs.
bool verify_quadratic_image_pairs(const PrimeModulus& m, const QuadraticPoly& f);

}  // namespace parabola
