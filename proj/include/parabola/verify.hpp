#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabola/field.hpp"
#include "parabola/poly.hpp"
#include "parabola/symmetry.hpp"

namespace parabola {

/// Proven-claim checks. Each one gates the exit status of `verify`.
enum class Check {
  shift,
  interval,
  step,
  size,
  lebesgue,
  pv,
  csikvari,
  jacobsthal,
  diagonal_special,
  order_reversal,
  reflection,
};

const char* to_string(Check c);
/// Throws std::invalid_argument for unknown names.
Check parse_check(const std::string& name);
std::vector<Check> all_checks();

/// "3..199", "5,7,11", "13", or mixtures like "3..31,97". Ranges keep only odd
/// primes; explicitly listed values must be odd primes (NotOddPrime otherwise).
/// Result is sorted and deduplicated.
std::vector<std::uint64_t> parse_prime_spec(const std::string& spec);

/// gamma values used by the sweep: all of F_p for p <= 50, otherwise a
/// deduplicated sample containing 0, 1 and (p-1)/2.
std::vector<std::uint64_t> gamma_grid(std::uint64_t p);

/// alpha in {1, least nonsquare} x beta in {0, 1} x gamma_grid(p).
std::vector<QuadraticPoly> sweep_grid(const PrimeModulus& m);

struct VerifyConfig {
  std::vector<std::uint64_t> primes;
  std::vector<Check> checks;
  /// Stabilizer orders and class counts, reported but never gating.
  bool observations = false;
  /// Brute-force PGL observations only up to this p.
  std::uint64_t brute_observe_max_p = 7;
  std::uint64_t seed = kDefaultProbeSeed;
  int threads = 0;
};

struct CheckOutcome {
  Check check = Check::shift;
  bool ok = true;
  std::int64_t cases = 0;
  nlohmann::ordered_json failure;  // null when ok
};

struct PrimeReport {
  std::uint64_t p = 0;
  std::vector<CheckOutcome> outcomes;
  nlohmann::ordered_json observations;  // null unless requested
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<PrimeReport> primes;  // ascending p

  bool ok() const;
};

/// Runs one check at one prime, serially.
CheckOutcome run_check(const PrimeModulus& m, Check c, const VerifyConfig& cfg);

/// Runs every configured check at every prime. Primes are processed in
/// parallel; the report is ordered by p and independent of thread count.
VerifyReport run_verify(const VerifyConfig& cfg);

nlohmann::ordered_json to_json(const VerifyReport& r);
std::string to_text(const nlohmann::ordered_json& report);

inline constexpr const char* kReportSchema = "parabola-report/1";

}  // namespace parabola
