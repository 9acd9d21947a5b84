#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabola/exec.hpp"
#include "parabola/field.hpp"
#include "parabola/point_sets.hpp"
#include "parabola/projections.hpp"
#include "parabola/projective.hpp"

namespace parabola {

inline constexpr std::uint64_t kDefaultPglCap = 13;
inline constexpr std::uint64_t kDefaultAglCap = 11;
inline constexpr std::uint64_t kDefaultProbeSeed = 0x9e3779b97f4a7c15ULL;

/// PARABOLA_MAX_SEARCH_P when set to a positive integer, else fallback.
std::uint64_t search_cap_from_env(std::uint64_t fallback);

struct SearchOptions {
  Exec exec = Exec::parallel;
  std::uint64_t max_p = kDefaultPglCap;
  std::uint64_t seed = kDefaultProbeSeed;
  std::size_t probe_count = 32;

  static SearchOptions pgl_defaults();
  static SearchOptions agl_defaults();
};

/// Up to `count` points of pts chosen by a seeded Fisher-Yates prefix.
/// mt19937_64 output is fully specified, so the choice is portable.
std::vector<AffinePoint> select_probes(const std::vector<AffinePoint>& pts, std::size_t count,
                                       std::uint64_t seed);

/// Setwise stabilizer of s in PGL(3,p), sorted by canonical entries.
///
/// Exhaustive over canonical representatives. A candidate whose third row
/// vanishes at a point of s sends that point to the line at infinity and is
/// skipped without enumerating the other rows; every remaining candidate is
/// checked on the probe points and then on all of s. Throws TooLarge when
/// p > opts.max_p.
std::vector<Projectivity> stabilizer_bruteforce(const PrimeModulus& m, const BitPointSet& s,
                                                const SearchOptions& opts = SearchOptions::pgl_defaults());

/// Stabilizing maps among (X, Y, Z) -> (aX + bZ, Y, Z), a != 0. For a set below
/// alpha X^2 + gamma and p >= 97 this is the full stabilizer.
std::vector<Projectivity> stabilizer_structured(const PrimeModulus& m, const ColumnIntervalSet& s,
                                                Exec exec = Exec::parallel);

/// Sorted multiset of |l ∩ S| over the p + 1 lines l through a point.
struct SpectrumFingerprint {
  ProjectivePoint point;
  std::vector<std::int64_t> multiset;
  std::int64_t distinct_count = 0;
  /// Number of k with both k and k+1 among the distinct values.
  std::int64_t consecutive_pair_count = 0;
};

SpectrumFingerprint spectrum_fingerprint(const ColumnIntervalSet& s, ProjectivePoint P);
/// Same, reusing tables from projection_all(s).
SpectrumFingerprint spectrum_fingerprint(const std::vector<ProjectionTable>& tables,
                                         const ColumnIntervalSet& s, ProjectivePoint P);

/// Isomorphism invariant under AGL(2,p): the sorted list of per-direction
/// sorted spectra.
std::vector<std::vector<std::int64_t>> direction_spectra_invariant(const BitPointSet& s);

/// An affine map carrying a onto b, or empty. Identical sets give the
/// identity. Throws TooLarge when p > opts.max_p.
std::optional<AffineMap> isomorphic_affine(const PrimeModulus& m, const BitPointSet& a,
                                           const BitPointSet& b,
                                           const SearchOptions& opts = SearchOptions::agl_defaults());

enum class CoefficientClass { square, nonsquare };
const char* to_string(CoefficientClass c);

struct RecoveredParameters {
  CoefficientClass coefficient = CoefficientClass::square;
  Elem gamma;
  Variant variant = Variant::lt;

  friend bool operator==(const RecoveredParameters&, const RecoveredParameters&) = default;
};

/// Reads (class of alpha, gamma, lt|le) off pr_{S,inf} of a set below or on
/// alpha X^2 + gamma. A zero count means lt; otherwise the set is reported
/// as le (lt(g+1) and le(g) coincide when g never takes -1).
/// Throws NotAParabolaSet when the counts do not fit that shape.
RecoveredParameters recover_parameters(const PrimeModulus& m, const ColumnIntervalSet& s);

struct ClassMember {
  Elem alpha;
  Elem gamma;
  Variant variant = Variant::lt;
  std::size_t label = 0;
  RecoveredParameters recovered;
};

struct OracleResult {
  std::size_t class_count = 0;
  bool agrees = true;
  std::vector<std::size_t> labels;  // per member, first-appearance numbering
  /// Member index pairs where oracle and invariant classifier disagree.
  std::vector<std::pair<std::size_t, std::size_t>> discrepancies;
};

struct ClassificationReport {
  std::uint64_t p = 0;
  Elem nonsquare;
  std::vector<ClassMember> members;
  std::size_t class_count = 0;
  std::size_t expected_count = 0;  // 3p + 1
  /// 4p minus the pairs lt(g+1) = le(g) with g never taking -1.
  std::size_t merge_rule_count = 0;
  std::optional<OracleResult> oracle;
};

struct ClassifyOptions {
  bool run_oracle = false;
  SearchOptions search = SearchOptions::agl_defaults();
};

/// Classifies {lt, le} x {X^2 + gamma, alpha X^2 + gamma} for the least
/// nonsquare alpha by the pr_{S,inf} multiset; optionally runs the exhaustive
/// AGL(2,p) oracle alongside.
ClassificationReport classify_family(const PrimeModulus& m, const ClassifyOptions& opts = {});

nlohmann::ordered_json to_json(const ClassificationReport& r);
nlohmann::ordered_json to_json(const Projectivity& g);

}  // namespace parabola
