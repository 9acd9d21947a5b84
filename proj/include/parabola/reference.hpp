#pragma once

// Literal, unoptimised versions of the production kernels. Tests compare the
// fast kernels against these, and bench/ measures the gap.

#include <cstdint>
#include <optional>
#include <vector>

#include "parabola/field.hpp"
#include "parabola/point_sets.hpp"
#include "parabola/projections.hpp"
#include "parabola/projective.hpp"

namespace parabola::reference {

/// Counts membership point by point along each line.
ProjectionTable projection_naive(const ColumnIntervalSet& s, Direction d);

/// Max |sum_{x=a}^{b} chi(x)| over all 0 <= a <= b <= p-1, O(p^2).
std::int64_t max_abs_interval_naive(const PrimeModulus& m);

/// Scans every 3x3 matrix over F_p. Only sensible for p <= 5.
std::vector<Projectivity> stabilizer_naive(const PrimeModulus& m, const BitPointSet& s);

/// Scans every (A, t) in AGL(2,p) in lexicographic order.
std::optional<AffineMap> isomorphic_affine_naive(const BitPointSet& a, const BitPointSet& b);

}  // namespace parabola::reference
