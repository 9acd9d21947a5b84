#pragma once

namespace parabola {

/// Execution policy for data-parallel kernels. Results never depend on it.
enum class Exec { serial, parallel };

/// Sets the OpenMP thread count for subsequent parallel kernels; 0 keeps
/// the runtime default.
void set_parallel_width(int threads);
int parallel_width();

}  // namespace parabola
