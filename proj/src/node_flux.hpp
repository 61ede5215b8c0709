#pragma once

// Shared per-node expressions for the serial and OpenMP kernels. Keeping a
// single definition is what makes the two backends bit-identical.

#include <cmath>
#include <cstddef>
#include <span>

#include "msdiff/kernels.hpp"
#include "msdiff/mixture.hpp"

namespace msdiff::kernels::detail {

inline double forward_at(std::span<const double> f, double dx, std::size_t j) {
  return j == 0 ? -f[0] / dx : (f[j - 1] - f[j]) / dx;
}

inline double backward_at(std::span<const double> f, double dx,
                          std::size_t j) {
  const std::size_t last = f.size() - 1;
  return j == last ? -f[last] / dx : (f[j + 1] - f[j]) / dx;
}

inline bool is_zeroed(FluxBoundary boundary, std::size_t j, std::size_t last) {
  return j == last || (boundary == FluxBoundary::end_nodes && j == 0);
}

/// Same arithmetic as flux_system_inverse followed by the matrix-vector
/// product in solve_node_fluxes. Returns false when the system is singular.
inline bool solve_at(const MixtureSpec& spec, const MixtureCoefficients& c,
                     double xi1, double xi2, double rhs1, double rhs2,
                     double& n1, double& n2) {
  const double denom = 1.0 + c.alpha * spec.d13 * xi2 + c.beta * spec.d23 * xi1;
  if (!(std::abs(denom) >= kSingularTolerance)) return false;
  const double gamma = spec.d13 * spec.d23 / denom;
  const double a = gamma * (1.0 / spec.d23 + c.beta * xi1);
  const double b = gamma * (c.alpha * xi1);
  const double cc = gamma * (c.beta * xi2);
  const double d = gamma * (1.0 / spec.d13 + c.alpha * xi2);
  // "+ 0.0" maps a -0 result to +0 and leaves every other value unchanged.
  n1 = a * rhs1 + b * rhs2 + 0.0;
  n2 = cc * rhs1 + d * rhs2 + 0.0;
  return true;
}

}  // namespace msdiff::kernels::detail
