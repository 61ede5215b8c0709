#include <algorithm>
#include <cstdint>
#include <limits>

#include "msdiff/kernels.hpp"
#include "node_flux.hpp"

namespace msdiff::kernels::omp {

void forward_difference(std::span<const double> field, double dx,
                        std::span<double> out) {
  const auto n = static_cast<std::int64_t>(field.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    out[j] = detail::forward_at(field, dx, static_cast<std::size_t>(j));
  }
}

void backward_difference(std::span<const double> field, double dx,
                         std::span<double> out) {
  const auto n = static_cast<std::int64_t>(field.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    out[j] = detail::backward_at(field, dx, static_cast<std::size_t>(j));
  }
}

long node_fluxes(const MixtureSpec& spec, const MixtureCoefficients& coeffs,
                 std::span<const double> xi1, std::span<const double> xi2,
                 double dx, FluxBoundary boundary, std::span<double> n1,
                 std::span<double> n2) {
  const auto n = static_cast<std::int64_t>(xi1.size());
  const std::size_t last = xi1.size() - 1;
  std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first_bad)
  for (std::int64_t jj = 0; jj < n; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    if (detail::is_zeroed(boundary, j, last)) {
      n1[j] = 0.0;
      n2[j] = 0.0;
      continue;
    }
    const double rhs1 = -detail::backward_at(xi1, dx, j);
    const double rhs2 = -detail::backward_at(xi2, dx, j);
    if (!detail::solve_at(spec, coeffs, xi1[j], xi2[j], rhs1, rhs2, n1[j],
                          n2[j])) {
      first_bad = std::min(first_bad, jj);
    }
  }
  return first_bad == std::numeric_limits<std::int64_t>::max()
             ? -1
             : static_cast<long>(first_bad);
}

void conservative_update(std::span<const double> base,
                         std::span<const double> flux, double dt, double dx,
                         std::span<double> out) {
  const auto n = static_cast<std::int64_t>(base.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    out[jj] = base[jj] + dt * detail::forward_at(flux, dx, jj);
  }
}

}  // namespace msdiff::kernels::omp
