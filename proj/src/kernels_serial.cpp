#include "msdiff/kernels.hpp"
#include "node_flux.hpp"

namespace msdiff::kernels::serial {

void forward_difference(std::span<const double> field, double dx,
                        std::span<double> out) {
  for (std::size_t j = 0; j < field.size(); ++j) {
    out[j] = detail::forward_at(field, dx, j);
  }
}

void backward_difference(std::span<const double> field, double dx,
                         std::span<double> out) {
  for (std::size_t j = 0; j < field.size(); ++j) {
    out[j] = detail::backward_at(field, dx, j);
  }
}

long node_fluxes(const MixtureSpec& spec, const MixtureCoefficients& coeffs,
                 std::span<const double> xi1, std::span<const double> xi2,
                 double dx, FluxBoundary boundary, std::span<double> n1,
                 std::span<double> n2) {
  const std::size_t last = xi1.size() - 1;
  for (std::size_t j = 0; j <= last; ++j) {
    if (detail::is_zeroed(boundary, j, last)) {
      n1[j] = 0.0;
      n2[j] = 0.0;
      continue;
    }
    const double rhs1 = -detail::backward_at(xi1, dx, j);
    const double rhs2 = -detail::backward_at(xi2, dx, j);
    if (!detail::solve_at(spec, coeffs, xi1[j], xi2[j], rhs1, rhs2, n1[j],
                          n2[j])) {
      return static_cast<long>(j);
    }
  }
  return -1;
}

void conservative_update(std::span<const double> base,
                         std::span<const double> flux, double dt, double dx,
                         std::span<double> out) {
  for (std::size_t j = 0; j < base.size(); ++j) {
    out[j] = base[j] + dt * detail::forward_at(flux, dx, j);
  }
}

}  // namespace msdiff::kernels::serial
