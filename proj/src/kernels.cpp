#include "msdiff/kernels.hpp"

#include <string>

#include "msdiff/error.hpp"
#include "msdiff/format.hpp"

namespace msdiff {

std::string_view to_string(Backend backend) {
  return backend == Backend::serial ? "serial" : "openmp";
}

Backend parse_backend(std::string_view text) {
  if (text == "serial") return Backend::serial;
  if (text == "openmp") return Backend::openmp;
  throw ValidationError("unknown backend '" + std::string(text) +
                        "' (valid: serial, openmp)");
}

std::string_view to_string(FluxBoundary boundary) {
  return boundary == FluxBoundary::outer_faces ? "outer-faces" : "end-nodes";
}

FluxBoundary parse_flux_boundary(std::string_view text) {
  if (text == "outer-faces") return FluxBoundary::outer_faces;
  if (text == "end-nodes") return FluxBoundary::end_nodes;
  throw ValidationError("unknown flux boundary '" + std::string(text) +
                        "' (valid: outer-faces, end-nodes)");
}

namespace kernels {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ValidationError("kernel size mismatch: " + std::to_string(a) +
                          " vs " + std::to_string(b));
  }
}

}  // namespace

void forward_difference(std::span<const double> field, double dx,
                        std::span<double> out, Backend backend) {
  require_same_size(field.size(), out.size());
  if (backend == Backend::openmp) {
    omp::forward_difference(field, dx, out);
  } else {
    serial::forward_difference(field, dx, out);
  }
}

void backward_difference(std::span<const double> field, double dx,
                         std::span<double> out, Backend backend) {
  require_same_size(field.size(), out.size());
  if (backend == Backend::openmp) {
    omp::backward_difference(field, dx, out);
  } else {
    serial::backward_difference(field, dx, out);
  }
}

void node_fluxes(const MixtureSpec& spec, const MixtureCoefficients& coeffs,
                 std::span<const double> xi1, std::span<const double> xi2,
                 double dx, FluxBoundary boundary, std::span<double> n1,
                 std::span<double> n2, Backend backend) {
  require_same_size(xi1.size(), xi2.size());
  require_same_size(xi1.size(), n1.size());
  require_same_size(xi1.size(), n2.size());
  if (xi1.size() < 2) throw ValidationError("kernel needs at least 2 nodes");
  const long bad =
      backend == Backend::openmp
          ? omp::node_fluxes(spec, coeffs, xi1, xi2, dx, boundary, n1, n2)
          : serial::node_fluxes(spec, coeffs, xi1, xi2, dx, boundary, n1, n2);
  if (bad >= 0) {
    const auto j = static_cast<std::size_t>(bad);
    throw SingularSystemError(
        "singular flux system at node " + std::to_string(bad) +
            " (xi1=" + format_double(xi1[j]) +
            ", xi2=" + format_double(xi2[j]) + ")",
        bad);
  }
}

void conservative_update(std::span<const double> base,
                         std::span<const double> flux, double dt, double dx,
                         std::span<double> out, Backend backend) {
  require_same_size(base.size(), flux.size());
  require_same_size(base.size(), out.size());
  if (backend == Backend::openmp) {
    omp::conservative_update(base, flux, dt, dx, out);
  } else {
    serial::conservative_update(base, flux, dt, dx, out);
  }
}

}  // namespace kernels
}  // namespace msdiff
