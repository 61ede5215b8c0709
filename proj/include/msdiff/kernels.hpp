#pragma once

// Data-parallel node kernels behind the time steppers. Every kernel has a
// serial reference implementation and an OpenMP implementation; both
// evaluate each node with the same floating-point expression, so their
// outputs are bit-identical and the serial path doubles as the test oracle.

#include <span>
#include <string_view>

#include "msdiff/mixture.hpp"

namespace msdiff {

enum class Backend { serial, openmp };

std::string_view to_string(Backend backend);
/// Throws ValidationError for anything other than "serial" or "openmp".
Backend parse_backend(std::string_view text);

/// Which flux entries are forced to zero after the node solve.
///
/// outer_faces: only N_J. Flux N_j is the transport across the face between
///   node j and j+1 (it is built from D- at j), so N_J is the face beyond the
///   right wall; the left wall is already closed by the first row of D+.
/// end_nodes: N_0 and N_J, the literal reading. This also closes the face
///   between nodes 0 and 1, which decouples node 0 from the rest of the grid.
enum class FluxBoundary { outer_faces, end_nodes };

std::string_view to_string(FluxBoundary boundary);
FluxBoundary parse_flux_boundary(std::string_view text);

namespace kernels {

void forward_difference(std::span<const double> field, double dx,
                        std::span<double> out, Backend backend);

void backward_difference(std::span<const double> field, double dx,
                         std::span<double> out, Backend backend);

/// Per node: (N1, N2) = inverse(xi_j) * (-(D- xi1)_j, -(D- xi2)_j), then the
/// boundary entries selected by `boundary` are zeroed. Throws
/// SingularSystemError naming the lowest offending node.
void node_fluxes(const MixtureSpec& spec, const MixtureCoefficients& coeffs,
                 std::span<const double> xi1, std::span<const double> xi2,
                 double dx, FluxBoundary boundary, std::span<double> n1,
                 std::span<double> n2, Backend backend);

/// out = base + dt * (D+ N), the conservative update of one species.
/// With the lower-bidiagonal D+ this is base - dt * (discrete divergence).
void conservative_update(std::span<const double> base,
                         std::span<const double> flux, double dt, double dx,
                         std::span<double> out, Backend backend);

namespace serial {
void forward_difference(std::span<const double> field, double dx,
                        std::span<double> out);
void backward_difference(std::span<const double> field, double dx,
                         std::span<double> out);
long node_fluxes(const MixtureSpec& spec, const MixtureCoefficients& coeffs,
                 std::span<const double> xi1, std::span<const double> xi2,
                 double dx, FluxBoundary boundary, std::span<double> n1,
                 std::span<double> n2);
void conservative_update(std::span<const double> base,
                         std::span<const double> flux, double dt, double dx,
                         std::span<double> out);
}  // namespace serial

namespace omp {
void forward_difference(std::span<const double> field, double dx,
                        std::span<double> out);
void backward_difference(std::span<const double> field, double dx,
                         std::span<double> out);
long node_fluxes(const MixtureSpec& spec, const MixtureCoefficients& coeffs,
                 std::span<const double> xi1, std::span<const double> xi2,
                 double dx, FluxBoundary boundary, std::span<double> n1,
                 std::span<double> n2);
void conservative_update(std::span<const double> base,
                         std::span<const double> flux, double dt, double dx,
                         std::span<double> out);
}  // namespace omp

}  // namespace kernels
}  // namespace msdiff
