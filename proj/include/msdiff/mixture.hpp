#pragma once

// Ternary Maxwell-Stefan mixture: binary diffusivities, the reduced
// coefficients alpha/beta, and the per-node 2x2 flux system
//
//   [ 1/D13 + alpha*xi2     -alpha*xi1      ] [N1]   [-dx xi1]
//   [   -beta*xi2       1/D23 + beta*xi1    ] [N2] = [-dx xi2]
//
// together with its closed-form inverse.

namespace msdiff {

inline constexpr double kSingularTolerance = 1e-12;
inline constexpr double kSimplexTolerance = 1e-9;

struct MixtureSpec {
  double d12 = 0.0;
  double d13 = 0.0;
  double d23 = 0.0;

  double max_diffusivity() const;
};

/// Throws ValidationError unless all three diffusivities are finite and > 0.
void validate(const MixtureSpec& spec);

struct MixtureCoefficients {
  double alpha = 0.0;  // 1/D12 - 1/D13
  double beta = 0.0;   // 1/D12 - 1/D23
};

MixtureCoefficients derive_coefficients(const MixtureSpec& spec);

struct NodeComposition {
  double xi1 = 0.0;
  double xi2 = 0.0;

  double xi3() const { return 1.0 - xi1 - xi2; }
};

bool is_admissible(const NodeComposition& node,
                   double tol = kSimplexTolerance);

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct FluxMatrix2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  FluxMatrix2 operator*(const FluxMatrix2& rhs) const;
  double max_abs_deviation_from_identity() const;
};

struct NodeFlux {
  double n1 = 0.0;
  double n2 = 0.0;
};

FluxMatrix2 flux_system_matrix(const MixtureCoefficients& coeffs,
                               const NodeComposition& node,
                               const MixtureSpec& spec);

/// Denominator of the closed-form inverse, 1 + alpha*D13*xi2 + beta*D23*xi1.
double flux_system_denominator(const MixtureCoefficients& coeffs,
                               const NodeComposition& node,
                               const MixtureSpec& spec);

/// gamma * [[1/D23 + beta*xi1, alpha*xi1], [beta*xi2, 1/D13 + alpha*xi2]]
/// with gamma = D13*D23 / denominator. Throws SingularSystemError when the
/// denominator is below kSingularTolerance in magnitude (or not finite).
FluxMatrix2 flux_system_inverse(const MixtureCoefficients& coeffs,
                                const NodeComposition& node,
                                const MixtureSpec& spec);

/// (N1, N2) = inverse * (rhs1, rhs2), where rhs is the negated gradient.
NodeFlux solve_node_fluxes(const MixtureCoefficients& coeffs,
                           const NodeComposition& node,
                           const MixtureSpec& spec, double rhs1, double rhs2);

}  // namespace msdiff
