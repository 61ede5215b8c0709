#include "msdiff/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "msdiff/error.hpp"
#include "msdiff/format.hpp"

namespace msdiff {

double MixtureSpec::max_diffusivity() const {
  return std::max({d12, d13, d23});
}

void validate(const MixtureSpec& spec) {
  auto check = [](double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw ValidationError(std::string("diffusivity ") + name +
                            " must be finite and positive, got " +
                            format_double(value));
    }
  };
  check(spec.d12, "d12");
  check(spec.d13, "d13");
  check(spec.d23, "d23");
}

MixtureCoefficients derive_coefficients(const MixtureSpec& spec) {
  validate(spec);
  return {1.0 / spec.d12 - 1.0 / spec.d13, 1.0 / spec.d12 - 1.0 / spec.d23};
}

bool is_admissible(const NodeComposition& node, double tol) {
  return std::isfinite(node.xi1) && std::isfinite(node.xi2) &&
         node.xi1 >= -tol && node.xi2 >= -tol &&
         node.xi1 + node.xi2 <= 1.0 + tol;
}

FluxMatrix2 FluxMatrix2::operator*(const FluxMatrix2& r) const {
  return {a * r.a + b * r.c, a * r.b + b * r.d,
          c * r.a + d * r.c, c * r.b + d * r.d};
}

double FluxMatrix2::max_abs_deviation_from_identity() const {
  return std::max({std::abs(a - 1.0), std::abs(b), std::abs(c),
                   std::abs(d - 1.0)});
}

FluxMatrix2 flux_system_matrix(const MixtureCoefficients& coeffs,
                               const NodeComposition& node,
                               const MixtureSpec& spec) {
  return {1.0 / spec.d13 + coeffs.alpha * node.xi2, -coeffs.alpha * node.xi1,
          -coeffs.beta * node.xi2, 1.0 / spec.d23 + coeffs.beta * node.xi1};
}

double flux_system_denominator(const MixtureCoefficients& coeffs,
                               const NodeComposition& node,
                               const MixtureSpec& spec) {
  return 1.0 + coeffs.alpha * spec.d13 * node.xi2 +
         coeffs.beta * spec.d23 * node.xi1;
}

FluxMatrix2 flux_system_inverse(const MixtureCoefficients& coeffs,
                                const NodeComposition& node,
                                const MixtureSpec& spec) {
  const double denom = flux_system_denominator(coeffs, node, spec);
  // Negated comparison so that NaN also lands here.
  if (!(std::abs(denom) >= kSingularTolerance)) {
    throw SingularSystemError(
        "singular flux system: denominator " + format_double(denom) +
        " at composition (" + format_double(node.xi1) + ", " +
        format_double(node.xi2) + ")");
  }
  const double gamma = spec.d13 * spec.d23 / denom;
  return {gamma * (1.0 / spec.d23 + coeffs.beta * node.xi1),
          gamma * (coeffs.alpha * node.xi1),
          gamma * (coeffs.beta * node.xi2),
          gamma * (1.0 / spec.d13 + coeffs.alpha * node.xi2)};
}

NodeFlux solve_node_fluxes(const MixtureCoefficients& coeffs,
                           const NodeComposition& node,
                           const MixtureSpec& spec, double rhs1, double rhs2) {
  const FluxMatrix2 inv = flux_system_inverse(coeffs, node, spec);
  return {inv.a * rhs1 + inv.b * rhs2 + 0.0, inv.c * rhs1 + inv.d * rhs2 + 0.0};
}

}  // namespace msdiff
