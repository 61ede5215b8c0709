#pragma once

#include <cstddef>
#include <vector>

namespace msdiff {

/// Uniform node layout on [0, 1]: nodes 0..J at x_j = j*dx, dx = 1/J.
class Grid1D {
 public:
  Grid1D() = default;

  int j_max() const { return j_max_; }
  double dx() const { return dx_; }
  std::size_t node_count() const { return static_cast<std::size_t>(j_max_) + 1; }
  double x(std::size_t j) const { return static_cast<double>(j) * dx_; }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  friend Grid1D build_grid(int j_max);
  Grid1D(int j_max, double dx) : j_max_(j_max), dx_(dx) {}

  int j_max_ = 0;
  double dx_ = 0.0;
};

/// Throws ValidationError for j_max < 2.
Grid1D build_grid(int j_max);

enum class Quantity { mole_fraction, flux, gradient };

struct NodalField {
  std::vector<double> values;
  Quantity quantity = Quantity::mole_fraction;

  NodalField() = default;
  NodalField(std::vector<double> v, Quantity q = Quantity::mole_fraction)
      : values(std::move(v)), quantity(q) {}
  NodalField(std::size_t n, double fill, Quantity q = Quantity::mole_fraction)
      : values(n, fill), quantity(q) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t j) { return values[j]; }
  double operator[](std::size_t j) const { return values[j]; }
};

/// Lower-bidiagonal upwind operator D+:
///   out_0 = -f_0/dx,  out_j = (f_{j-1} - f_j)/dx  for j >= 1.
NodalField diff_forward(const NodalField& field, const Grid1D& grid);

/// Upper-bidiagonal upwind operator D-:
///   out_j = (f_{j+1} - f_j)/dx  for j < J,  out_J = -f_J/dx.
NodalField diff_backward(const NodalField& field, const Grid1D& grid);

}  // namespace msdiff
