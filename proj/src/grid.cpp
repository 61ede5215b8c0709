#include "msdiff/grid.hpp"

#include <string>

#include "msdiff/error.hpp"
#include "msdiff/kernels.hpp"

namespace msdiff {

Grid1D build_grid(int j_max) {
  if (j_max < 2) {
    throw ValidationError("j_max must be >= 2, got " + std::to_string(j_max));
  }
  return Grid1D(j_max, 1.0 / static_cast<double>(j_max));
}

namespace {

void check_length(const NodalField& field, const Grid1D& grid) {
  if (field.size() != grid.node_count()) {
    throw ValidationError("field has " + std::to_string(field.size()) +
                          " entries, grid has " +
                          std::to_string(grid.node_count()) + " nodes");
  }
}

}  // namespace

NodalField diff_forward(const NodalField& field, const Grid1D& grid) {
  check_length(field, grid);
  NodalField out(field.size(), 0.0, Quantity::gradient);
  kernels::serial::forward_difference(field.values, grid.dx(), out.values);
  return out;
}

NodalField diff_backward(const NodalField& field, const Grid1D& grid) {
  check_length(field, grid);
  NodalField out(field.size(), 0.0, Quantity::gradient);
  kernels::serial::backward_difference(field.values, grid.dx(), out.values);
  return out;
}

}  // namespace msdiff
