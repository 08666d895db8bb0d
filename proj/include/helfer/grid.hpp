#pragma once

#include <vector>

namespace helfer {

//! 1D sampling grid. Regular grids need count >= 2 and min < max; a
//! singleton grid (count == 1, min == max) pins a coordinate for sweeps
//! where the other axis varies.
struct GridSpec {
  enum class Scale { linear, log };

  double min = 0.0;
  double max = 1.0;
  int count = 2;
  Scale scale = Scale::linear;
};

//! Throws std::invalid_argument if the grid violates its invariants
//! (reversed bounds, count < 1, log scale with min <= 0).
void validate(const GridSpec& g);

//! Materializes the grid, endpoints included.
std::vector<double> grid_points(const GridSpec& g);

inline GridSpec linear_grid(double min, double max, int count) {
  return {min, max, count, GridSpec::Scale::linear};
}

inline GridSpec log_grid(double min, double max, int count) {
  return {min, max, count, GridSpec::Scale::log};
}

inline GridSpec singleton_grid(double value) {
  return {value, value, 1, GridSpec::Scale::linear};
}

}  // namespace helfer
