#include "helfer/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helfer {

void validate(const GridSpec& g) {
  if (g.count == 1) {
    if (g.min != g.max) {
      throw std::invalid_argument(
          "GridSpec: a singleton grid requires min == max");
    }
    if (g.scale == GridSpec::Scale::log && !(g.min > 0.0)) {
      throw std::invalid_argument("GridSpec: log scale requires min > 0");
    }
    return;
  }
  if (g.count < 2) {
    throw std::invalid_argument("GridSpec: count must be >= 2, got " +
                                std::to_string(g.count));
  }
  if (!(g.min < g.max)) {
    throw std::invalid_argument("GridSpec: min must be below max, got [" +
                                std::to_string(g.min) + ", " +
                                std::to_string(g.max) + "]");
  }
  if (g.scale == GridSpec::Scale::log && !(g.min > 0.0)) {
    throw std::invalid_argument("GridSpec: log scale requires min > 0");
  }
}

std::vector<double> grid_points(const GridSpec& g) {
  validate(g);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(g.count));
  if (g.count == 1) {
    pts.push_back(g.min);
    return pts;
  }
  if (g.scale == GridSpec::Scale::linear) {
    const double step = (g.max - g.min) / (g.count - 1);
    for (int i = 0; i < g.count; ++i) pts.push_back(g.min + i * step);
  } else {
    const double lmin = std::log(g.min);
    const double step = (std::log(g.max) - lmin) / (g.count - 1);
    for (int i = 0; i < g.count; ++i) pts.push_back(std::exp(lmin + i * step));
  }
  // pin the endpoints exactly
  pts.front() = g.min;
  pts.back() = g.max;
  return pts;
}

}  // namespace helfer
