#pragma once

#include <cstddef>
#include <vector>

namespace sig6 {

/// count evenly spaced points from start to stop, both included.
/// A single-point grid is {start}.
inline std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> points;
  points.reserve(count);
  if (count == 1) {
    points.push_back(start);
    return points;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(i + 1 == count ? stop : start + step * static_cast<double>(i));
  }
  return points;
}

}  // namespace sig6
