#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace tracplan {

/// Row-major 2D grid geometry shared by all map types. Row h indexes the
/// world y direction, column w indexes x. A position exactly on a cell edge
/// belongs to the higher-index cell (floor semantics, consistent with how
/// histogram bin boundaries are assigned).
struct GridGeometry {
  int height = 0;
  int width = 0;
  double cell_size = 1.0;
  double origin_x = 0.0;  // world coordinates of the corner of cell (0, 0)
  double origin_y = 0.0;

  int cell_count() const { return height * width; }

  int flat_index(int h, int w) const { return h * width + w; }

  /// Flat cell index containing (x, y), or -1 when out of bounds.
  int cell_index(double x, double y) const {
    const double fw = std::floor((x - origin_x) / cell_size);
    const double fh = std::floor((y - origin_y) / cell_size);
    if (fh < 0.0 || fh >= static_cast<double>(height) || fw < 0.0 ||
        fw >= static_cast<double>(width)) {
      return -1;
    }
    return static_cast<int>(fh) * width + static_cast<int>(fw);
  }

  /// World coordinates of a cell center.
  double center_x(int w) const { return origin_x + (w + 0.5) * cell_size; }
  double center_y(int h) const { return origin_y + (h + 0.5) * cell_size; }

  bool same_shape(const GridGeometry& other) const {
    return height == other.height && width == other.width &&
           cell_size == other.cell_size && origin_x == other.origin_x &&
           origin_y == other.origin_y;
  }
};

template <typename T>
struct Grid {
  GridGeometry geom;
  std::vector<T> values;

  Grid() = default;
  Grid(const GridGeometry& g, T fill = T{})
      : geom(g), values(static_cast<std::size_t>(g.cell_count()), fill) {}

  T& at(int h, int w) { return values[static_cast<std::size_t>(geom.flat_index(h, w))]; }
  const T& at(int h, int w) const {
    return values[static_cast<std::size_t>(geom.flat_index(h, w))];
  }
};

}  // namespace tracplan
