#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "patlock/errors.hpp"

namespace patlock {

// Rectangular grid of contact points, indexed 0..rows*cols-1 in row-major
// order. The stock configuration is the 3x3 layout.
struct GridSpec {
  int rows = 3;
  int cols = 3;

  constexpr int points() const { return rows * cols; }
  constexpr int row(int idx) const { return idx / cols; }
  constexpr int col(int idx) const { return idx % cols; }
  constexpr int index(int r, int c) const { return r * cols + c; }
  constexpr bool in_range(int idx) const { return idx >= 0 && idx < points(); }
  constexpr bool square() const { return rows == cols; }

  // Centered coordinates: origin at the grid center, x grows rightward,
  // y grows upward. Integer-valued on odd-sized grids.
  constexpr double x(int idx) const { return col(idx) - (cols - 1) / 2.0; }
  constexpr double y(int idx) const { return (rows - 1) / 2.0 - row(idx); }

  friend constexpr bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline void check_grid(const GridSpec& grid) {
  if (grid.rows < 2 || grid.cols < 2)
    raise(errc::invalid_argument, "grid must be at least 2x2");
}

// Lattice points lying strictly between a and b on the segment a->b.
// Returned in traversal order from a towards b. On 3x3 the result has at
// most one element (the midpoint); larger grids can yield several.
inline std::vector<int> intermediate_points(int a, int b, const GridSpec& grid) {
  if (!grid.in_range(a) || !grid.in_range(b))
    raise(errc::index_out_of_range, "contact point outside grid");
  if (a == b) raise(errc::invalid_argument, "segment endpoints coincide");
  const int dr = grid.row(b) - grid.row(a);
  const int dc = grid.col(b) - grid.col(a);
  const int g = std::gcd(dr < 0 ? -dr : dr, dc < 0 ? -dc : dc);
  std::vector<int> pts;
  for (int k = 1; k < g; ++k)
    pts.push_back(grid.index(grid.row(a) + k * dr / g, grid.col(a) + k * dc / g));
  return pts;
}

// Dihedral symmetries of the grid. Square grids admit all eight; other
// rectangles keep the four that preserve the aspect.
//   0 identity, 1 rot90, 2 rot180, 3 rot270,
//   4 mirror columns, 5 mirror rows, 6 transpose, 7 anti-transpose
inline std::vector<int> dihedral_symmetries(const GridSpec& grid) {
  if (grid.square()) return {0, 1, 2, 3, 4, 5, 6, 7};
  return {0, 2, 4, 5};
}

inline int transform_point(int idx, int sym, const GridSpec& grid) {
  const int r = grid.row(idx);
  const int c = grid.col(idx);
  const int R = grid.rows - 1;
  const int C = grid.cols - 1;
  switch (sym) {
    case 0: return grid.index(r, c);
    case 1: return grid.index(c, R - r);
    case 2: return grid.index(R - r, C - c);
    case 3: return grid.index(C - c, r);
    case 4: return grid.index(r, C - c);
    case 5: return grid.index(R - r, c);
    case 6: return grid.index(c, r);
    case 7: return grid.index(R - c, C - r);
    default: raise(errc::invalid_argument, "symmetry id out of range");
  }
}

}  // namespace patlock
