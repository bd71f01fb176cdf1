#include "cpab/tessellation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cpab {

bool operator==(const DomainBounds &a, const DomainBounds &b) {
  return a.xmin == b.xmin && a.xmax == b.xmax && a.ymin == b.ymin &&
         a.ymax == b.ymax;
}

bool operator==(const Tessellation &a, const Tessellation &b) {
  return a.nx == b.nx && a.ny == b.ny && a.bounds == b.bounds;
}

CellRect Tessellation::cell_rect(int id) const {
  const int row = id / nx;
  const int col = id % nx;
  const double w = cell_width();
  const double h = cell_height();
  return CellRect{bounds.xmin + col * w, bounds.xmin + (col + 1) * w,
                  bounds.ymin + row * h, bounds.ymin + (row + 1) * h};
}

Tessellation build_tessellation(int nx, int ny, DomainBounds bounds) {
  if (nx < 1 || ny < 1)
    throw std::invalid_argument("build_tessellation: cell counts must be >= 1, got " +
                                std::to_string(nx) + "x" + std::to_string(ny));
  if (!bounds.valid())
    throw std::invalid_argument("build_tessellation: invalid domain bounds");
  return Tessellation{nx, ny, bounds};
}

Vec2 clamp_to_domain(const Tessellation &tess, const Vec2 &p) {
  const DomainBounds &b = tess.bounds;
  return Vec2(std::min(std::max(p.x(), b.xmin), b.xmax),
              std::min(std::max(p.y(), b.ymin), b.ymax));
}

namespace {

// Points exactly on an interior border belong to the lower-index cell, so the
// axis index is ceil(t)-1 rather than floor(t).
inline int axis_index(double coord, double origin, double cell_size, int n) {
  const double t = (coord - origin) / cell_size;
  int k = static_cast<int>(std::ceil(t)) - 1;
  if (k < 0) k = 0;
  if (k > n - 1) k = n - 1;
  return k;
}

} // namespace

int cell_index(const Tessellation &tess, const Vec2 &x) {
  const Vec2 p = clamp_to_domain(tess, x);
  const int col = axis_index(p.x(), tess.bounds.xmin, tess.cell_width(), tess.nx);
  const int row = axis_index(p.y(), tess.bounds.ymin, tess.cell_height(), tess.ny);
  return row * tess.nx + col;
}

Vec2 pixel_center(int px, int py, int width, int height,
                  const DomainBounds &bounds) {
  return Vec2(bounds.xmin + (px + 0.5) / width * bounds.width(),
              bounds.ymin + (py + 0.5) / height * bounds.height());
}

} // namespace cpab
