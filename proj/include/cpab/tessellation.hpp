#pragma once

#include "cpab/types.hpp"

namespace cpab {

struct DomainBounds {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;

  bool valid() const { return xmin < xmax && ymin < ymax; }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  bool contains(const Vec2 &p) const {
    return p.x() >= xmin && p.x() <= xmax && p.y() >= ymin && p.y() <= ymax;
  }
};

bool operator==(const DomainBounds &a, const DomainBounds &b);

// Axis-aligned rectangle of one cell.
struct CellRect {
  double xmin, xmax, ymin, ymax;
};

// Regular partition of the domain into nx-by-ny equal rectangular cells,
// indexed row-major: id = row*nx + col.
struct Tessellation {
  int nx = 1;
  int ny = 1;
  DomainBounds bounds;

  int n_cells() const { return nx * ny; }
  double cell_width() const { return bounds.width() / nx; }
  double cell_height() const { return bounds.height() / ny; }
  CellRect cell_rect(int id) const;
};

bool operator==(const Tessellation &a, const Tessellation &b);

Tessellation build_tessellation(int nx, int ny, DomainBounds bounds = {});

// Clamps a point to the domain.
Vec2 clamp_to_domain(const Tessellation &tess, const Vec2 &p);

// Cell id containing x. Out-of-domain points are clamped first; points
// exactly on a shared border resolve to the smaller of the adjacent ids.
int cell_index(const Tessellation &tess, const Vec2 &x);

// Maps pixel (px, py) of a height-by-width image to the center of that pixel
// in normalized coordinates.
Vec2 pixel_center(int px, int py, int width, int height,
                  const DomainBounds &bounds = {});

} // namespace cpab
