#pragma once

#include "cpab/tessellation.hpp"
#include "cpab/types.hpp"

#include <Eigen/Core>

namespace cpab {

// Linear continuity constraints for piecewise-affine fields on a tessellation.
// Each row forces agreement of two adjacent cells' affine maps at one border
// point in one coordinate; unknowns are the vectorized cell affines, cell
// blocks in ascending id order, each block row-major (a11,a12,a13,a21,a22,a23).
struct ConstraintMatrix {
  Eigen::MatrixXd entries; // rows x (6*n_cells)
  Tessellation tess;
  bool zero_boundary = false;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

// Orthonormal basis of the continuity-constraint null space. Each column of B
// is one basis velocity field in vectorized form.
struct CpaBasis {
  Tessellation tess;
  bool zero_boundary = false;
  int d = 0;         // null-space dimension
  Eigen::MatrixXd B; // (6*n_cells) x d, orthonormal columns
};

// Emits 4 rows per interior shared edge (two endpoints, two coordinates).
// With zero_boundary, additionally pins the boundary-normal velocity
// component to zero at the endpoints of every boundary edge, which keeps
// trajectories inside the domain (a velocity vanishing identically on the
// whole boundary is impossible for rectangular cells: it forces the zero
// field).
ConstraintMatrix build_constraint_matrix(const Tessellation &tess,
                                         bool zero_boundary = false);

// Null space of L via SVD; singular values below 1e-9 * sigma_max count as
// zero. Columns are taken from the factorization in order and sign-fixed so
// the largest-magnitude entry of each is positive, making rebuilds
// bit-identical.
CpaBasis compute_basis(const ConstraintMatrix &L);

CpaBasis build_basis(const Tessellation &tess, bool zero_boundary = false);

} // namespace cpab
