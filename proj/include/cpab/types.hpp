#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace cpab {

using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;
// Per-cell affine map, acting on homogeneous coordinates (x, y, 1).
using Affine2x3 = Eigen::Matrix<double, 2, 3>;

// Thrown when an integration or fit produces non-finite values
// (typically a pathological theta magnitude). CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string &what) : std::runtime_error(what) {}
};

// Thrown when a linear system has no unique solution (collinear control
// points and the like). Treated as invalid input.
class rank_deficient_error : public std::invalid_argument {
public:
  explicit rank_deficient_error(const std::string &what)
      : std::invalid_argument(what) {}
};

inline Affine2x3 identity_affine() {
  Affine2x3 a;
  a << 1, 0, 0, 0, 1, 0;
  return a;
}

} // namespace cpab
