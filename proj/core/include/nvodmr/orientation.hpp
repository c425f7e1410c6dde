#pragma once

#include <Eigen/Core>

#include <array>

namespace nvodmr {

inline constexpr int kOrientationCount = 4;

// Unit NV axes [111], [-1-11], [-11-1], [1-1-1] in the crystal frame.
const std::array<Eigen::Vector3d, kOrientationCount>& nv_axes();

// Rows are the NV-frame x, y, z axes in crystal coordinates. z is the NV axis;
// x lies in the plane spanned by z and crystal [001].
Eigen::Matrix3d nv_frame(int orientation);

// gamma_e * B expressed in the NV frame of `orientation`, MHz.
Eigen::Vector3d orientation_field(const Eigen::Vector3d& b_crystal_gauss, int orientation,
                                  double gamma_e);

}  // namespace nvodmr
