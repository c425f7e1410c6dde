#include "nvodmr/orientation.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>
#include <string>

namespace nvodmr {

const std::array<Eigen::Vector3d, kOrientationCount>& nv_axes() {
    static const std::array<Eigen::Vector3d, kOrientationCount> axes = [] {
        const double s = 1.0 / std::sqrt(3.0);
        return std::array<Eigen::Vector3d, kOrientationCount>{
            Eigen::Vector3d(1, 1, 1) * s,
            Eigen::Vector3d(-1, -1, 1) * s,
            Eigen::Vector3d(-1, 1, -1) * s,
            Eigen::Vector3d(1, -1, -1) * s,
        };
    }();
    return axes;
}

Eigen::Matrix3d nv_frame(int orientation) {
    if (orientation < 0 || orientation >= kOrientationCount) {
        throw std::out_of_range("NV orientation index " + std::to_string(orientation));
    }
    const Eigen::Vector3d z = nv_axes()[static_cast<std::size_t>(orientation)];
    const Eigen::Vector3d c001(0.0, 0.0, 1.0);
    const Eigen::Vector3d x = (c001 - z.dot(c001) * z).normalized();
    const Eigen::Vector3d y = z.cross(x);
    Eigen::Matrix3d frame;
    frame.row(0) = x.transpose();
    frame.row(1) = y.transpose();
    frame.row(2) = z.transpose();
    return frame;
}

Eigen::Vector3d orientation_field(const Eigen::Vector3d& b_crystal_gauss, int orientation,
                                  double gamma_e) {
    return gamma_e * (nv_frame(orientation) * b_crystal_gauss);
}

}  // namespace nvodmr
