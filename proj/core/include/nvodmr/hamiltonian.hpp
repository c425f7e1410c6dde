#pragma once

#include "nvodmr/spin_register.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace nvodmr {

inline constexpr double kDefaultZfsD = 2870.0;        // MHz
inline constexpr double kDefaultGammaE = 2.8025;      // MHz/G
inline constexpr double kGammaC13 = 1.0705e-3;        // MHz/G

// Axial zero-field splitting D and transverse strain E, both MHz.
class ZfsParams {
public:
    // Throws std::invalid_argument unless D > 0 and |E| < D.
    ZfsParams(double d_mhz, double e_mhz);

    double d() const noexcept { return d_; }
    double e() const noexcept { return e_; }

private:
    double d_;
    double e_;
};

// External field in the cubic crystal frame, Gauss.
struct FieldSpec {
    Eigen::Vector3d b_crystal_gauss = Eigen::Vector3d::Zero();
    double gamma_e = kDefaultGammaE;

    void validate() const;
};

// One explicitly treated 13C site. The coupling is stored as the electron-z
// row of the hyperfine tensor in the NV frame; a full 3x3 tensor may be
// attached, in which case its z row is the coupling row.
class HyperfineCoupling {
public:
    HyperfineCoupling(std::string label, const Eigen::Vector3d& a_row_mhz);
    HyperfineCoupling(std::string label, const Eigen::Matrix3d& full_tensor_mhz);

    static HyperfineCoupling axial(std::string label, double a_mhz);

    const std::string& label() const noexcept { return label_; }
    const Eigen::Vector3d& a_row() const noexcept { return a_row_; }
    const std::optional<Eigen::Matrix3d>& full_tensor() const noexcept { return full_tensor_; }
    double magnitude() const { return a_row_.norm(); }

private:
    std::string label_;
    Eigen::Vector3d a_row_;
    std::optional<Eigen::Matrix3d> full_tensor_;
};

// Bit n set: site n holds a 13C. Bit clear: spinless 12C, coupling dropped.
using OccupancyMask = std::uint64_t;

inline constexpr int kMaxOccupancyBits = 64;

constexpr OccupancyMask all_occupied(int n_sites) noexcept {
    return n_sites >= kMaxOccupancyBits ? ~OccupancyMask{0}
                                        : (OccupancyMask{1} << n_sites) - 1;
}

constexpr bool is_occupied(OccupancyMask mask, int site) noexcept {
    return ((mask >> site) & 1U) != 0;
}

struct HamiltonianOptions {
    // Adds -gamma_n/gamma_e * b . s_n for every occupied nucleus.
    bool nuclear_zeeman = false;
    double nuclear_gamma_ratio = kGammaC13 / kDefaultGammaE;
};

// D S_z^2 + E (S_x^2 - S_y^2) + b . S for b in MHz (NV frame).
Eigen::Matrix3cd electron_hamiltonian(const ZfsParams& zfs, const Eigen::Vector3d& b_nv_mhz);

// Full NV + nuclei Hamiltonian in the register's product basis. Couplings use
// the z row (S_z (x) a.s) unless a full tensor is attached.
Eigen::MatrixXcd build_hamiltonian(const ZfsParams& zfs, const Eigen::Vector3d& b_nv_mhz,
                                   std::span<const HyperfineCoupling> couplings,
                                   OccupancyMask occupancy, const SpinRegister& reg,
                                   const HamiltonianOptions& options = {});

}  // namespace nvodmr
