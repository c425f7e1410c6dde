#include "nvodmr/hamiltonian.hpp"

#include "nvodmr/spin_operators.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace nvodmr {

namespace {

void require_finite(const Eigen::Vector3d& v, const char* what) {
    if (!v.allFinite()) {
        throw std::invalid_argument(std::string(what) + " has non-finite components");
    }
}

// a . s for a nuclear spin-1/2.
Eigen::Matrix2cd dot_spin_half(const Eigen::Vector3d& a) {
    return a.x() * spin_half::sx() + a.y() * spin_half::sy() + a.z() * spin_half::sz();
}

}  // namespace

ZfsParams::ZfsParams(double d_mhz, double e_mhz) : d_(d_mhz), e_(e_mhz) {
    if (!std::isfinite(d_mhz) || !std::isfinite(e_mhz)) {
        throw std::invalid_argument("zero-field splitting parameters must be finite");
    }
    if (d_mhz <= 0.0) {
        throw std::invalid_argument("D must be positive, got " + std::to_string(d_mhz));
    }
    if (std::abs(e_mhz) >= d_mhz) {
        throw std::invalid_argument("|E| must be smaller than D, got E = " +
                                    std::to_string(e_mhz));
    }
}

void FieldSpec::validate() const {
    require_finite(b_crystal_gauss, "magnetic field");
    if (!(gamma_e > 0.0) || !std::isfinite(gamma_e)) {
        throw std::invalid_argument("gamma_e must be positive");
    }
}

HyperfineCoupling::HyperfineCoupling(std::string label, const Eigen::Vector3d& a_row_mhz)
    : label_(std::move(label)), a_row_(a_row_mhz) {
    require_finite(a_row_, "hyperfine row");
}

HyperfineCoupling::HyperfineCoupling(std::string label, const Eigen::Matrix3d& full_tensor_mhz)
    : label_(std::move(label)),
      a_row_(full_tensor_mhz.row(2).transpose()),
      full_tensor_(full_tensor_mhz) {
    if (!full_tensor_mhz.allFinite()) {
        throw std::invalid_argument("hyperfine tensor has non-finite entries");
    }
}

HyperfineCoupling HyperfineCoupling::axial(std::string label, double a_mhz) {
    return HyperfineCoupling(std::move(label), Eigen::Vector3d(0.0, 0.0, a_mhz));
}

Eigen::Matrix3cd electron_hamiltonian(const ZfsParams& zfs, const Eigen::Vector3d& b) {
    require_finite(b, "field");
    const Eigen::Matrix3cd sx = spin1::sx();
    const Eigen::Matrix3cd sy = spin1::sy();
    const Eigen::Matrix3cd sz = spin1::sz();
    return zfs.d() * sz * sz + zfs.e() * (sx * sx - sy * sy) + b.x() * sx + b.y() * sy +
           b.z() * sz;
}

Eigen::MatrixXcd build_hamiltonian(const ZfsParams& zfs, const Eigen::Vector3d& b_nv_mhz,
                                   std::span<const HyperfineCoupling> couplings,
                                   OccupancyMask occupancy, const SpinRegister& reg,
                                   const HamiltonianOptions& options) {
    if (static_cast<int>(couplings.size()) != reg.n_nuclei()) {
        throw std::invalid_argument("got " + std::to_string(couplings.size()) +
                                    " couplings for a register with " +
                                    std::to_string(reg.n_nuclei()) + " nuclei");
    }
    const Eigen::Matrix3cd he = electron_hamiltonian(zfs, b_nv_mhz);
    const Eigen::Index nd = reg.nuclear_dim();

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(reg.dim(), reg.dim());
    for (Eigen::Index e1 = 0; e1 < 3; ++e1) {
        for (Eigen::Index e2 = 0; e2 < 3; ++e2) {
            if (he(e1, e2) == std::complex<double>{}) continue;
            for (Eigen::Index k = 0; k < nd; ++k) {
                h(e1 * nd + k, e2 * nd + k) = he(e1, e2);
            }
        }
    }

    const std::array<Eigen::Matrix3cd, 3> s{spin1::sx(), spin1::sy(), spin1::sz()};
    for (int n = 0; n < reg.n_nuclei(); ++n) {
        if (!is_occupied(occupancy, n)) continue;
        const int slot = n + 1;
        const HyperfineCoupling& c = couplings[static_cast<std::size_t>(n)];
        if (c.full_tensor()) {
            const Eigen::Matrix3d& t = *c.full_tensor();
            for (int i = 0; i < 3; ++i) {
                add_electron_nuclear_term(h, s[static_cast<std::size_t>(i)],
                                          dot_spin_half(t.row(i).transpose()), slot, reg);
            }
        } else {
            add_electron_nuclear_term(h, s[2], dot_spin_half(c.a_row()), slot, reg);
        }
        if (options.nuclear_zeeman) {
            add_electron_nuclear_term(
                h, spin1::identity(),
                dot_spin_half(-options.nuclear_gamma_ratio * b_nv_mhz), slot, reg);
        }
    }
    return h;
}

}  // namespace nvodmr
