#include "nvodmr/spin_register.hpp"

#include "nvodmr/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace nvodmr {

namespace {

std::string dimension_message(Eigen::Index dim, int n, int cap) {
    std::ostringstream os;
    os << "spin space of dimension " << dim << " (" << n
       << " explicit nuclei) exceeds the cap of " << cap << " nuclei";
    return os.str();
}

std::string convergence_message(Eigen::Index dim, double residual) {
    std::ostringstream os;
    os << "Hermitian eigensolver failed for a " << dim << "x" << dim
       << " matrix (residual " << residual << ")";
    return os.str();
}

std::string overlap_message(double fraction, double required) {
    std::ostringstream os;
    os << "experimental curve covers " << fraction * 100.0 << "% of the simulated range, need "
       << required * 100.0 << "%";
    return os.str();
}

}  // namespace

DimensionLimitError::DimensionLimitError(Eigen::Index requested_dim, int requested_nuclei,
                                         int max_nuclei)
    : std::runtime_error(dimension_message(requested_dim, requested_nuclei, max_nuclei)),
      requested_dim_(requested_dim),
      requested_nuclei_(requested_nuclei),
      max_nuclei_(max_nuclei) {}

ConvergenceError::ConvergenceError(Eigen::Index dim, double residual)
    : std::runtime_error(convergence_message(dim, residual)), dim_(dim), residual_(residual) {}

InsufficientOverlapError::InsufficientOverlapError(double overlap_fraction,
                                                   double required_fraction)
    : std::runtime_error(overlap_message(overlap_fraction, required_fraction)),
      overlap_fraction_(overlap_fraction) {}

int SpinRegister::slot_dim(int slot) const {
    if (slot < 0 || slot > n_nuclei_) {
        throw std::out_of_range("slot " + std::to_string(slot) + " outside register with " +
                                std::to_string(n_nuclei_) + " nuclei");
    }
    return slot == 0 ? 3 : 2;
}

int SpinRegister::nuclear_bit(int slot) const {
    if (slot < 1 || slot > n_nuclei_) {
        throw std::out_of_range("nuclear slot " + std::to_string(slot) + " outside 1.." +
                                std::to_string(n_nuclei_));
    }
    return n_nuclei_ - slot;
}

SpinRegister build_register(int n_nuclei, int max_nuclei) {
    if (n_nuclei < 0) {
        throw std::invalid_argument("negative nucleus count");
    }
    if (n_nuclei > max_nuclei) {
        // 3 * 2^n computed in floating point: n may be far past what fits an index.
        const double dim = 3.0 * static_cast<double>(Eigen::Index{1} << std::min(n_nuclei, 60));
        throw DimensionLimitError(static_cast<Eigen::Index>(dim), n_nuclei, max_nuclei);
    }
    return SpinRegister(n_nuclei);
}

}  // namespace nvodmr
