#pragma once

#include <Eigen/Core>

namespace nvodmr {

inline constexpr int kDefaultMaxNuclei = 12;

// Bookkeeping for the electron triplet (x) n nuclear doublets product space.
// Slot 0 is the electron (dimension 3), slots 1..n are nuclei (dimension 2),
// ordered electron-first then nuclei in catalog order. Nucleus 1 is the most
// significant bit of the nuclear index.
class SpinRegister {
public:
    int n_nuclei() const noexcept { return n_nuclei_; }
    Eigen::Index dim() const noexcept { return 3 * nuclear_dim(); }
    Eigen::Index nuclear_dim() const noexcept { return Eigen::Index{1} << n_nuclei_; }
    int slot_count() const noexcept { return n_nuclei_ + 1; }
    int slot_dim(int slot) const;

    // Bit position of nucleus `slot` (1..n) within the nuclear index.
    int nuclear_bit(int slot) const;

private:
    friend SpinRegister build_register(int, int);
    explicit SpinRegister(int n_nuclei) : n_nuclei_(n_nuclei) {}

    int n_nuclei_;
};

// Throws DimensionLimitError when n_nuclei exceeds max_nuclei.
SpinRegister build_register(int n_nuclei, int max_nuclei = kDefaultMaxNuclei);

}  // namespace nvodmr
