#pragma once

#include "nvodmr/eigensystem.hpp"
#include "nvodmr/hamiltonian.hpp"
#include "nvodmr/spin_register.hpp"

#include <span>
#include <vector>

namespace nvodmr {

struct TransitionLine {
    double freq_mhz = 0.0;
    double weight = 0.0;
};

// Lines below kWeightFloor * (largest weight) are dropped.
inline constexpr double kWeightFloor = 1e-6;

// MW lines of an eigensystem on `reg`. Each pair i -> j with
// values[j] > values[i] gets weight
//   pop0(i) * (|<j|S_x|i>|^2 + |<j|S_y|i>|^2) / 2,
// the S_x strength averaged over MW polarizations in the transverse plane;
// pop0(i) is the weight of |i> in the m_s = 0 electron subspace. Pairs whose
// frequencies coincide to 1e-8 MHz are summed, so the result does not depend
// on the basis chosen inside degenerate eigenspaces. Sorted by frequency.
std::vector<TransitionLine> extract_transitions(const Eigensystem& eig, const SpinRegister& reg);

// Same line set without diagonalizing the product space.
//
// With coupling rows only, every nuclear spin quantized along its own a_row
// is a good quantum number, so H splits into 2^n blocks H_e + h S_z with
// h = sum_n m_n |a_n|. The distribution of h is built by convolving the
// per-nucleus +-|a_n|/2 shifts (unoccupied sites double the multiplicity),
// and one 3x3 block is diagonalized per distinct h. Full tensors contribute
// their z row; the nuclear Zeeman term is not represented.
std::vector<TransitionLine> factorized_transitions(const ZfsParams& zfs,
                                                   const Eigen::Vector3d& b_nv_mhz,
                                                   std::span<const HyperfineCoupling> couplings,
                                                   OccupancyMask occupancy);

// Sorted by frequency; lines closer than tol_mhz are summed into one, placed
// at the weighted mean frequency.
std::vector<TransitionLine> merge_lines(std::vector<TransitionLine> lines, double tol_mhz);

}  // namespace nvodmr
