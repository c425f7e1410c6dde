#pragma once

#include "nvodmr/spin_register.hpp"

#include <Eigen/Core>

namespace nvodmr {

// Spin-1 matrices in the basis |+1>, |0>, |-1>.
namespace spin1 {
Eigen::Matrix3cd sx();
Eigen::Matrix3cd sy();
Eigen::Matrix3cd sz();
Eigen::Matrix3cd identity();
}  // namespace spin1

// Spin-1/2 matrices (Pauli / 2) in the basis |+1/2>, |-1/2>.
namespace spin_half {
Eigen::Matrix2cd sx();
Eigen::Matrix2cd sy();
Eigen::Matrix2cd sz();
Eigen::Matrix2cd identity();
}  // namespace spin_half

// Basis index of electron level m_s = 0.
inline constexpr Eigen::Index kMsZeroIndex = 1;

// Kronecker product A (x) B.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// op placed in `slot` with identities in every other slot. Throws
// std::out_of_range for a bad slot and std::invalid_argument when op does not
// match the slot dimension.
Eigen::MatrixXcd embed_operator(const Eigen::MatrixXcd& op, int slot, const SpinRegister& reg);

// Accumulates coeff * (electron_op (x) nuclear_op in `slot`) into h without
// forming the Kronecker product. slot is 1..n.
void add_electron_nuclear_term(Eigen::MatrixXcd& h, const Eigen::Matrix3cd& electron_op,
                               const Eigen::Matrix2cd& nuclear_op, int slot,
                               const SpinRegister& reg);

}  // namespace nvodmr
