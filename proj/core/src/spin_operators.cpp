#include "nvodmr/spin_operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace nvodmr {

using cd = std::complex<double>;

namespace spin1 {

Eigen::Matrix3cd sx() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = s;
    return m;
}

Eigen::Matrix3cd sy() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(0, 1) = cd(0.0, -s);
    m(1, 0) = cd(0.0, s);
    m(1, 2) = cd(0.0, -s);
    m(2, 1) = cd(0.0, s);
    return m;
}

Eigen::Matrix3cd sz() {
    return Eigen::Vector3cd(1.0, 0.0, -1.0).asDiagonal();
}

Eigen::Matrix3cd identity() { return Eigen::Matrix3cd::Identity(); }

}  // namespace spin1

namespace spin_half {

Eigen::Matrix2cd sx() {
    Eigen::Matrix2cd m;
    m << 0.0, 0.5, 0.5, 0.0;
    return m;
}

Eigen::Matrix2cd sy() {
    Eigen::Matrix2cd m;
    m << 0.0, cd(0.0, -0.5), cd(0.0, 0.5), 0.0;
    return m;
}

Eigen::Matrix2cd sz() {
    Eigen::Matrix2cd m;
    m << 0.5, 0.0, 0.0, -0.5;
    return m;
}

Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

}  // namespace spin_half

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd embed_operator(const Eigen::MatrixXcd& op, int slot, const SpinRegister& reg) {
    const int d = reg.slot_dim(slot);
    if (op.rows() != d || op.cols() != d) {
        throw std::invalid_argument("operator is " + std::to_string(op.rows()) + "x" +
                                    std::to_string(op.cols()) + ", slot " +
                                    std::to_string(slot) + " needs " + std::to_string(d) + "x" +
                                    std::to_string(d));
    }
    Eigen::MatrixXcd out = slot == 0 ? op : Eigen::MatrixXcd(spin1::identity());
    for (int s = 1; s <= reg.n_nuclei(); ++s) {
        out = kron(out, s == slot ? op : Eigen::MatrixXcd(spin_half::identity()));
    }
    return out;
}

void add_electron_nuclear_term(Eigen::MatrixXcd& h, const Eigen::Matrix3cd& electron_op,
                               const Eigen::Matrix2cd& nuclear_op, int slot,
                               const SpinRegister& reg) {
    const Eigen::Index nd = reg.nuclear_dim();
    const Eigen::Index bit = Eigen::Index{1} << reg.nuclear_bit(slot);
    for (Eigen::Index e1 = 0; e1 < 3; ++e1) {
        for (Eigen::Index e2 = 0; e2 < 3; ++e2) {
            const cd ce = electron_op(e1, e2);
            if (ce == cd{}) continue;
            for (Eigen::Index k = 0; k < nd; ++k) {
                const Eigen::Index kb = (k & bit) ? 1 : 0;
                for (Eigen::Index lb = 0; lb < 2; ++lb) {
                    const cd cn = nuclear_op(kb, lb);
                    if (cn == cd{}) continue;
                    const Eigen::Index l = lb ? (k | bit) : (k & ~bit);
                    h(e1 * nd + k, e2 * nd + l) += ce * cn;
                }
            }
        }
    }
}

}  // namespace nvodmr
