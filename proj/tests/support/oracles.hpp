#pragma once

// Reference computations written directly from the physics, sharing no code
// with the library beyond its public types.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace nvodmr::oracle {

using cd = std::complex<double>;

// <m'|S_a|m> for spin 1 with basis order m = +1, 0, -1 (index 0, 1, 2).
inline cd spin1_element(char axis, int row, int col) {
    const int mr = 1 - row;
    const int mc = 1 - col;
    const double r2 = std::sqrt(2.0);
    switch (axis) {
    case 'z':
        return row == col ? cd(mc, 0) : cd(0, 0);
    case 'x':
        return std::abs(mr - mc) == 1 ? cd(1.0 / r2, 0) : cd(0, 0);
    case 'y':
        if (mr - mc == 1) return cd(0, -1.0 / r2);
        if (mr - mc == -1) return cd(0, 1.0 / r2);
        return cd(0, 0);
    }
    return cd(0, 0);
}

// <m'|s_a|m> for spin 1/2 with basis order +1/2, -1/2.
inline cd spin_half_element(char axis, int row, int col) {
    switch (axis) {
    case 'z':
        return row == col ? cd(row == 0 ? 0.5 : -0.5, 0) : cd(0, 0);
    case 'x':
        return row != col ? cd(0.5, 0) : cd(0, 0);
    case 'y':
        if (row == 0 && col == 1) return cd(0, -0.5);
        if (row == 1 && col == 0) return cd(0, 0.5);
        return cd(0, 0);
    }
    return cd(0, 0);
}

// Hamiltonian assembled element by element. State index = e * 2^n + bits,
// nucleus k (1-based) in bit n - k; occupied couplings only.
inline Eigen::MatrixXcd hamiltonian(double d, double e, const Eigen::Vector3d& b,
                                    const std::vector<Eigen::Vector3d>& rows,
                                    const std::vector<bool>& occupied) {
    const int n = static_cast<int>(rows.size());
    const int nd = 1 << n;
    const int dim = 3 * nd;
    const char axes[3] = {'x', 'y', 'z'};
    auto electron = [&](int r, int c) {
        cd v = 0;
        for (int k = 0; k < 3; ++k) {
            v += d * spin1_element('z', r, k) * spin1_element('z', k, c);
            v += e * (spin1_element('x', r, k) * spin1_element('x', k, c) -
                      spin1_element('y', r, k) * spin1_element('y', k, c));
        }
        for (int a = 0; a < 3; ++a) v += b[a] * spin1_element(axes[a], r, c);
        return v;
    };
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const int ei = i / nd, ej = j / nd;
            const int ni = i % nd, nj = j % nd;
            if (ni == nj) h(i, j) += electron(ei, ej);
            const cd sz = spin1_element('z', ei, ej);
            if (sz == cd(0, 0)) continue;
            for (int k = 0; k < n; ++k) {
                if (!occupied[k]) continue;
                const int bit = n - 1 - k;
                if (((ni ^ nj) & ~(1 << bit)) != 0) continue;
                const int si = (ni >> bit) & 1;
                const int sj = (nj >> bit) & 1;
                for (int a = 0; a < 3; ++a) h(i, j) += sz * rows[k][a] * spin_half_element(axes[a], si, sj);
            }
        }
    }
    return h;
}

// Zero-field, zero-strain line set for axial couplings: every nuclear product
// state shifts m_s = +-1 by +-sum(a_k m_k); each branch carries weight 1/2 per
// configuration. Returns frequency -> total weight.
inline std::map<double, double> axial_line_tally(double d, const std::vector<double>& a_z) {
    std::map<double, double> tally;
    const int n = static_cast<int>(a_z.size());
    for (int cfg = 0; cfg < (1 << n); ++cfg) {
        double h = 0.0;
        for (int k = 0; k < n; ++k) h += a_z[k] * (((cfg >> k) & 1) ? -0.5 : 0.5);
        for (const double f : {d + h, d - h}) {
            const double key = std::round(f * 1e6) / 1e6;
            tally[key] += 0.5;
        }
    }
    return tally;
}

// Eigenvalues of a real symmetric 3x3 matrix via the trigonometric cubic solution.
inline std::array<double, 3> symmetric3_eigenvalues(const Eigen::Matrix3d& m) {
    const double q = m.trace() / 3.0;
    const Eigen::Matrix3d shifted = m - q * Eigen::Matrix3d::Identity();
    const double p = std::sqrt((shifted.array().square().sum()) / 6.0);
    if (p == 0.0) return {q, q, q};
    const double r = std::clamp((shifted / p).determinant() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double pi = std::acos(-1.0);
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> out{e1, e2, e3};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nvodmr::oracle
