#include "nvodmr/eigensystem.hpp"

#include "nvodmr/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nvodmr {

double hermiticity_defect(const Eigen::MatrixXcd& h) {
    if (h.size() == 0) return 0.0;
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

double reconstruction_residual(const Eigen::MatrixXcd& h, const Eigensystem& eig) {
    const Eigen::MatrixXcd r = h * eig.vectors - eig.vectors * eig.values.asDiagonal();
    return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

double unitarity_defect(const Eigensystem& eig) {
    const Eigen::Index n = eig.vectors.cols();
    const Eigen::MatrixXcd g = eig.vectors.adjoint() * eig.vectors - Eigen::MatrixXcd::Identity(n, n);
    return g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
}

Eigensystem eigendecompose(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("eigendecompose: matrix must be square");
    }
    if (h.rows() == 0) {
        throw std::invalid_argument("eigendecompose: empty matrix");
    }
    if (!h.allFinite()) {
        throw std::invalid_argument("eigendecompose: non-finite matrix entries");
    }
    if (hermiticity_defect(h) > kHermitianTolerance) {
        throw std::invalid_argument("eigendecompose: matrix is not Hermitian");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    Eigensystem eig{solver.eigenvalues(), solver.eigenvectors()};
    if (solver.info() != Eigen::Success || !eig.values.allFinite() || !eig.vectors.allFinite()) {
        throw ConvergenceError(h.rows(), reconstruction_residual(h, eig));
    }
    return eig;
}

}  // namespace nvodmr
