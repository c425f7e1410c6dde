#pragma once

#include <Eigen/Core>

namespace nvodmr {

// Eigenvalues ascending (MHz), eigenvectors as unitary columns.
struct Eigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;

    Eigen::Index dim() const noexcept { return values.size(); }
};

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-8;

// Throws std::invalid_argument for non-square, empty, non-finite, or
// non-Hermitian input and ConvergenceError if the solver fails.
Eigensystem eigendecompose(const Eigen::MatrixXcd& h);

// max |H V - V diag(values)|.
double reconstruction_residual(const Eigen::MatrixXcd& h, const Eigensystem& eig);

// max |V^dagger V - 1|.
double unitarity_defect(const Eigensystem& eig);

// max |H - H^dagger|.
double hermiticity_defect(const Eigen::MatrixXcd& h);

}  // namespace nvodmr
