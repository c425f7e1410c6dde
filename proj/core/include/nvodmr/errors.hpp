#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace nvodmr {

// Requested spin space exceeds the configured nucleus cap.
class DimensionLimitError : public std::runtime_error {
public:
    DimensionLimitError(Eigen::Index requested_dim, int requested_nuclei, int max_nuclei);

    Eigen::Index requested_dim() const noexcept { return requested_dim_; }
    int requested_nuclei() const noexcept { return requested_nuclei_; }
    int max_nuclei() const noexcept { return max_nuclei_; }

private:
    Eigen::Index requested_dim_;
    int requested_nuclei_;
    int max_nuclei_;
};

// Hermitian eigensolver failed or produced an eigensystem outside tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(Eigen::Index dim, double residual);

    Eigen::Index dim() const noexcept { return dim_; }
    double residual() const noexcept { return residual_; }

private:
    Eigen::Index dim_;
    double residual_;
};

// Experimental and simulated curves share too little frequency support.
class InsufficientOverlapError : public std::runtime_error {
public:
    InsufficientOverlapError(double overlap_fraction, double required_fraction);

    double overlap_fraction() const noexcept { return overlap_fraction_; }

private:
    double overlap_fraction_;
};

}  // namespace nvodmr
