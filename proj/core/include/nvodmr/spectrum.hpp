#pragma once

#include "nvodmr/config.hpp"

#include <vector>

namespace nvodmr {

// Binned MW line strength. intensity is normalized to max 1 when any weight
// landed in range; stderr_est carries the batch-means Monte Carlo error on the
// same scale (empty for single-block runs).
struct Spectrum {
    std::vector<double> bin_centers;
    std::vector<double> intensity;
    std::vector<double> stderr_est;
    // Weight deposited in range before normalization.
    double total_weight = 0.0;
    // Factor that took raw bin weight to intensity.
    double normalization = 1.0;
    SimulationConfig config;

    std::size_t size() const noexcept { return intensity.size(); }
    double bin_width() const;
};

}  // namespace nvodmr
