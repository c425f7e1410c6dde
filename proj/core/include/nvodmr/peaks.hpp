#pragma once

#include "nvodmr/spectrum.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nvodmr {

inline constexpr double kDefaultMinProminence = 0.05;

struct Peak {
    double center_mhz = 0.0;
    double height = 0.0;
    double fwhm_mhz = 0.0;
    double prominence = 0.0;
    std::size_t index = 0;
};

// Local maxima whose topographic prominence is at least
// min_prominence * max(y). Edge samples are never peaks. Widths are measured
// at half prominence with linear interpolation; centers are refined with a
// three-point parabola. x must be uniformly spaced and increasing.
std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double min_prominence = kDefaultMinProminence);

std::vector<Peak> find_peaks(const Spectrum& spectrum,
                             double min_prominence = kDefaultMinProminence);

}  // namespace nvodmr
