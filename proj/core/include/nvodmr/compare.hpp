#pragma once

#include "nvodmr/peaks.hpp"
#include "nvodmr/spectrum.hpp"

#include <vector>

namespace nvodmr {

// Sampled curve on increasing frequencies, in line-strength convention
// (larger = stronger resonance).
struct SampledCurve {
    std::vector<double> freq_mhz;
    std::vector<double> value;
};

// ODMR fluorescence normalized to the off-resonant level becomes line
// strength 1 - F.
SampledCurve fluorescence_to_strength(SampledCurve curve);

struct PeakMatch {
    Peak simulated;
    Peak experimental;
    double delta_center_mhz = 0.0;  // experimental - simulated
};

struct ComparisonReport {
    double rms_residual = 0.0;
    double scale = 1.0;
    double offset = 0.0;
    double overlap_fraction = 0.0;
    std::size_t compared_bins = 0;
    std::vector<PeakMatch> matched_peaks;
};

inline constexpr double kMinOverlapFraction = 0.5;

// Resamples the experimental curve onto the simulation bins by linear
// interpolation, fits experimental ~ scale * simulated + offset by least
// squares and pairs peaks greedily by nearest center. Throws
// InsufficientOverlapError when the curves share less than half of the
// simulated range.
ComparisonReport compare(const Spectrum& simulated, const SampledCurve& experimental,
                         double min_prominence = kDefaultMinProminence);

}  // namespace nvodmr
