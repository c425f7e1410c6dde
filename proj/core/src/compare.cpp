#include "nvodmr/compare.hpp"

#include "nvodmr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace nvodmr {

SampledCurve fluorescence_to_strength(SampledCurve curve) {
    for (double& v : curve.value) v = 1.0 - v;
    return curve;
}

namespace {

void validate_curve(const SampledCurve& c) {
    if (c.freq_mhz.size() != c.value.size()) {
        throw std::invalid_argument("experimental curve: frequency and value counts differ");
    }
    if (c.freq_mhz.size() < 2) {
        throw std::invalid_argument("experimental curve needs at least two samples");
    }
    for (std::size_t i = 1; i < c.freq_mhz.size(); ++i) {
        if (!(c.freq_mhz[i] > c.freq_mhz[i - 1])) {
            throw std::invalid_argument("experimental frequencies must be strictly increasing");
        }
    }
}

double interpolate(const SampledCurve& c, double f) {
    const auto it = std::upper_bound(c.freq_mhz.begin(), c.freq_mhz.end(), f);
    if (it == c.freq_mhz.begin()) return c.value.front();
    if (it == c.freq_mhz.end()) return c.value.back();
    const auto hi = static_cast<std::size_t>(it - c.freq_mhz.begin());
    const std::size_t lo = hi - 1;
    const double t = (f - c.freq_mhz[lo]) / (c.freq_mhz[hi] - c.freq_mhz[lo]);
    return c.value[lo] + t * (c.value[hi] - c.value[lo]);
}

}  // namespace

ComparisonReport compare(const Spectrum& simulated, const SampledCurve& experimental,
                         double min_prominence) {
    if (simulated.size() < 2) throw std::invalid_argument("simulated spectrum needs two bins");
    validate_curve(experimental);

    const double sim_lo = simulated.bin_centers.front();
    const double sim_hi = simulated.bin_centers.back();
    const double exp_lo = experimental.freq_mhz.front();
    const double exp_hi = experimental.freq_mhz.back();
    const double overlap = std::max(0.0, std::min(sim_hi, exp_hi) - std::max(sim_lo, exp_lo));

    ComparisonReport report;
    report.overlap_fraction = overlap / (sim_hi - sim_lo);
    if (report.overlap_fraction < kMinOverlapFraction) {
        throw InsufficientOverlapError(report.overlap_fraction, kMinOverlapFraction);
    }

    std::vector<double> xs, sim, exp;
    for (std::size_t i = 0; i < simulated.size(); ++i) {
        const double f = simulated.bin_centers[i];
        if (f < exp_lo || f > exp_hi) continue;
        xs.push_back(f);
        sim.push_back(simulated.intensity[i]);
        exp.push_back(interpolate(experimental, f));
    }
    if (xs.size() < 2) throw InsufficientOverlapError(report.overlap_fraction, kMinOverlapFraction);
    report.compared_bins = xs.size();

    const auto n = static_cast<double>(xs.size());
    double ms = 0.0, me = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ms += sim[i];
        me += exp[i];
    }
    ms /= n;
    me /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (sim[i] - ms) * (sim[i] - ms);
        sxy += (sim[i] - ms) * (exp[i] - me);
    }
    report.scale = sxx > 0.0 ? sxy / sxx : 0.0;
    report.offset = me - report.scale * ms;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = exp[i] - (report.scale * sim[i] + report.offset);
        ss += r * r;
    }
    report.rms_residual = std::sqrt(ss / n);

    // Peaks of the experimental curve on a 0..1 scale over the compared bins.
    const auto [lo_it, hi_it] = std::minmax_element(exp.begin(), exp.end());
    std::vector<Peak> exp_peaks;
    if (*hi_it > *lo_it) {
        std::vector<double> scaled(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) scaled[i] = (exp[i] - *lo_it) / (*hi_it - *lo_it);
        exp_peaks = find_peaks(xs, scaled, min_prominence);
    }
    const std::vector<Peak> sim_peaks = find_peaks(simulated, min_prominence);

    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < sim_peaks.size(); ++s) {
        for (std::size_t e = 0; e < exp_peaks.size(); ++e) {
            pairs.emplace_back(std::abs(exp_peaks[e].center_mhz - sim_peaks[s].center_mhz), s, e);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> sim_used(sim_peaks.size()), exp_used(exp_peaks.size());
    for (const auto& [dist, s, e] : pairs) {
        if (sim_used[s] || exp_used[e]) continue;
        sim_used[s] = exp_used[e] = true;
        report.matched_peaks.push_back(
            {sim_peaks[s], exp_peaks[e], exp_peaks[e].center_mhz - sim_peaks[s].center_mhz});
    }
    std::sort(report.matched_peaks.begin(), report.matched_peaks.end(),
              [](const PeakMatch& a, const PeakMatch& b) {
                  return a.simulated.center_mhz < b.simulated.center_mhz;
              });
    return report;
}

}  // namespace nvodmr
