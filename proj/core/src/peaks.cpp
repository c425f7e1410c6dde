#include "nvodmr/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nvodmr {

namespace {

struct Candidate {
    std::size_t index;
    std::size_t plateau_left;
    std::size_t plateau_right;
};

std::vector<Candidate> local_maxima(std::span<const double> y) {
    std::vector<Candidate> out;
    const std::size_t n = y.size();
    std::size_t i = 1;
    while (n >= 3 && i + 1 < n) {
        if (y[i - 1] < y[i]) {
            std::size_t ahead = i + 1;
            while (ahead + 1 < n && y[ahead] == y[i]) ++ahead;
            if (y[ahead] < y[i]) {
                out.push_back({(i + ahead - 1) / 2, i, ahead - 1});
                i = ahead;
                continue;
            }
        }
        ++i;
    }
    return out;
}

// x position where y crosses `level` between samples a and b.
double crossing(std::span<const double> x, std::span<const double> y, std::size_t a,
                std::size_t b, double level) {
    const double dy = y[b] - y[a];
    if (dy == 0.0) return x[a];
    return x[a] + (level - y[a]) / dy * (x[b] - x[a]);
}

}  // namespace

std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double min_prominence) {
    if (y.empty()) throw std::invalid_argument("find_peaks: empty spectrum");
    if (x.size() != y.size()) throw std::invalid_argument("find_peaks: x and y differ in length");
    if (!(min_prominence > 0.0 && min_prominence < 1.0)) {
        throw std::invalid_argument("find_peaks: min_prominence must lie in (0, 1)");
    }
    const double ymax = *std::max_element(y.begin(), y.end());
    if (!(ymax > 0.0)) return {};
    const double required = min_prominence * ymax;
    const std::size_t n = y.size();
    const double dx = n >= 2 ? x[1] - x[0] : 0.0;

    std::vector<Peak> peaks;
    for (const Candidate& c : local_maxima(y)) {
        const std::size_t p = c.index;
        const double top = y[p];

        // Bases: lowest point before the signal rises above the peak again.
        std::size_t left_base = p;
        double left_min = top;
        for (std::size_t i = p + 1; i-- > 0;) {
            if (y[i] > top) break;
            if (y[i] < left_min) {
                left_min = y[i];
                left_base = i;
            }
        }
        std::size_t right_base = p;
        double right_min = top;
        for (std::size_t i = p; i < n; ++i) {
            if (y[i] > top) break;
            if (y[i] < right_min) {
                right_min = y[i];
                right_base = i;
            }
        }
        const double prominence = top - std::max(left_min, right_min);
        if (prominence < required || !(prominence > 0.0)) continue;

        const double level = top - 0.5 * prominence;
        std::size_t i = p;
        while (i > left_base && y[i] > level) --i;
        const double left_x = y[i] < level ? crossing(x, y, i, i + 1, level) : x[i];
        std::size_t j = p;
        while (j < right_base && y[j] > level) ++j;
        const double right_x = y[j] < level ? crossing(x, y, j - 1, j, level) : x[j];

        double center = x[p];
        if (c.plateau_left == c.plateau_right && p > 0 && p + 1 < n) {
            const double denom = y[p - 1] - 2.0 * top + y[p + 1];
            if (denom < 0.0) {
                const double delta = std::clamp(0.5 * (y[p - 1] - y[p + 1]) / denom, -0.5, 0.5);
                center += delta * dx;
            }
        } else {
            center = 0.5 * (x[c.plateau_left] + x[c.plateau_right]);
        }
        peaks.push_back({center, top, right_x - left_x, prominence, p});
    }
    return peaks;
}

std::vector<Peak> find_peaks(const Spectrum& spectrum, double min_prominence) {
    return find_peaks(spectrum.bin_centers, spectrum.intensity, min_prominence);
}

}  // namespace nvodmr
