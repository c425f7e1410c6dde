#include "nvodmr/config.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace nvodmr {

std::string_view to_string(Backend backend) {
    switch (backend) {
        case Backend::exact: return "exact";
        case Backend::factorized: return "factorized";
        case Backend::automatic: return "auto";
    }
    return "auto";
}

Backend parse_backend(std::string_view text) {
    if (text == "exact") return Backend::exact;
    if (text == "factorized") return Backend::factorized;
    if (text == "auto" || text == "automatic") return Backend::automatic;
    throw std::invalid_argument("unknown backend '" + std::string(text) + "'");
}

std::size_t HistogramSpec::bin_count() const {
    // Tolerate widths that do not divide the range exactly in binary.
    const double n = (f_max_mhz - f_min_mhz) / bin_width_mhz;
    return static_cast<std::size_t>(std::floor(n + 1e-9));
}

double HistogramSpec::bin_center(std::size_t bin) const {
    return f_min_mhz + (static_cast<double>(bin) + 0.5) * bin_width_mhz;
}

std::optional<std::size_t> HistogramSpec::bin_of(double f_mhz) const {
    const double x = (f_mhz - f_min_mhz) / bin_width_mhz;
    if (!(x >= 0.0)) return std::nullopt;
    const auto bin = static_cast<std::size_t>(x);
    if (bin >= bin_count()) return std::nullopt;
    return bin;
}

void HistogramSpec::validate() const {
    if (!std::isfinite(f_min_mhz) || !std::isfinite(f_max_mhz) || !(f_min_mhz < f_max_mhz)) {
        throw std::invalid_argument("histogram needs finite f_min < f_max");
    }
    if (!(bin_width_mhz > 0.0)) {
        throw std::invalid_argument("histogram bin width must be positive");
    }
    if (bin_count() == 0) {
        throw std::invalid_argument("histogram range is narrower than one bin");
    }
}

BathParams BathModel::params(double enrichment) const {
    BathParams p;
    p.xi = xi;
    p.rho = rho;
    p.r0 = r0;
    p.enrichment = enrichment;
    p.spin_sigma = spin_sigma;
    return p;
}

void SimulationConfig::validate() const {
    (void)ZfsParams(zfs_d_mhz, 0.0);
    if (!(delta_e_mhz >= 0.0) || !std::isfinite(delta_e_mhz)) {
        throw std::invalid_argument("delta_E must be finite and nonnegative");
    }
    if (!(enrichment >= 0.0 && enrichment <= 1.0)) {
        throw std::invalid_argument("enrichment must lie in [0, 1]");
    }
    bath.params(enrichment).validate();
    if (!(bath.threshold_mhz >= 0.0)) {
        throw std::invalid_argument("bath threshold must be nonnegative");
    }
    for (const auto& entry : bath.catalog) entry.validate();
    if (bath.sigma_override_mhz && !(*bath.sigma_override_mhz >= 0.0)) {
        throw std::invalid_argument("background sigma override must be nonnegative");
    }
    field.validate();
    if (std::any_of(orientation_weights.begin(), orientation_weights.end(),
                    [](double w) { return !(w >= 0.0) || !std::isfinite(w); })) {
        throw std::invalid_argument("orientation weights must be finite and nonnegative");
    }
    if (!(std::accumulate(orientation_weights.begin(), orientation_weights.end(), 0.0) > 0.0)) {
        throw std::invalid_argument("orientation weights must not all be zero");
    }
    if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
    histogram.validate();
    if (!(lorentzian_fwhm_mhz >= 0.0)) {
        throw std::invalid_argument("Lorentzian width must be nonnegative");
    }
    if (max_nuclei < 0 || max_nuclei >= kMaxOccupancyBits) {
        throw std::invalid_argument("max_nuclei must lie in [0, 63]");
    }
    if (exact_max_nuclei < 0) throw std::invalid_argument("exact_max_nuclei must be >= 0");
}

BackgroundBreakdown background_breakdown(const SimulationConfig& config) {
    if (config.bath.sigma_override_mhz) {
        return {0.0, 0.0, *config.bath.sigma_override_mhz};
    }
    std::set<std::string> explicit_labels;
    for (const auto& site : config.explicit_sites) explicit_labels.insert(site.label());
    BackgroundBreakdown b;
    b.near_mhz = near_sigma(config.bath.catalog, explicit_labels, config.bath.threshold_mhz,
                            config.enrichment, config.bath.spin_sigma);
    b.far_mhz = far_shell_sigma(config.bath.params(config.enrichment));
    b.total_mhz = total_sigma(b.near_mhz, b.far_mhz);
    return b;
}

Backend resolve_backend(const SimulationConfig& config) {
    if (config.backend != Backend::automatic) return config.backend;
    const auto n = static_cast<int>(config.explicit_sites.size());
    return n <= config.exact_max_nuclei ? Backend::exact : Backend::factorized;
}

}  // namespace nvodmr
