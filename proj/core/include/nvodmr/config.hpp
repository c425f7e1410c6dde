#pragma once

#include "nvodmr/bath.hpp"
#include "nvodmr/hamiltonian.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nvodmr {

enum class Backend { exact, factorized, automatic };

std::string_view to_string(Backend backend);
// Accepts "exact", "factorized", "auto".
Backend parse_backend(std::string_view text);

struct HistogramSpec {
    double f_min_mhz = kDefaultZfsD - 500.0;
    double f_max_mhz = kDefaultZfsD + 500.0;
    double bin_width_mhz = 1.0;

    std::size_t bin_count() const;
    double bin_center(std::size_t bin) const;
    // Bin holding f, or nullopt outside [f_min, f_min + bins * width).
    std::optional<std::size_t> bin_of(double f_mhz) const;

    void validate() const;
};

// Background bath description: catalog of proximal sites plus continuum
// parameters. An override replaces the computed sigma.
struct BathModel {
    double xi = 19.9;
    double rho = 0.177;
    double r0 = 6.0;
    double spin_sigma = 0.5;
    double threshold_mhz = kDefaultNearThreshold;
    std::vector<NearCatalogEntry> catalog = default_near_catalog();
    std::optional<double> sigma_override_mhz;

    BathParams params(double enrichment) const;
};

struct BackgroundBreakdown {
    double near_mhz = 0.0;
    double far_mhz = 0.0;
    double total_mhz = 0.0;
};

struct SimulationConfig {
    std::string name = "custom";
    double zfs_d_mhz = kDefaultZfsD;
    double delta_e_mhz = 1.0;
    double enrichment = 1.0;
    BathModel bath;
    std::vector<HyperfineCoupling> explicit_sites;
    FieldSpec field;
    std::array<double, 4> orientation_weights{1.0, 1.0, 1.0, 1.0};
    std::size_t n_samples = 100000;
    HistogramSpec histogram;
    Backend backend = Backend::automatic;
    std::uint64_t seed = 1;
    HamiltonianOptions hamiltonian;
    // Optional Lorentzian broadening of the final histogram; 0 disables it.
    double lorentzian_fwhm_mhz = 0.0;
    int max_nuclei = kDefaultMaxNuclei;
    // Automatic backend uses exact diagonalization up to this many nuclei.
    int exact_max_nuclei = 8;

    // Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
};

// Near-field sigma excludes catalog entries whose label matches an explicit
// site; far-field sigma comes from the continuum. Honours sigma_override_mhz.
BackgroundBreakdown background_breakdown(const SimulationConfig& config);

Backend resolve_backend(const SimulationConfig& config);

}  // namespace nvodmr
