#include "nvodmr/bath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nvodmr {

namespace {

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("enrichment must lie in [0, 1], got " + std::to_string(p));
    }
}

}  // namespace

void BathParams::validate() const {
    if (!(xi > 0.0) || !(rho > 0.0) || !(r0 > 0.0)) {
        throw std::invalid_argument("bath parameters xi, rho, r0 must be positive");
    }
    if (!(spin_sigma >= 0.0)) {
        throw std::invalid_argument("spin_sigma must be nonnegative");
    }
    require_probability(enrichment);
}

void NearCatalogEntry::validate() const {
    if (!(a_mhz > 0.0)) {
        throw std::invalid_argument("catalog entry '" + label + "' needs A > 0");
    }
    if (multiplicity < 1) {
        throw std::invalid_argument("catalog entry '" + label + "' needs multiplicity >= 1");
    }
}

std::vector<NearCatalogEntry> default_near_catalog() {
    return {
        {"shell1", 130.0, 3},
        {"c13.7a", 13.7, 3},
        {"c13.7b", 13.7, 3},
        {"c12.8", 12.8, 2},
    };
}

double shell_sigma(int n_atoms, double radius, const BathParams& params) {
    params.validate();
    if (n_atoms < 1) throw std::invalid_argument("shell needs at least one atom");
    if (!(radius > 0.0)) throw std::invalid_argument("shell radius must be positive");
    // Parallel part sqrt(N) dm / r^3 and dipolar part sqrt(3) times it, in quadrature.
    const double part = std::sqrt(static_cast<double>(n_atoms)) * params.spin_sigma /
                        (radius * radius * radius);
    return params.xi * std::sqrt(params.enrichment) * std::sqrt(part * part + 3.0 * part * part);
}

double far_shell_sigma(const BathParams& params) {
    params.validate();
    // int_{r0}^inf r^-4 dr = 1 / (3 r0^3); the 2 dm factor is 1 for spin-1/2.
    const double integral = 1.0 / (3.0 * params.r0 * params.r0 * params.r0);
    return 2.0 * params.spin_sigma * params.xi *
           std::sqrt(4.0 * std::numbers::pi * params.rho * params.enrichment * integral);
}

double near_sigma(std::span<const NearCatalogEntry> catalog,
                  const std::set<std::string>& explicit_labels, double threshold_mhz, double p,
                  double spin_sigma) {
    if (!(threshold_mhz >= 0.0)) throw std::invalid_argument("threshold must be nonnegative");
    require_probability(p);
    double variance = 0.0;
    for (const auto& entry : catalog) {
        entry.validate();
        if (!(entry.a_mhz > threshold_mhz)) continue;
        if (explicit_labels.contains(entry.label)) continue;
        const double s = entry.a_mhz * spin_sigma;
        variance += entry.multiplicity * p * s * s;
    }
    return std::sqrt(variance);
}

double total_sigma(double near, double far) {
    if (!(near >= 0.0) || !(far >= 0.0)) {
        throw std::invalid_argument("sigma contributions must be nonnegative");
    }
    return std::hypot(near, far);
}

}  // namespace nvodmr
