#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

namespace nvodmr {

// Standard deviation of the quasistatic magnetic background produced by 13C
// nuclei that are not treated explicitly. All results are in MHz of electron
// Zeeman frequency and apply to each Cartesian field component.
struct BathParams {
    double xi = 19.9;          // MHz A^3, nuclear dipole coupling constant
    double rho = 0.177;        // carbon atoms per A^3
    double r0 = 6.0;           // A, inner radius of the continuum
    double enrichment = 1.0;   // 13C fraction p
    double spin_sigma = 0.5;   // std. dev. of one spin-1/2 component

    void validate() const;
};

inline constexpr double kDefaultNearThreshold = 8.0;  // MHz

struct NearCatalogEntry {
    std::string label;
    double a_mhz = 0.0;
    int multiplicity = 1;

    void validate() const;
};

// Proximal sites with |A| > 8 MHz: first shell plus the 13.7 and 12.8 MHz
// groups, split so presets can promote them to explicit treatment in steps.
std::vector<NearCatalogEntry> default_near_catalog();

// One shell of N atoms at radius r: 2 xi sqrt(N p) dm / r^3.
double shell_sigma(int n_atoms, double radius, const BathParams& params);

// Continuum of shells from r0 outward, integrated in closed form:
// xi sqrt(4 pi rho p / (3 r0^3)) * (dm / (1/2)).
double far_shell_sigma(const BathParams& params);

// Quadrature sum of A * dm over background entries with A > threshold whose
// label is not in explicit_labels, each weighted by multiplicity * p.
double near_sigma(std::span<const NearCatalogEntry> catalog,
                  const std::set<std::string>& explicit_labels, double threshold_mhz, double p,
                  double spin_sigma = 0.5);

double total_sigma(double near, double far);

}  // namespace nvodmr
