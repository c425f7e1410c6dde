#pragma once

#include "nvodmr/config.hpp"
#include "nvodmr/spectrum.hpp"
#include "nvodmr/transitions.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace nvodmr {

// Random parameters of one NV center in the ensemble.
struct InstanceParams {
    double e_mhz = 0.0;
    Eigen::Vector3d b_background_mhz = Eigen::Vector3d::Zero();
    OccupancyMask occupancy = 0;
    int orientation = 0;
};

// Samples consumed per histogram block. Blocks are the unit of parallel work
// and of the batch-means error estimate; the layout never depends on threads.
inline constexpr std::size_t kSamplesPerBlock = 1024;

// Pure function of (config.seed, draw_index). sigma_total_mhz is the
// per-component background standard deviation.
InstanceParams sample_instance(const SimulationConfig& config, std::uint64_t draw_index,
                               double sigma_total_mhz);
InstanceParams sample_instance(const SimulationConfig& config, std::uint64_t draw_index);

// Transition lines of one instance with the given backend (automatic is
// resolved from the config).
std::vector<TransitionLine> instance_lines(const SimulationConfig& config,
                                           const InstanceParams& instance, Backend backend);

struct RunOptions {
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Monte Carlo ensemble spectrum. Bit-identical for equal configs regardless
// of the thread count.
Spectrum simulate_spectrum(const SimulationConfig& config, const RunOptions& options = {});

// One spectrum per field magnitude along `direction` (crystal frame, any
// nonzero length). Every field reuses config.seed.
std::vector<Spectrum> sweep_field(const SimulationConfig& config,
                                  std::span<const double> magnitudes_gauss,
                                  const Eigen::Vector3d& direction,
                                  const RunOptions& options = {});

}  // namespace nvodmr
