#include "nvodmr/ensemble.hpp"

#include "nvodmr/eigensystem.hpp"
#include "nvodmr/orientation.hpp"
#include "nvodmr/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace nvodmr {

double Spectrum::bin_width() const {
    return bin_centers.size() >= 2 ? bin_centers[1] - bin_centers[0]
                                   : config.histogram.bin_width_mhz;
}

InstanceParams sample_instance(const SimulationConfig& config, std::uint64_t draw_index,
                               double sigma_total_mhz) {
    InstanceStream rng(config.seed, draw_index);
    InstanceParams p;

    const auto& w = config.orientation_weights;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    const double u = rng.uniform() * total;
    double acc = 0.0;
    // Rounding can leave u == total; fall back to the last axis with weight.
    p.orientation = kOrientationCount - 1;
    while (p.orientation > 0 && w[static_cast<std::size_t>(p.orientation)] <= 0.0) --p.orientation;
    for (int k = 0; k < kOrientationCount; ++k) {
        acc += w[static_cast<std::size_t>(k)];
        if (u < acc) {
            p.orientation = k;
            break;
        }
    }

    p.e_mhz = config.delta_e_mhz * rng.normal();
    for (int c = 0; c < 3; ++c) p.b_background_mhz(c) = sigma_total_mhz * rng.normal();

    const auto n_sites = static_cast<int>(config.explicit_sites.size());
    for (int n = 0; n < n_sites; ++n) {
        if (rng.bernoulli(config.enrichment)) p.occupancy |= OccupancyMask{1} << n;
    }
    return p;
}

InstanceParams sample_instance(const SimulationConfig& config, std::uint64_t draw_index) {
    return sample_instance(config, draw_index, background_breakdown(config).total_mhz);
}

std::vector<TransitionLine> instance_lines(const SimulationConfig& config,
                                           const InstanceParams& instance, Backend backend) {
    if (backend == Backend::automatic) backend = resolve_backend(config);
    const ZfsParams zfs(config.zfs_d_mhz, instance.e_mhz);
    const Eigen::Vector3d b_nv =
        orientation_field(config.field.b_crystal_gauss, instance.orientation, config.field.gamma_e) +
        instance.b_background_mhz;
    if (backend == Backend::factorized) {
        return factorized_transitions(zfs, b_nv, config.explicit_sites, instance.occupancy);
    }
    const SpinRegister reg =
        build_register(static_cast<int>(config.explicit_sites.size()), config.max_nuclei);
    const Eigen::MatrixXcd h = build_hamiltonian(zfs, b_nv, config.explicit_sites,
                                                 instance.occupancy, reg, config.hamiltonian);
    return extract_transitions(eigendecompose(h), reg);
}

namespace {

// Discrete Lorentzian of the given FWHM applied to bin weights (and, squared,
// to bin variances).
void lorentzian_broaden(std::vector<double>& weights, std::vector<double>& variances,
                        double fwhm, double bin_width) {
    const double half = 0.5 * fwhm;
    const auto n = static_cast<std::ptrdiff_t>(weights.size());
    const auto reach = std::min<std::ptrdiff_t>(
        n, static_cast<std::ptrdiff_t>(std::ceil(50.0 * fwhm / bin_width)) + 1);
    std::vector<double> kernel(static_cast<std::size_t>(2 * reach + 1));
    for (std::ptrdiff_t k = -reach; k <= reach; ++k) {
        const double d = static_cast<double>(k) * bin_width;
        kernel[static_cast<std::size_t>(k + reach)] =
            bin_width * half / (std::numbers::pi * (d * d + half * half));
    }
    std::vector<double> w_out(weights.size(), 0.0);
    std::vector<double> v_out(variances.size(), 0.0);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t k = -reach; k <= reach; ++k) {
            const std::ptrdiff_t j = i + k;
            if (j < 0 || j >= n) continue;
            const double kv = kernel[static_cast<std::size_t>(k + reach)];
            w_out[static_cast<std::size_t>(i)] += kv * weights[static_cast<std::size_t>(j)];
            if (!variances.empty()) {
                v_out[static_cast<std::size_t>(i)] +=
                    kv * kv * variances[static_cast<std::size_t>(j)];
            }
        }
    }
    weights = std::move(w_out);
    if (!variances.empty()) variances = std::move(v_out);
}

}  // namespace

Spectrum simulate_spectrum(const SimulationConfig& config, const RunOptions& options) {
    config.validate();
    const Backend backend = resolve_backend(config);
    // Refuse oversized registers before any work starts.
    (void)build_register(static_cast<int>(config.explicit_sites.size()), config.max_nuclei);

    const double sigma = background_breakdown(config).total_mhz;
    const HistogramSpec& hist = config.histogram;
    const std::size_t bins = hist.bin_count();
    const std::size_t n_blocks = (config.n_samples + kSamplesPerBlock - 1) / kSamplesPerBlock;

    std::vector<std::vector<double>> block_hist(n_blocks);
    std::atomic<std::size_t> next_block{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::string error_context;

    auto worker = [&] {
        for (;;) {
            const std::size_t b = next_block.fetch_add(1);
            if (b >= n_blocks) return;
            std::vector<double> h(bins, 0.0);
            const std::size_t first = b * kSamplesPerBlock;
            const std::size_t last = std::min(config.n_samples, first + kSamplesPerBlock);
            for (std::size_t s = first; s < last; ++s) {
                try {
                    const InstanceParams inst = sample_instance(config, s, sigma);
                    for (const auto& line : instance_lines(config, inst, backend)) {
                        if (const auto bin = hist.bin_of(line.freq_mhz)) h[*bin] += line.weight;
                    }
                } catch (const std::exception& e) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                        error_context = "instance " + std::to_string(s) + ": " + e.what();
                    }
                    next_block.store(n_blocks);
                    return;
                }
            }
            block_hist[b] = std::move(h);
        }
    };

    unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    threads = static_cast<unsigned>(
        std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n_blocks, 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) throw std::runtime_error(error_context);

    // Fixed reduction order: block index.
    std::vector<double> totals(bins, 0.0);
    for (const auto& h : block_hist) {
        for (std::size_t i = 0; i < bins; ++i) totals[i] += h[i];
    }
    std::vector<double> variances;
    if (n_blocks >= 2) {
        variances.assign(bins, 0.0);
        const auto nb = static_cast<double>(n_blocks);
        for (std::size_t i = 0; i < bins; ++i) {
            const double mean = totals[i] / nb;
            double ss = 0.0;
            for (const auto& h : block_hist) ss += (h[i] - mean) * (h[i] - mean);
            variances[i] = nb * ss / (nb - 1.0);
        }
    }
    if (config.lorentzian_fwhm_mhz > 0.0) {
        lorentzian_broaden(totals, variances, config.lorentzian_fwhm_mhz, hist.bin_width_mhz);
    }

    Spectrum out;
    out.config = config;
    out.bin_centers.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) out.bin_centers[i] = hist.bin_center(i);
    out.total_weight = std::accumulate(totals.begin(), totals.end(), 0.0);
    const double peak = totals.empty() ? 0.0 : *std::max_element(totals.begin(), totals.end());
    out.normalization = peak > 0.0 ? 1.0 / peak : 1.0;
    out.intensity.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) out.intensity[i] = totals[i] * out.normalization;
    out.stderr_est.resize(variances.size());
    for (std::size_t i = 0; i < variances.size(); ++i) {
        out.stderr_est[i] = std::sqrt(variances[i]) * out.normalization;
    }
    return out;
}

std::vector<Spectrum> sweep_field(const SimulationConfig& config,
                                  std::span<const double> magnitudes_gauss,
                                  const Eigen::Vector3d& direction, const RunOptions& options) {
    if (!direction.allFinite() || direction.norm() == 0.0) {
        throw std::invalid_argument("sweep direction must be a nonzero vector");
    }
    const Eigen::Vector3d unit = direction.normalized();
    std::vector<Spectrum> out;
    out.reserve(magnitudes_gauss.size());
    for (const double b : magnitudes_gauss) {
        SimulationConfig at_field = config;
        at_field.field.b_crystal_gauss = b * unit;
        out.push_back(simulate_spectrum(at_field, options));
    }
    return out;
}

}  // namespace nvodmr
