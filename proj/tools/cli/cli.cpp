#include "cli.hpp"

#include "nvodmr/compare.hpp"
#include "nvodmr/ensemble.hpp"
#include "nvodmr/errors.hpp"
#include "nvodmr/io/config_io.hpp"
#include "nvodmr/io/csv.hpp"
#include "nvodmr/io/svg_plot.hpp"
#include "nvodmr/peaks.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nvodmr::cli {

namespace fs = std::filesystem;

namespace {

struct RunFlags {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    unsigned threads = 0;
};

struct SweepFlags {
    std::string direction = "100";
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

struct BackgroundFlags {
    std::optional<double> enrichment;
    std::optional<double> threshold;
};

struct CompareFlags {
    std::string simulated;
    std::string experimental;
    bool fluorescence = false;
};

struct PlotFlags {
    std::vector<std::string> inputs;
    double offset = 1.2;
    double contrast = 1.0;
    bool absorption = false;
};

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

SimulationConfig load_with_overrides(const RunFlags& flags) {
    SimulationConfig config = io::load_config(flags.config);
    if (flags.seed) config.seed = *flags.seed;
    if (flags.samples) config.n_samples = *flags.samples;
    config.validate();
    return config;
}

// "100", "[1-11]", "-1,1,1" or "1 0 0".
Eigen::Vector3d parse_direction(std::string text) {
    std::erase_if(text, [](char c) { return c == '[' || c == ']'; });
    std::vector<double> parts;
    if (text.find_first_of(", ") != std::string::npos) {
        for (char& c : text) if (c == ',') c = ' ';
        std::istringstream is(text);
        double v = 0.0;
        while (is >> v) parts.push_back(v);
        if (!is.eof()) parts.clear();
    } else {
        double sign = 1.0;
        for (const char c : text) {
            if (c == '-') {
                sign = -1.0;
            } else if (c >= '0' && c <= '9') {
                parts.push_back(sign * (c - '0'));
                sign = 1.0;
            } else {
                parts.clear();
                break;
            }
        }
    }
    if (parts.size() != 3) throw std::invalid_argument("cannot parse direction '" + text + "'");
    const Eigen::Vector3d d(parts[0], parts[1], parts[2]);
    if (d.norm() == 0.0) throw std::invalid_argument("direction must be nonzero");
    return d;
}

std::vector<double> sweep_values(const SweepFlags& s) {
    if (!(s.step > 0.0) || !std::isfinite(s.step)) throw std::invalid_argument("--step must be positive");
    if (!(s.stop >= s.start)) throw std::invalid_argument("--stop must not be below --start");
    const auto count = static_cast<std::size_t>(std::floor((s.stop - s.start) / s.step + 1e-9)) + 1;
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = s.start + static_cast<double>(i) * s.step;
    return values;
}

int cmd_simulate(const RunFlags& flags, std::ostream& out) {
    const SimulationConfig config = load_with_overrides(flags);
    const Spectrum spectrum = simulate_spectrum(config, {flags.threads});
    const auto manifest = io::make_manifest(config, {flags.out});
    io::write_spectrum_csv(flags.out, spectrum, manifest);
    out << "wrote " << flags.out << " (" << spectrum.size() << " bins, backend "
        << to_string(resolve_backend(config)) << ")\n";
    return kExitOk;
}

int cmd_sweep(const RunFlags& flags, const SweepFlags& sweep, std::ostream& out) {
    const std::vector<double> fields = sweep_values(sweep);
    const Eigen::Vector3d direction = parse_direction(sweep.direction);
    const SimulationConfig config = load_with_overrides(flags);
    const fs::path dir(flags.out);
    fs::create_directories(dir);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "spectrum_%03zu_B%.2fG.csv", i, fields[i]);
        names.emplace_back(name);
    }
    const std::string dir_text = fmt("%g", direction.x()) + " " + fmt("%g", direction.y()) + " " +
                                 fmt("%g", direction.z());
    const std::vector<Spectrum> spectra = sweep_field(config, fields, direction, {flags.threads});
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        const auto manifest = io::make_manifest(spectra[i].config, {names[i]});
        io::write_spectrum_csv(dir / names[i], spectra[i], manifest,
                               {"field_gauss: " + fmt("%.6g", fields[i]),
                                "field_direction: " + dir_text});
    }

    const fs::path index = dir / "index.csv";
    std::ofstream idx(index);
    if (!idx) throw std::runtime_error("cannot open '" + index.string() + "' for writing");
    for (const auto& line : io::manifest_lines(io::make_manifest(config, names))) idx << line << '\n';
    idx << "# field_direction: " << dir_text << '\n' << "field_gauss,file\n";
    for (std::size_t i = 0; i < fields.size(); ++i) idx << fmt("%.6g", fields[i]) << ',' << names[i] << '\n';
    idx.flush();
    if (!idx) throw std::runtime_error("failed writing '" + index.string() + "'");
    out << "wrote " << fields.size() << " spectra and index.csv to " << dir.string() << '\n';
    return kExitOk;
}

int cmd_background(const RunFlags& flags, const BackgroundFlags& bg, std::ostream& out) {
    SimulationConfig config = io::load_config(flags.config);
    if (bg.enrichment) config.enrichment = *bg.enrichment;
    if (bg.threshold) config.bath.threshold_mhz = *bg.threshold;
    config.validate();
    const BackgroundBreakdown b = background_breakdown(config);
    out << "near_sigma_mhz: " << fmt("%.3f", b.near_mhz) << '\n'
        << "far_sigma_mhz: " << fmt("%.3f", b.far_mhz) << '\n'
        << "total_sigma_mhz: " << fmt("%.3f", b.total_mhz) << '\n';
    return kExitOk;
}

int cmd_compare(const CompareFlags& flags, std::ostream& out) {
    const io::CsvCurve sim_csv = io::read_curve_csv(flags.simulated);
    io::CsvCurve exp_csv = io::read_curve_csv(flags.experimental);
    if (flags.fluorescence || exp_csv.value_column == "fluorescence") {
        exp_csv.curve = fluorescence_to_strength(std::move(exp_csv.curve));
    }
    const ComparisonReport r = compare(io::spectrum_from_curve(sim_csv), exp_csv.curve);
    out << "rms_residual: " << fmt("%.9g", r.rms_residual) << '\n'
        << "scale: " << fmt("%.9g", r.scale) << '\n'
        << "offset: " << fmt("%.9g", r.offset) << '\n'
        << "overlap_fraction: " << fmt("%.4f", r.overlap_fraction) << '\n'
        << "compared_bins: " << r.compared_bins << '\n'
        << "matched_peaks: " << r.matched_peaks.size() << '\n';
    for (std::size_t i = 0; i < r.matched_peaks.size(); ++i) {
        const auto& m = r.matched_peaks[i];
        out << "peak " << i + 1 << ": sim_center_mhz=" << fmt("%.3f", m.simulated.center_mhz)
            << " exp_center_mhz=" << fmt("%.3f", m.experimental.center_mhz)
            << " delta_center_mhz=" << fmt("%.3f", m.delta_center_mhz)
            << " sim_fwhm_mhz=" << fmt("%.3f", m.simulated.fwhm_mhz)
            << " exp_fwhm_mhz=" << fmt("%.3f", m.experimental.fwhm_mhz) << '\n';
    }
    return kExitOk;
}

int cmd_plot(const RunFlags& flags, const PlotFlags& plot, std::ostream& out, std::ostream& err) {
    if (plot.inputs.empty()) {
        err << "plot: at least one CSV file is required\n";
        return kExitUsage;
    }
    io::SvgPlot svg("Microwave frequency (MHz)",
                    "Normalized intensity (offset)");
    const std::size_t n = plot.inputs.size();
    for (std::size_t k = 0; k < n; ++k) {
        const io::CsvCurve csv = io::read_curve_csv(plot.inputs[k]);
        const double shift = static_cast<double>(n - 1 - k) * plot.offset;
        io::SvgPlot::Trace t{fs::path(plot.inputs[k]).stem().string(), csv.curve.freq_mhz, {}};
        t.y.reserve(csv.curve.value.size());
        for (const double v : csv.curve.value) {
            t.y.push_back(shift + (plot.absorption ? v : 1.0 - plot.contrast * v));
        }
        svg.add_trace(std::move(t));
    }
    svg.write(fs::path(flags.out));
    out << "wrote " << flags.out << " (" << n << " traces)\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ensemble ODMR spectra of NV centers in 13C-enriched diamond"};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::tool_version());

    RunFlags flags;
    SweepFlags sweep;
    BackgroundFlags bg;
    CompareFlags cmp;
    PlotFlags plot;

    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--config", flags.config, "config JSON, spectrum CSV, or preset name")->required();
        sub->add_option("--seed", flags.seed, "override the config seed");
        sub->add_option("--samples", flags.samples, "override the config sample count");
        sub->add_option("--threads", flags.threads, "worker threads (0 = all cores); never changes results");
    };

    auto* simulate = app.add_subcommand("simulate", "simulate one ensemble spectrum");
    add_run_flags(simulate);
    simulate->add_option("--out", flags.out, "output CSV")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "simulate a series of field magnitudes");
    add_run_flags(sweep_cmd);
    sweep_cmd->add_option("--direction", sweep.direction, "crystal direction, e.g. 100 or 111");
    sweep_cmd->add_option("--start", sweep.start, "first field, G");
    sweep_cmd->add_option("--stop", sweep.stop, "last field, G (inclusive)")->required();
    sweep_cmd->add_option("--step", sweep.step, "field increment, G")->required();
    sweep_cmd->add_option("--out", flags.out, "output directory")->required();

    auto* background = app.add_subcommand("background", "print the background field sigma");
    background->add_option("--config", flags.config, "config JSON or preset name")->required();
    background->add_option("--enrichment", bg.enrichment, "override the 13C fraction");
    background->add_option("--threshold", bg.threshold, "override the near-site threshold, MHz");

    auto* compare_cmd = app.add_subcommand("compare", "compare a simulated CSV with a measured curve");
    compare_cmd->add_option("simulated", cmp.simulated, "simulated spectrum CSV")->required();
    compare_cmd->add_option("experimental", cmp.experimental, "measured CSV")->required();
    compare_cmd->add_flag("--fluorescence", cmp.fluorescence,
                          "values are normalized fluorescence (dips), not line strength");

    auto* plot_cmd = app.add_subcommand("plot", "render spectra as stacked SVG traces");
    plot_cmd->add_option("inputs", plot.inputs, "spectrum CSV files, top to bottom");
    plot_cmd->add_option("--out", flags.out, "output SVG")->required();
    plot_cmd->add_option("--offset", plot.offset, "vertical offset between traces");
    plot_cmd->add_option("--contrast", plot.contrast, "dip depth for full line strength");
    plot_cmd->add_flag("--absorption", plot.absorption, "plot line strength instead of dips");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << '\n';
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(flags, out);
        if (sweep_cmd->parsed()) return cmd_sweep(flags, sweep, out);
        if (background->parsed()) return cmd_background(flags, bg, out);
        if (compare_cmd->parsed()) return cmd_compare(cmp, out);
        if (plot_cmd->parsed()) return cmd_plot(flags, plot, out, err);
    } catch (const InsufficientOverlapError& e) {
        err << "error: " << e.what() << '\n';
        return kExitOverlap;
    } catch (const DimensionLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSimulation;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSimulation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nvodmr::cli
