#include "nvodmr/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nvodmr::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

}  // namespace

std::string format_row(double freq_mhz, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g,%.6g", freq_mhz, value);
    return buf;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum, const RunManifest& manifest,
                        const std::vector<std::string>& extra_header) {
    for (const auto& line : manifest_lines(manifest)) os << line << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", spectrum.total_weight);
    os << "# total_weight: " << buf << '\n';
    for (const auto& line : extra_header) os << "# " << line << '\n';
    os << "freq_mhz,intensity\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        os << format_row(spectrum.bin_centers[i], spectrum.intensity[i]) << '\n';
    }
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum,
                        const RunManifest& manifest, const std::vector<std::string>& extra_header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_spectrum_csv(out, spectrum, manifest, extra_header);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

CsvCurve read_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    CsvCurve out;
    std::string line;
    bool seen_data = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            out.comments.push_back(trim(t.substr(1)));
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected two columns");
        }
        double f = 0.0, v = 0.0;
        const std::string a = t.substr(0, comma);
        const std::string b = t.substr(comma + 1);
        if (!parse_double(a, f) || !parse_double(b, v)) {
            if (!seen_data && out.curve.freq_mhz.empty()) {
                out.freq_column = trim(a);
                out.value_column = trim(b);
                seen_data = true;
                continue;
            }
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": malformed row");
        }
        seen_data = true;
        out.curve.freq_mhz.push_back(f);
        out.curve.value.push_back(v);
    }
    if (out.curve.freq_mhz.empty()) throw std::runtime_error("'" + path.string() + "' has no data rows");
    return out;
}

std::vector<std::string> read_data_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    std::vector<std::string> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        rows.push_back(line);
    }
    return rows;
}

Spectrum spectrum_from_curve(const CsvCurve& csv) {
    Spectrum s;
    s.bin_centers = csv.curve.freq_mhz;
    s.intensity = csv.curve.value;
    if (s.bin_centers.size() >= 2) {
        s.config.histogram.bin_width_mhz = s.bin_centers[1] - s.bin_centers[0];
    }
    return s;
}

}  // namespace nvodmr::io
