#pragma once

#include "nvodmr/compare.hpp"
#include "nvodmr/io/manifest.hpp"
#include "nvodmr/spectrum.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace nvodmr::io {

// One data row, "freq_mhz,intensity" with 6 significant digits.
std::string format_row(double freq_mhz, double value);

// Manifest header, extra "# key: value" lines, column header, one row per bin.
void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum, const RunManifest& manifest,
                        const std::vector<std::string>& extra_header = {});
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum,
                        const RunManifest& manifest,
                        const std::vector<std::string>& extra_header = {});

struct CsvCurve {
    SampledCurve curve;
    std::string freq_column = "freq_mhz";
    std::string value_column = "intensity";
    std::vector<std::string> comments;  // '#' lines without the marker
};

// Two-column numeric CSV; '#' lines are comments and an optional first
// non-comment line names the columns. Throws std::runtime_error on failure.
CsvCurve read_curve_csv(const std::filesystem::path& path);

// Data rows of a CSV file, comments and column header stripped.
std::vector<std::string> read_data_rows(const std::filesystem::path& path);

// Spectrum view of a simulated CSV (intensity column as is).
Spectrum spectrum_from_curve(const CsvCurve& csv);

}  // namespace nvodmr::io
