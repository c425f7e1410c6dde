#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace nvodmr::io {

// Static line plot with linear axes, one polyline per trace.
class SvgPlot {
public:
    struct Trace {
        std::string label;
        std::vector<double> x;
        std::vector<double> y;
    };

    SvgPlot(std::string x_label, std::string y_label, double width = 900.0,
            double height = 600.0);

    void add_trace(Trace trace);
    std::size_t trace_count() const noexcept { return traces_.size(); }

    void write(std::ostream& os) const;
    void write(const std::filesystem::path& path) const;

private:
    std::string x_label_;
    std::string y_label_;
    double width_;
    double height_;
    std::vector<Trace> traces_;
};

// Tick positions covering [lo, hi] with a 1-2-5 step, about `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace nvodmr::io
