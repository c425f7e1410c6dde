#include "nvodmr/io/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace nvodmr::io {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v, double step) {
    char buf[32];
    const int decimals = step >= 1.0 ? 0 : static_cast<int>(std::ceil(-std::log10(step)));
    std::snprintf(buf, sizeof buf, "%.*f", decimals, std::abs(v) < 1e-12 * step ? 0.0 : v);
    return buf;
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
    if (!(hi > lo) || target < 1) return {lo};
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (const double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) ticks.push_back(t);
    return ticks;
}

SvgPlot::SvgPlot(std::string x_label, std::string y_label, double width, double height)
    : x_label_(std::move(x_label)), y_label_(std::move(y_label)), width_(width), height_(height) {}

void SvgPlot::add_trace(Trace trace) {
    if (trace.x.size() != trace.y.size()) throw std::invalid_argument("trace x/y length mismatch");
    traces_.push_back(std::move(trace));
}

void SvgPlot::write(std::ostream& os) const {
    const double left = 80.0, right = 170.0, top = 30.0, bottom = 60.0;
    const double pw = width_ - left - right;
    const double ph = height_ - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& t : traces_) {
        for (std::size_t i = 0; i < t.x.size(); ++i) {
            xmin = std::min(xmin, t.x[i]);
            xmax = std::max(xmax, t.x[i]);
            ymin = std::min(ymin, t.y[i]);
            ymax = std::max(ymax, t.y[i]);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\""
       << num(height_) << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<g font-family=\"sans-serif\" font-size=\"12\">\n";

    os << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw)
       << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

    const auto xt = nice_ticks(xmin, xmax, 8);
    const double xstep = xt.size() >= 2 ? xt[1] - xt[0] : 1.0;
    for (const double t : xt) {
        os << "<line x1=\"" << num(sx(t)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(t))
           << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(top + ph + 20)
           << "\" text-anchor=\"middle\">" << tick_label(t, xstep) << "</text>\n";
    }
    const auto yt = nice_ticks(ymin, ymax, 6);
    const double ystep = yt.size() >= 2 ? yt[1] - yt[0] : 1.0;
    for (const double t : yt) {
        os << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(t)) << "\" x2=\"" << num(left)
           << "\" y2=\"" << num(sy(t)) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(t) + 4)
           << "\" text-anchor=\"end\">" << tick_label(t, ystep) << "</text>\n";
    }
    os << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height_ - 15)
       << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n"
       << "<text x=\"20\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << num(top + ph / 2) << ")\">" << escape(y_label_) << "</text>\n";

    for (std::size_t k = 0; k < traces_.size(); ++k) {
        const auto& t = traces_[k];
        const char* color = kPalette[k % kPalette.size()];
        os << "<polyline class=\"trace\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < t.x.size(); ++i) {
            if (i) os << ' ';
            os << num(sx(t.x[i])) << ',' << num(sy(t.y[i]));
        }
        os << "\"/>\n";
        const double ly = top + 16.0 + 18.0 * static_cast<double>(k);
        os << "<line x1=\"" << num(left + pw + 12) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
           << num(left + pw + 32) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << num(left + pw + 38) << "\" y=\"" << num(ly) << "\">" << escape(t.label)
           << "</text>\n";
    }
    os << "</g>\n</svg>\n";
}

void SvgPlot::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace nvodmr::io
