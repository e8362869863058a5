/*
   Copyright 2026, the sincfrac authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "sincfrac/cli/emit.hpp"

namespace sincfrac::cli {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
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

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

struct Range {
    double lo;
    double hi;
};

Range padded(double lo, double hi) {
    if (!(lo < hi)) {
        const double pad = lo == 0.0 ? 0.05 : 0.05 * std::abs(lo);
        return {lo - pad, hi + pad};
    }
    return {lo, hi};
}

// Ticks at 1, 2 or 5 times a power of ten, about five per axis.
std::vector<double> ticks(Range r) {
    const double raw = (r.hi - r.lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    std::vector<double> out;
    for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-9 * step; v += step) out.push_back(v);
    return out;
}

}  // namespace

void write_svg(const Plot& plot, std::ostream& out) {
    if (plot.series.empty()) throw OutputError("svg: no series to plot");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const Series& s : plot.series) {
        if (s.x.size() != s.y.size()) throw OutputError("svg: series '" + s.label + "' has mismatched x/y");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, s.y[i]);
            yhi = std::max(yhi, s.y[i]);
        }
    }
    if (!std::isfinite(xlo)) {
        xlo = xhi = 0.0;
        ylo = yhi = 0.0;
    }
    const Range xr = padded(xlo, xhi);
    const Range yr = padded(ylo, yhi);
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<title>" << escape(plot.title) << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n"
        << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape(plot.title) << "</text>\n";

    // Axes box and ticks.
    out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(ph) << "\"/>\n";
    for (double t : ticks(xr)) {
        out << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(px(t))
            << "\" y2=\"" << num(kTop + ph + 5) << "\"/>\n";
    }
    for (double t : ticks(yr)) {
        out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(kLeft)
            << "\" y2=\"" << num(py(t)) << "\"/>\n";
    }
    out << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (double t : ticks(xr)) {
        out << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kTop + ph + 18)
            << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(yr)) {
        out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(t) + 4)
            << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 16)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(plot.x_label) << "</text>\n"
        << "<text x=\"18\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << num(kTop + ph / 2) << ")\">" << escape(plot.y_label)
        << "</text>\n</g>\n";

    // Curves.
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const Series& s = plot.series[k];
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[k % kPalette.size()]
            << "\" stroke-width=\"1.6\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            out << (first ? "" : " ") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
            first = false;
        }
        out << "\"/>\n";
    }

    // Legend.
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const double y = kTop + 14 + 20.0 * static_cast<double>(k);
        const double x = kWidth - kRight + 16;
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x + 24) << "\" y2=\""
            << num(y) << "\" stroke=\"" << kPalette[k % kPalette.size()] << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << num(x + 30) << "\" y=\"" << num(y + 4) << "\">"
            << escape(plot.series[k].label) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
}

void emit_svg(const Plot& plot, const std::string& path) {
    std::ostringstream buf;
    write_svg(plot, buf);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw OutputError("cannot open '" + path + "' for writing");
    f << buf.str();
    f.flush();
    if (!f) throw OutputError("write to '" + path + "' failed");
}

}  // namespace sincfrac::cli
