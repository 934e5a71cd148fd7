#ifndef QWCAVITY_SVG_HPP
#define QWCAVITY_SVG_HPP

// Static line charts as SVG 1.1 text.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "errors.hpp"

namespace qwcavity {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

inline std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
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

inline std::string line_chart_svg(const std::vector<PlotSeries>& series, const std::string& x_label) {
    constexpr double width = 800, height = 500, left = 70, right = 20, top = 20, bottom = 60;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
            xmin = std::min(xmin, s.x[k]);
            xmax = std::max(xmax, s.x[k]);
            ymin = std::min(ymin, s.y[k]);
            ymax = std::max(ymax, s.y[k]);
        }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
      << "<g class=\"axes\" stroke=\"black\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph << "\"/>\n"
      << "</g>\n";
    o << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = xmin + (xmax - xmin) * k / 4.0, yv = ymin + (ymax - ymin) * k / 4.0;
        o << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
          << format_number(xv) << "</text>\n";
        o << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << format_number(yv)
          << "</text>\n";
    }
    o << "</g>\n";
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape_xml(x_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        o << "<polyline class=\"series\" fill=\"none\" stroke-width=\"1.5\" stroke=\"" << colors[s % 6]
          << "\" points=\"";
        bool first = true;
        for (std::size_t k = 0; k < series[s].x.size(); ++k) {
            if (!std::isfinite(series[s].x[k]) || !std::isfinite(series[s].y[k])) continue;
            o << (first ? "" : " ") << px(series[s].x[k]) << ',' << py(series[s].y[k]);
            first = false;
        }
        o << "\"/>\n";
    }
    if (series.size() > 1) {
        o << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n";
        for (std::size_t s = 0; s < series.size(); ++s) {
            const double y = top + 15 + 18.0 * static_cast<double>(s);
            o << "<line x1=\"" << left + pw - 150 << "\" y1=\"" << y << "\" x2=\"" << left + pw - 125 << "\" y2=\"" << y
              << "\" stroke=\"" << colors[s % 6] << "\" stroke-width=\"2\"/>\n";
            o << "<text x=\"" << left + pw - 118 << "\" y=\"" << y + 4 << "\">" << escape_xml(series[s].label)
              << "</text>\n";
        }
        o << "</g>\n";
    } else if (series.size() == 1) {
        o << "<text x=\"15\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 15 " << top + ph / 2
          << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape_xml(series[0].label)
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

/// Plots `columns` of a csv file against its first column.
inline void render_plot(const std::filesystem::path& csv_path, const std::vector<std::string>& columns,
                        const std::filesystem::path& out_svg) {
    if (columns.empty()) throw InputError("plot needs at least one column");
    const CsvTable table = read_csv(csv_path);
    std::vector<PlotSeries> series;
    for (const auto& c : columns) {
        if (!table.column(c)) throw InputError("csv " + csv_path.string() + " has no column '" + c + "'");
    }
    const std::string x_name = table.header.front();
    const auto x = table.numeric(x_name);
    for (const auto& c : columns) series.push_back({c, x, table.numeric(c)});

    std::ofstream f(out_svg, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + out_svg.string() + " for writing");
    f << line_chart_svg(series, x_name);
    if (!f) throw IoError("failed writing " + out_svg.string());
}

} // namespace qwcavity

#endif
