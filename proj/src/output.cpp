#include "duality/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace duality {

namespace {

/// Write content to path atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp + " for writing");
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

std::string dash_array(LineStyle style) {
    switch (style) {
        case LineStyle::dashed:
            return " stroke-dasharray=\"10,6\"";
        case LineStyle::dotted:
            return " stroke-dasharray=\"2,5\"";
        case LineStyle::solid:
        default:
            return "";
    }
}

/// Short fixed formatting for SVG coordinates and tick labels.
std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

std::string format_full(double value) {
    char buf[64];
    // %.16e prints 17 significant digits; the C locale decimal point is
    // guaranteed at startup, so output is locale-independent.
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& comments,
               const std::string& x_name, const std::vector<double>& xs,
               const std::vector<Series>& columns) {
    for (const Series& col : columns) {
        if (col.values.size() != xs.size()) {
            throw std::invalid_argument("write_csv: column '" + col.name +
                                        "' length mismatch");
        }
    }
    std::ostringstream out;
    for (const std::string& line : comments) {
        out << "# " << line << '\n';
    }
    out << x_name;
    for (const Series& col : columns) {
        out << ',' << col.name;
    }
    out << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << format_full(xs[i]);
        for (const Series& col : columns) {
            out << ',' << format_full(col.values[i]);
        }
        out << '\n';
    }
    write_file_atomic(path, out.str());
}

void write_svg(const std::string& path, const std::string& title,
               const std::vector<double>& xs, const std::vector<SvgSeries>& curves) {
    if (xs.empty() || curves.empty()) {
        throw std::invalid_argument("write_svg: nothing to plot");
    }
    for (const SvgSeries& c : curves) {
        if (c.values.size() != xs.size()) {
            throw std::invalid_argument("write_svg: curve '" + c.name +
                                        "' length mismatch");
        }
    }
    const double width = 900.0;
    const double height = 540.0;
    const double ml = 78.0, mr = 24.0, mt = 46.0, mb = 56.0;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    const double x_lo = xs.front();
    const double x_hi = xs.back();
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
    for (const SvgSeries& c : curves) {
        for (double v : c.values) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    if (y_hi == y_lo) {
        y_hi = y_lo + 1.0;
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    const auto py = [&](double y) { return mt + (y_hi - y) / (y_hi - y_lo) * ph; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"26\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"17\">"
        << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    const int n_ticks = 6;
    for (int t = 0; t <= n_ticks; ++t) {
        const double fx = x_lo + (x_hi - x_lo) * t / n_ticks;
        const double fy = y_lo + (y_hi - y_lo) * t / n_ticks;
        out << "<line x1=\"" << px(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(fx)
            << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << px(fx) << "\" y=\"" << mt + ph + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">"
            << fmt(fx) << "</text>\n"
            << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml
            << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 9 << "\" y=\"" << py(fy) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
            << fmt(fy, "%.3g") << "</text>\n";
    }
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">x</text>\n"
        << "<text x=\"20\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 20 "
        << mt + ph / 2 << ")\">intensity</text>\n";

    // curves
    for (const SvgSeries& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.color
            << "\" stroke-width=\"1.5\"" << dash_array(c.style) << " points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) {
                out << ' ';
            }
            out << fmt(px(xs[i])) << ',' << fmt(py(c.values[i]));
        }
        out << "\"/>\n";
    }

    // legend
    double ly = mt + 14.0;
    for (const SvgSeries& c : curves) {
        out << "<line x1=\"" << ml + pw - 170 << "\" y1=\"" << ly << "\" x2=\""
            << ml + pw - 130 << "\" y2=\"" << ly << "\" stroke=\"" << c.color
            << "\" stroke-width=\"1.5\"" << dash_array(c.style) << "/>\n"
            << "<text x=\"" << ml + pw - 122 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << c.name
            << "</text>\n";
        ly += 19.0;
    }
    out << "</svg>\n";
    write_file_atomic(path, out.str());
}

}  // namespace duality
