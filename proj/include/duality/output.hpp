#pragma once

#include <string>
#include <vector>

namespace duality {

/// One named data column / plot curve.
struct Series {
    std::string name;
    std::vector<double> values;
};

/// Stroke style for SVG curves, mirroring the usual solid/dashed/dotted
/// convention for conditional/conditional/marginal overlays.
enum class LineStyle { solid, dashed, dotted };

struct SvgSeries {
    std::string name;
    std::vector<double> values;
    LineStyle style;
    std::string color;  ///< any SVG color token
};

/// Full-precision, locale-independent decimal rendering (17 significant
/// digits, scientific notation); round-trips any double.
std::string format_full(double value);

/// Write a CSV file: '#'-prefixed comment lines first, then a header row
/// "<x_name>,<name>,..." and one row per sample. Values use format_full.
/// The file is written to a temporary path and renamed into place.
void write_csv(const std::string& path, const std::vector<std::string>& comments,
               const std::string& x_name, const std::vector<double>& xs,
               const std::vector<Series>& columns);

/// Write a self-contained SVG line plot (polylines, axes, tick labels,
/// legend; no external references).
void write_svg(const std::string& path, const std::string& title,
               const std::vector<double>& xs, const std::vector<SvgSeries>& curves);

}  // namespace duality
