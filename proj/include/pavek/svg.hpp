#pragma once

#include <string>
#include <vector>

// Bare-bones SVG line/bar renderings for the report commands. These exist to
// make trends inspectable, not to be a plotting library.

namespace pavek {

struct SvgSeries {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f77b4";
};

struct SvgBarGroup {
  std::string label;                // category (e.g. section id)
  std::vector<double> values;       // one bar per series
};

/// Line chart with markers; axes auto-scaled, y can be inverted (deflection
/// plots grow downward).
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<SvgSeries>& series,
                           bool invert_y = false);

/// Grouped bar chart; one group per category.
std::string svg_bar_chart(const std::string& title, const std::string& y_label,
                          const std::vector<std::string>& series_labels,
                          const std::vector<SvgBarGroup>& groups);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace pavek
