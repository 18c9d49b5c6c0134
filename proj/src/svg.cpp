#include "pavek/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pavek {

namespace {

constexpr int kW = 640, kH = 420;
constexpr int kMarginL = 70, kMarginR = 20, kMarginT = 40, kMarginB = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Scale {
  double lo, hi;
  double px0, px1;
  double operator()(double v) const { return px0 + (v - lo) / (hi - lo) * (px1 - px0); }
};

void expand(double& lo, double& hi) {
  if (hi <= lo) {
    hi = lo + 1.0;
    lo -= 1.0;
  }
  const double pad = 0.06 * (hi - lo);
  lo -= pad;
  hi += pad;
}

void chart_frame(std::ostringstream& svg, const std::string& title, const std::string& x_label,
                 const std::string& y_label) {
  svg << "<rect width='" << kW << "' height='" << kH << "' fill='white'/>\n";
  svg << "<text x='" << kW / 2 << "' y='22' text-anchor='middle' font-size='15'>" << title
      << "</text>\n";
  svg << "<text x='" << kW / 2 << "' y='" << kH - 10 << "' text-anchor='middle' font-size='12'>"
      << x_label << "</text>\n";
  svg << "<text x='16' y='" << kH / 2 << "' text-anchor='middle' font-size='12' transform='rotate(-90 16 "
      << kH / 2 << ")'>" << y_label << "</text>\n";
  svg << "<rect x='" << kMarginL << "' y='" << kMarginT << "' width='" << kW - kMarginL - kMarginR
      << "' height='" << kH - kMarginT - kMarginB << "' fill='none' stroke='#444'/>\n";
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<SvgSeries>& series,
                           bool invert_y) {
  double xlo = std::numeric_limits<double>::max(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xlo = std::min(xlo, s.x[i]);
      xhi = std::max(xhi, s.x[i]);
      ylo = std::min(ylo, s.y[i]);
      yhi = std::max(yhi, s.y[i]);
    }
  if (series.empty()) throw std::invalid_argument("svg_line_chart: no series");
  expand(xlo, xhi);
  expand(ylo, yhi);
  const Scale sx{xlo, xhi, double(kMarginL), double(kW - kMarginR)};
  const Scale sy = invert_y ? Scale{ylo, yhi, double(kMarginT), double(kH - kMarginB)}
                            : Scale{ylo, yhi, double(kH - kMarginB), double(kMarginT)};

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
  chart_frame(svg, title, x_label, y_label);
  // y ticks
  for (int i = 0; i <= 4; ++i) {
    const double v = ylo + (yhi - ylo) * i / 4.0;
    svg << "<text x='" << kMarginL - 6 << "' y='" << num(sy(v) + 4)
        << "' text-anchor='end' font-size='10'>" << num(v) << "</text>\n";
  }
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const std::string color = s.color.empty() ? kPalette[si % 6] : s.color;
    svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      svg << num(sx(s.x[i])) << "," << num(sy(s.y[i])) << " ";
    svg << "'/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      svg << "<circle cx='" << num(sx(s.x[i])) << "' cy='" << num(sy(s.y[i]))
          << "' r='3' fill='" << color << "'/>\n";
    svg << "<text x='" << kW - kMarginR - 8 << "' y='" << kMarginT + 16 + 14 * int(si)
        << "' text-anchor='end' font-size='11' fill='" << color << "'>" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string svg_bar_chart(const std::string& title, const std::string& y_label,
                          const std::vector<std::string>& series_labels,
                          const std::vector<SvgBarGroup>& groups) {
  if (groups.empty()) throw std::invalid_argument("svg_bar_chart: no groups");
  double ylo = 0.0, yhi = 0.0;
  for (const auto& g : groups)
    for (double v : g.values) {
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  expand(ylo, yhi);
  const Scale sy{ylo, yhi, double(kH - kMarginB), double(kMarginT)};
  const double plot_w = kW - kMarginL - kMarginR;
  const double group_w = plot_w / double(groups.size());
  const std::size_t nseries = series_labels.size();
  const double bar_w = group_w * 0.75 / double(std::max<std::size_t>(nseries, 1));

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
  chart_frame(svg, title, "", y_label);
  for (int i = 0; i <= 4; ++i) {
    const double v = ylo + (yhi - ylo) * i / 4.0;
    svg << "<text x='" << kMarginL - 6 << "' y='" << num(sy(v) + 4)
        << "' text-anchor='end' font-size='10'>" << num(v) << "</text>\n";
  }
  const double base_y = sy(std::clamp(0.0, ylo, yhi));
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double gx = kMarginL + group_w * (double(gi) + 0.125);
    for (std::size_t si = 0; si < groups[gi].values.size() && si < nseries; ++si) {
      const double v = groups[gi].values[si];
      const double y = sy(v);
      svg << "<rect x='" << num(gx + bar_w * double(si)) << "' y='" << num(std::min(y, base_y))
          << "' width='" << num(bar_w * 0.9) << "' height='" << num(std::abs(base_y - y))
          << "' fill='" << kPalette[si % 6] << "'/>\n";
    }
    svg << "<text x='" << num(gx + group_w * 0.375) << "' y='" << kH - kMarginB + 14
        << "' text-anchor='middle' font-size='9'>" << groups[gi].label << "</text>\n";
  }
  for (std::size_t si = 0; si < nseries; ++si)
    svg << "<text x='" << kW - kMarginR - 8 << "' y='" << kMarginT + 16 + 14 * int(si)
        << "' text-anchor='end' font-size='11' fill='" << kPalette[si % 6] << "'>"
        << series_labels[si] << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace pavek
