#include "onestreet/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "onestreet/errors.hpp"

namespace onestreet {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 640.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 55.0;

double map_x(double v) { return kLeft + v * (kWidth - kLeft - kRight); }
double map_y(double v) { return kHeight - kBottom - v * (kHeight - kTop - kBottom); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string scatter_svg(const std::vector<DatasetRow>& rows) {
  if (rows.empty()) throw ValidationError("no rows");

  std::vector<double> bet_sizes;
  for (const DatasetRow& row : rows) bet_sizes.push_back(row.bet_size);
  std::sort(bet_sizes.begin(), bet_sizes.end());
  bet_sizes.erase(std::unique(bet_sizes.begin(), bet_sizes.end(),
                              [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                  bet_sizes.end());

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // frame and ticks
  svg << "<rect x=\"" << map_x(0) << "\" y=\"" << map_y(1) << "\" width=\""
      << map_x(1) - map_x(0) << "\" height=\"" << map_y(0) - map_y(1)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = t * 0.25;
    svg << "<line x1=\"" << map_x(v) << "\" y1=\"" << map_y(0) << "\" x2=\"" << map_x(v)
        << "\" y2=\"" << map_y(0) + 5 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << map_x(v) << "\" y=\"" << map_y(0) + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(v) << "</text>\n";
    svg << "<line x1=\"" << map_x(0) - 5 << "\" y1=\"" << map_y(v) << "\" x2=\"" << map_x(0)
        << "\" y2=\"" << map_y(v) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << map_x(0) - 9 << "\" y=\"" << map_y(v) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
  }
  svg << "<text x=\"" << (map_x(0) + map_x(1)) / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"14\" text-anchor=\"middle\">Range advantage</text>\n";
  svg << "<text x=\"18\" y=\"" << (map_y(0) + map_y(1)) / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << (map_y(0) + map_y(1)) / 2 << ")\">Optimal defense frequency</text>\n";

  // one dashed MDF reference line per bet size
  for (double bet : bet_sizes) {
    const double level = 1.0 / (1.0 + bet);
    svg << "<line x1=\"" << map_x(0) << "\" y1=\"" << map_y(level) << "\" x2=\"" << map_x(1)
        << "\" y2=\"" << map_y(level)
        << "\" stroke=\"#b33\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << map_x(1) - 6 << "\" y=\"" << map_y(level) - 5
        << "\" font-size=\"12\" fill=\"#b33\" text-anchor=\"end\">MDF=" << fmt(level)
        << " (bet " << fmt(bet) << "P)</text>\n";
  }

  for (const DatasetRow& row : rows) {
    svg << "<circle cx=\"" << map_x(row.ra) << "\" cy=\"" << map_y(row.odf)
        << "\" r=\"2\" fill=\"#369\" fill-opacity=\"0.45\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

std::string scatter_csv(const std::vector<DatasetRow>& rows) {
  if (rows.empty()) throw ValidationError("no rows");
  std::ostringstream out;
  out << "ra,odf\n";
  char buf[64];
  for (const DatasetRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", row.ra, row.odf);
    out << buf;
  }
  return out.str();
}

}  // namespace onestreet
