#include "texlab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace texlab {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5g", v);
  return buf;
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& xlabel,
                           const std::string& ylabel, const std::vector<PlotSeries>& series,
                           int width, int height) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (!(xmax > xmin)) { xmin = 0; xmax = 1; }
  if (!(ymax > ymin)) { ymin = 0; ymax = 1; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double ml = 70, mr = 20, mt = 40, mb = 55;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto Y = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
     << "' font-family='sans-serif' font-size='12'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<text x='" << width / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
     << "</text>\n";

  // axes and ticks
  os << "<rect x='" << ml << "' y='" << mt << "' width='" << pw << "' height='" << ph
     << "' fill='none' stroke='black'/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 5.0;
    const double yv = ymin + (ymax - ymin) * i / 5.0;
    os << "<line x1='" << X(xv) << "' y1='" << mt + ph << "' x2='" << X(xv) << "' y2='"
       << mt + ph + 5 << "' stroke='black'/>\n";
    os << "<text x='" << X(xv) << "' y='" << mt + ph + 18 << "' text-anchor='middle'>" << fmt(xv)
       << "</text>\n";
    os << "<line x1='" << ml - 5 << "' y1='" << Y(yv) << "' x2='" << ml << "' y2='" << Y(yv)
       << "' stroke='black'/>\n";
    os << "<text x='" << ml - 8 << "' y='" << Y(yv) + 4 << "' text-anchor='end'>" << fmt(yv)
       << "</text>\n";
  }
  os << "<text x='" << ml + pw / 2 << "' y='" << height - 12 << "' text-anchor='middle'>" << xlabel
     << "</text>\n";
  os << "<text x='18' y='" << mt + ph / 2 << "' text-anchor='middle' transform='rotate(-90 18 "
     << mt + ph / 2 << ")'>" << ylabel << "</text>\n";

  int legend_y = mt + 14;
  for (const auto& s : series) {
    if (s.x.empty()) continue;
    os << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.5'";
    if (s.dashed) os << " stroke-dasharray='6 4'";
    os << " points='";
    for (size_t i = 0; i < s.x.size(); ++i) os << X(s.x[i]) << "," << Y(s.y[i]) << " ";
    os << "'/>\n";
    if (!s.label.empty()) {
      os << "<line x1='" << ml + pw - 130 << "' y1='" << legend_y << "' x2='" << ml + pw - 105
         << "' y2='" << legend_y << "' stroke='" << s.color << "' stroke-width='1.5'";
      if (s.dashed) os << " stroke-dasharray='6 4'";
      os << "/>\n";
      os << "<text x='" << ml + pw - 100 << "' y='" << legend_y + 4 << "'>" << s.label
         << "</text>\n";
      legend_y += 16;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace texlab
