#pragma once

#include <string>
#include <vector>

namespace texlab {

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

// Minimal static SVG line chart.
std::string svg_line_chart(const std::string& title, const std::string& xlabel,
                           const std::string& ylabel, const std::vector<PlotSeries>& series,
                           int width = 720, int height = 480);

}  // namespace texlab
