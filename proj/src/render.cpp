#include "naples/render.hpp"

#include <sstream>

namespace naples {

namespace {

// Collapses runs of collinear vertices so the path prints like hand-drawn
// TikZ: only the corners survive.
std::vector<std::pair<int, int>> corner_vertices(const LatticePath& path) {
  const auto all = path.vertices();
  std::vector<std::pair<int, int>> corners;
  corners.push_back(all.front());
  for (size_t i = 1; i + 1 < all.size(); ++i) {
    const auto& prev = all[i - 1];
    const auto& next = all[i + 1];
    const bool collinear = (prev.first == next.first) || (prev.second == next.second);
    if (!collinear) corners.push_back(all[i]);
  }
  if (all.size() > 1) corners.push_back(all.back());
  return corners;
}

struct LabeledStep {
  int x;
  int y;  // top end of the south step
  int label;
};

std::vector<LabeledStep> labeled_south_steps(const LatticePath& path) {
  std::vector<LabeledStep> out;
  if (path.labels.empty()) return out;
  int x = 0;
  int y = path.n();
  size_t south_index = 0;
  for (Step s : path.steps) {
    if (s == Step::East) {
      ++x;
    } else {
      out.push_back({x, y, path.labels[south_index++]});
      --y;
    }
  }
  return out;
}

}  // namespace

std::string render_tikz(const LatticePath& path, int k) {
  const int n = path.n();
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.8]\n";
  os << "\\draw[help lines] (0,0) grid +(" << n << ',' << n << ");\n";
  // Boundary y = n - x + k meets the grid from (k, n) to (n, k).
  os << "\\draw[dashed] (" << std::min(k, n) << ',' << n << ") -- (" << n << ','
     << std::min(k, n) << ");\n";
  os << "\\draw [color=black, line width=2] ";
  const auto corners = corner_vertices(path);
  for (size_t i = 0; i < corners.size(); ++i) {
    if (i > 0) os << "--";
    os << '(' << corners[i].first << ',' << corners[i].second << ')';
  }
  os << ";\n";
  for (const auto& step : labeled_south_steps(path)) {
    os << "\\draw (" << step.x - 0.25 << ',' << step.y - 0.5 << ") node {" << step.label
       << "};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_svg(const LatticePath& path, int k) {
  const int n = path.n();
  const int unit = 40;
  const int margin = 20;
  const int side = n * unit + 2 * margin;
  const auto px = [&](double x) { return margin + x * unit; };
  const auto py = [&](double y) { return margin + (n - y) * unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  for (int i = 0; i <= n; ++i) {
    os << "  <line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\""
       << py(n) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(n) << "\" y2=\""
       << py(i) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  os << "  <line x1=\"" << px(std::min(k, n)) << "\" y1=\"" << py(n) << "\" x2=\"" << px(n)
     << "\" y2=\"" << py(std::min(k, n))
     << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
  const auto corners = corner_vertices(path);
  for (size_t i = 0; i < corners.size(); ++i) {
    if (i > 0) os << ' ';
    os << px(corners[i].first) << ',' << py(corners[i].second);
  }
  os << "\"/>\n";
  for (const auto& step : labeled_south_steps(path)) {
    os << "  <text x=\"" << px(step.x - 0.25) << "\" y=\"" << py(step.y - 0.5) + 5
       << "\" font-size=\"16\" text-anchor=\"middle\">" << step.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace naples
