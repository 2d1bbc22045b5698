#pragma once

#include <string>

#include "naples/paths.hpp"

namespace naples {

/// TikZ picture of a lattice path: unit grid, dashed boundary y = n - x + k
/// clipped to the grid, the path in bold, and one node per south-step label.
std::string render_tikz(const LatticePath& path, int k = 0);

/// Standalone SVG of the same picture, 40 px per unit cell.
std::string render_svg(const LatticePath& path, int k = 0);

}  // namespace naples
