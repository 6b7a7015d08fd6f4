#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "swanson/spectral.hpp"

namespace swanson::cli {

struct PlotLayers {
  std::optional<PseudospectrumGrid> contour;  // drawn as log10(sigma_min) level sets
  std::vector<BoundaryPoint> curve;           // open polyline
  std::vector<Complex> dots;
};

// Polyline segments of {log10(sigma) = level} from marching squares.
struct ContourLevel {
  int level = 0;
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> segments;
};

std::vector<ContourLevel> contour_levels(const PseudospectrumGrid& grid);

// SVG text for the layers; throws ContractViolation when every layer is empty.
std::string render_svg(const PlotLayers& layers);

// render_svg followed by an atomic write. No file is created on error.
void emit_plot(const PlotLayers& layers, const std::filesystem::path& path);

}  // namespace swanson::cli
