#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "equitri/geometry.hpp"
#include "equitri/region_atlas.hpp"
#include "equitri/side_solver.hpp"

namespace equitri::cli {

// Triangle outline plus every computed ET placement.
void write_triangle_svg(std::ostream& out, const TriangleSpec& tri, const TriangleETReport& report);

// Region raster, boundary loci, both cubics and the Calabi point marker.
// Path coordinates are written in atlas units at full precision, so the
// curves can be read back exactly.  Byte-identical for identical atlases.
void write_atlas_svg(std::ostream& out, const Atlas& atlas);

std::string_view region_color(RegionKind kind);

// Reads the "d" attribute of the <path> with the given id back into points
// (M/L absolute commands only).  Empty when not found.
std::vector<Point> read_svg_path(std::string_view svg, std::string_view id);

}  // namespace equitri::cli
