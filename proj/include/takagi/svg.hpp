#pragma once

#include <string>

#include "takagi/level_sets.hpp"
#include "takagi/dimension.hpp"

namespace takagi {

/// Polyline graph of the function on the dyadic grid at the given depth.
std::string svg_graph(int depth);

/// The graph with the level line and the cover's surviving intervals and
/// confirmed points drawn over it.
std::string svg_cover(const LevelCover& cover, int graph_depth);

/// The singular function's staircase on removed intervals up to max_len.
std::string svg_staircase(int max_len);

/// Dimension spectrum: certified enclosures per r against the bound curve.
std::string svg_spectrum(const SpectrumTable& table);

}  // namespace takagi
