#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "curvemul/scene.hpp"

namespace curvemul::scene {

/// Two single-component curves A and B meeting at V crossings. A visits the
/// crossings in order 0..V-1, B in `b_order`; sign +1 at crossing k means B
/// crosses A from right to left (ccw: A out, B out, A in, B in).
Scene chord_scene(const std::string& name, std::int64_t genus, const std::vector<int>& b_order,
                  const std::vector<int>& signs);

/// Minimally intersecting filling pair on the closed genus-2 surface:
/// V = 4, E = 8, two octagonal faces.
Scene genus2_filling_pair();

/// Negative control: a meridian and a curve crossing it three times on the
/// torus (algebraic intersection 1), leaving two bigon faces.
Scene bigon_control_scene();

/// Positive control: a meridian-longitude pair on the torus plus a small
/// circle hanging off the meridian at a smoothed crossing; the circle bounds a disk.
Scene trivial_component_control_scene();

/// Writes the three control scenes and every torus grid with |p|,|q|,|r|,|s| <= grid_bound
/// (grids under `dir/grids`). Returns the number of files written.
std::size_t write_scene_corpus(const std::filesystem::path& dir, std::int64_t grid_bound);

}  // namespace curvemul::scene
