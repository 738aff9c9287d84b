#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvemul/scene.hpp"

// Straight-line representatives on the flat torus R^2 / Z^2. Every edge carries
// an integer homology marker, so the class of any closed walk is the sum of the
// markers along it.
namespace curvemul::scene {

/// One curve system: gcd(p, q) parallel lines of slope (p, q) / gcd.
struct LineFamily {
    CurveId curve;
    std::int64_t p = 0;
    std::int64_t q = 0;
};

/// Builds the configuration of all families at once. Base points are shifted
/// deterministically until there are no triple points and no two parallel
/// lines coincide (TriplePoint if that search gives up). Straight lines on the
/// flat torus never bound bigons.
Scene torus_lines_scene(const std::string& name, const std::vector<LineFamily>& families);

/// Curves "A" = (p, q) and "B" = (r, s). Throws ParallelSlopes when ps - qr = 0.
Scene torus_grid_scene(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

}  // namespace curvemul::scene
