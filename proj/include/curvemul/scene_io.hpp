#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "curvemul/scene.hpp"

// JSON scene files:
//   { "name": ..., "genus"?: g,
//     "vertices": [{"id": v, "halfedges_ccw": [h, ...]}],
//     "edges": [{"id": e, "half": [h1, h2], "curve": "A", "marker"?: [p, q]}],
//     "curves": [{"id": "A", "components"?: n}],
//     "junctions"?: [{"halfedges_ccw": [h0, h1, h2, h3]}] }
namespace curvemul::scene {

std::string scene_to_text(const Scene& s);
Scene scene_from_text(std::string_view text);  // throws MalformedInput

Scene load_scene(const std::filesystem::path& path);  // throws Io, MalformedInput
void save_scene(const Scene& s, const std::filesystem::path& path);

}  // namespace curvemul::scene
