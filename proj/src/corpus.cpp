#include "curvemul/corpus.hpp"

#include "curvemul/error.hpp"
#include "curvemul/scene_io.hpp"
#include "curvemul/torus_scenes.hpp"

namespace curvemul::scene {

Scene chord_scene(const std::string& name, std::int64_t genus, const std::vector<int>& b_order,
                  const std::vector<int>& signs) {
    const auto V = static_cast<int>(b_order.size());
    if (V == 0 || signs.size() != b_order.size())
        throw Error(ErrorCode::MalformedInput, "chord scene needs one sign per crossing");
    // Crossing k owns half-edges 4k + {0: A out, 1: A in, 2: B out, 3: B in}.
    Scene s;
    s.name = name;
    s.genus = genus;
    for (int k = 0; k < V; ++k) {
        const HalfEdgeId b = 4 * k;
        s.vertices.push_back({k, signs[k] > 0 ? std::vector<HalfEdgeId>{b, b + 2, b + 1, b + 3}
                                              : std::vector<HalfEdgeId>{b, b + 3, b + 1, b + 2}});
    }
    EdgeId e = 0;
    for (int k = 0; k < V; ++k) s.edges.push_back({e++, {4 * k, 4 * ((k + 1) % V) + 1}, "A", std::nullopt});
    for (int k = 0; k < V; ++k)
        s.edges.push_back({e++, {4 * b_order[k] + 2, 4 * b_order[(k + 1) % V] + 3}, "B", std::nullopt});
    s.curves = {{"A", 1}, {"B", 1}};
    return s;
}

Scene genus2_filling_pair() {
    return chord_scene("genus2_filling_pair", 2, {0, 1, 3, 2}, {1, 1, -1, -1});
}

Scene bigon_control_scene() {
    return chord_scene("bigon_control", 1, {0, 1, 2}, {1, 1, -1});
}

Scene trivial_component_control_scene() {
    Scene s;
    s.name = "trivial_component_control";
    s.genus = 1;
    // Crossing 0 of the meridian A and longitude B: A east (0), B north (1), A west (2), B south (3).
    s.vertices.push_back({0, {0, 1, 2, 3}});
    // The meridian's plain point touching the circle C from below: A west (4), A east (5).
    s.vertices.push_back({1, {5, 4}});
    // The circle's point on A: heading north-east (6) and north-west (7).
    s.vertices.push_back({2, {6, 7}});
    s.edges = {
        {0, {0, 4}, "A", Marker{0, 0}},
        {1, {5, 2}, "A", Marker{1, 0}},
        {2, {1, 3}, "B", Marker{0, 1}},
        {3, {6, 7}, "C", Marker{0, 0}},
    };
    s.curves = {{"A", 1}, {"B", 1}, {"C", 1}};
    // ccw around the smoothed point: east, north-east, north-west, west.
    s.junctions = {{{5, 6, 7, 4}}};
    return s;
}

std::size_t write_scene_corpus(const std::filesystem::path& dir, std::int64_t grid_bound) {
    std::error_code ec;
    std::filesystem::create_directories(dir / "grids", ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + (dir / "grids").string() + ": " + ec.message());
    std::size_t written = 0;
    for (const auto& s : {genus2_filling_pair(), bigon_control_scene(), trivial_component_control_scene()}) {
        save_scene(s, dir / (s.name + ".json"));
        ++written;
    }
    for (std::int64_t p = -grid_bound; p <= grid_bound; ++p)
        for (std::int64_t q = -grid_bound; q <= grid_bound; ++q)
            for (std::int64_t r = -grid_bound; r <= grid_bound; ++r)
                for (std::int64_t t = -grid_bound; t <= grid_bound; ++t) {
                    if ((p == 0 && q == 0) || (r == 0 && t == 0) || p * t - q * r == 0) continue;
                    const Scene s = torus_grid_scene(p, q, r, t);
                    save_scene(s, dir / "grids" / (s.name + ".json"));
                    ++written;
                }
    return written;
}

}  // namespace curvemul::scene
