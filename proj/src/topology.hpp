#pragma once

#include <unordered_map>
#include <vector>

#include "curvemul/scene.hpp"

// Dense-index view of a Scene. Half-edges are numbered in increasing id order,
// so iterating 0..size() visits them smallest id first.
namespace curvemul::scene::detail {

struct Topology {
    std::vector<HalfEdgeId> he_id;
    std::unordered_map<HalfEdgeId, int> he_index;

    std::vector<int> vertex_of;      // dense vertex index (scene order)
    std::vector<int> sigma;          // ccw successor at the actual vertex
    std::vector<int> sigma_ambient;  // ccw successor with junctions fused
    std::vector<int> alpha;          // other half of the same edge
    std::vector<int> edge_of;        // index into Scene::edges
    std::vector<int> curve_of;       // index into Scene::curves
    std::vector<int> junction_of;    // index into Scene::junctions, or -1
    std::vector<int> vertex_degree;  // per vertex

    std::size_t size() const { return he_id.size(); }
    int index(HalfEdgeId id) const;
    bool is_crossing(int vertex) const { return vertex_degree[vertex] == 4; }
    /// Corner at the vertex reached from h, i.e. between alpha(h) and its successor.
    bool corner_is_crossing(int h, bool ambient) const;
};

/// Structural checks only: ids, half-edge incidence, junction shape, curve
/// references. Throws DanglingHalfEdge, UnknownCurve or MalformedInput.
Topology build_topology(const Scene& s);

/// Orbits of h -> next[alpha[h]], started from the smallest unused index.
std::vector<std::vector<int>> trace_orbits(const Topology& t, const std::vector<int>& next);

Face make_face(const Scene& s, const Topology& t, const std::vector<int>& orbit, bool ambient);

int curve_index(const Scene& s, const CurveId& id);  // throws UnknownCurve

}  // namespace curvemul::scene::detail
