#include "topology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "curvemul/error.hpp"

namespace curvemul::scene::detail {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::string he_name(HalfEdgeId h) { return "half-edge " + std::to_string(h); }

}  // namespace

int Topology::index(HalfEdgeId id) const {
    auto it = he_index.find(id);
    if (it == he_index.end()) throw Error(ErrorCode::DanglingHalfEdge, he_name(id) + " is unknown");
    return it->second;
}

bool Topology::corner_is_crossing(int h, bool ambient) const {
    const int x = alpha[h];
    if (is_crossing(vertex_of[x])) return true;
    return ambient && junction_of[x] >= 0;
}

int curve_index(const Scene& s, const CurveId& id) {
    for (std::size_t i = 0; i < s.curves.size(); ++i)
        if (s.curves[i].id == id) return static_cast<int>(i);
    throw Error(ErrorCode::UnknownCurve, "no curve '" + id + "' in scene '" + s.name + "'");
}

Topology build_topology(const Scene& s) {
    Topology t;

    std::set<CurveId> curve_ids;
    for (const auto& c : s.curves)
        if (!curve_ids.insert(c.id).second) malformed("duplicate curve id '" + c.id + "'");

    // Collect half-edges from vertex cycles; each must occur exactly once.
    std::set<VertexId> vertex_ids;
    std::vector<HalfEdgeId> all;
    for (const auto& v : s.vertices) {
        if (!vertex_ids.insert(v.id).second) malformed("duplicate vertex id " + std::to_string(v.id));
        if (v.halfedges_ccw.size() != 2 && v.halfedges_ccw.size() != 4)
            malformed("vertex " + std::to_string(v.id) + " has degree " +
                      std::to_string(v.halfedges_ccw.size()) + " (expected 2 or 4)");
        all.insert(all.end(), v.halfedges_ccw.begin(), v.halfedges_ccw.end());
    }
    std::sort(all.begin(), all.end());
    if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end())
        throw Error(ErrorCode::DanglingHalfEdge, he_name(*dup) + " occurs in two vertex cycles");

    t.he_id = all;
    const auto n = all.size();
    for (std::size_t i = 0; i < n; ++i) t.he_index.emplace(all[i], static_cast<int>(i));
    t.vertex_of.assign(n, -1);
    t.sigma.assign(n, -1);
    t.alpha.assign(n, -1);
    t.edge_of.assign(n, -1);
    t.curve_of.assign(n, -1);
    t.junction_of.assign(n, -1);

    for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
        const auto& cyc = s.vertices[vi].halfedges_ccw;
        t.vertex_degree.push_back(static_cast<int>(cyc.size()));
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int h = t.he_index.at(cyc[k]);
            t.vertex_of[h] = static_cast<int>(vi);
            t.sigma[h] = t.he_index.at(cyc[(k + 1) % cyc.size()]);
        }
    }

    std::set<EdgeId> edge_ids;
    for (std::size_t ei = 0; ei < s.edges.size(); ++ei) {
        const auto& e = s.edges[ei];
        if (!edge_ids.insert(e.id).second) malformed("duplicate edge id " + std::to_string(e.id));
        if (e.half[0] == e.half[1]) malformed("edge " + std::to_string(e.id) + " uses one half-edge twice");
        const int c = curve_index(s, e.curve);
        std::array<int, 2> hs{};
        for (int k = 0; k < 2; ++k) {
            auto it = t.he_index.find(e.half[k]);
            if (it == t.he_index.end())
                throw Error(ErrorCode::DanglingHalfEdge,
                            he_name(e.half[k]) + " of edge " + std::to_string(e.id) + " is in no vertex");
            hs[k] = it->second;
            if (t.edge_of[hs[k]] >= 0)
                throw Error(ErrorCode::DanglingHalfEdge, he_name(e.half[k]) + " belongs to two edges");
            t.edge_of[hs[k]] = static_cast<int>(ei);
            t.curve_of[hs[k]] = c;
        }
        t.alpha[hs[0]] = hs[1];
        t.alpha[hs[1]] = hs[0];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (t.edge_of[i] < 0) throw Error(ErrorCode::DanglingHalfEdge, he_name(all[i]) + " belongs to no edge");

    t.sigma_ambient = t.sigma;
    for (std::size_t ji = 0; ji < s.junctions.size(); ++ji) {
        const auto& j = s.junctions[ji];
        std::array<int, 4> hs{};
        for (int k = 0; k < 4; ++k) {
            hs[k] = t.index(j.halfedges_ccw[k]);
            if (t.junction_of[hs[k]] >= 0) malformed(he_name(j.halfedges_ccw[k]) + " is in two junctions");
            if (t.vertex_degree[t.vertex_of[hs[k]]] != 2)
                malformed("junction " + he_name(j.halfedges_ccw[k]) + " is not on a 2-valent vertex");
            t.junction_of[hs[k]] = static_cast<int>(ji);
        }
        // The two 2-valent vertices must hold ccw-adjacent pairs.
        const bool pairs_01 = t.sigma[hs[0]] == hs[1] && t.sigma[hs[2]] == hs[3];
        const bool pairs_12 = t.sigma[hs[1]] == hs[2] && t.sigma[hs[3]] == hs[0];
        if (!pairs_01 && !pairs_12)
            malformed("junction " + std::to_string(ji) + " does not describe a smoothing");
        for (int k = 0; k < 4; ++k) t.sigma_ambient[hs[k]] = hs[(k + 1) % 4];
    }
    return t;
}

std::vector<std::vector<int>> trace_orbits(const Topology& t, const std::vector<int>& next) {
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(t.size(), 0);
    for (std::size_t start = 0; start < t.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit;
        for (int h = static_cast<int>(start); !seen[h]; h = next[t.alpha[h]]) {
            seen[h] = 1;
            orbit.push_back(h);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

Face make_face(const Scene& s, const Topology& t, const std::vector<int>& orbit, bool ambient) {
    Face f;
    f.sides.reserve(orbit.size());
    for (int h : orbit) {
        const auto& curve = s.curves[t.curve_of[h]].id;
        f.sides.push_back({t.he_id[h], curve});
        if (t.corner_is_crossing(h, ambient)) {
            ++f.degree;
            f.polygon_sides.push_back(curve);
        }
    }
    return f;
}

}  // namespace curvemul::scene::detail
