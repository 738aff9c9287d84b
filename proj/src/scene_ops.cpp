#include <algorithm>
#include <map>

#include "curvemul/error.hpp"
#include "curvemul/scene.hpp"
#include "topology.hpp"

namespace curvemul::scene {

using detail::Topology;

namespace {

template <typename T, typename F>
std::int64_t next_free(const std::vector<T>& items, F id_of) {
    std::int64_t m = -1;
    for (const auto& x : items) m = std::max(m, id_of(x));
    return m + 1;
}

std::int64_t next_free_halfedge(const Scene& s) {
    std::int64_t m = -1;
    for (const auto& v : s.vertices)
        for (auto h : v.halfedges_ccw) m = std::max(m, h);
    return m + 1;
}

}  // namespace

CurveId merged_curve_id(const Scene& s, const CurveId& from, const CurveId& to) {
    CurveId id = "(" + from + "*" + to + ")";
    while (s.has_curve(id)) id += "'";
    return id;
}

Scene resolve(const Scene& s, const CurveId& from, const CurveId& to, SmoothingConvention convention) {
    validate(s);
    const int ifrom = detail::curve_index(s, from);
    const int ito = detail::curve_index(s, to);
    if (ifrom == ito) throw Error(ErrorCode::MalformedInput, "cannot resolve '" + from + "' against itself");
    if (auto bigons = find_bigons(s, from, to); !bigons.empty())
        throw Error(ErrorCode::BigonPresent, "'" + from + "' and '" + to + "' bound " +
                                                 std::to_string(bigons.size()) + " bigon(s)");

    const Topology t = detail::build_topology(s);
    const CurveId merged = merged_curve_id(s, from, to);

    Scene out;
    out.name = s.name.empty() ? std::string{} : s.name + "/" + from + "*" + to;
    out.genus = s.genus;
    out.junctions = s.junctions;
    VertexId fresh_vertex = next_free(s.vertices, [](const Vertex& v) { return v.id; });

    for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
        const Vertex& v = s.vertices[vi];
        const auto& cyc = v.halfedges_ccw;
        const bool smooth_here = cyc.size() == 4 && [&] {
            const int l0 = t.curve_of[t.index(cyc[0])];
            const int l1 = t.curve_of[t.index(cyc[1])];
            return (l0 == ifrom && l1 == ito) || (l0 == ito && l1 == ifrom);
        }();
        if (!smooth_here) {
            out.vertices.push_back(v);
            continue;
        }
        // Rotate so cyc[0] lies on `to`; the pairs are then (0,1),(2,3) for the
        // standard smoothing and (3,0),(1,2) for the flipped one.
        std::array<HalfEdgeId, 4> c{};
        const int shift = t.curve_of[t.index(cyc[0])] == ito ? 0 : 1;
        for (int k = 0; k < 4; ++k) c[k] = cyc[(k + shift) % 4];
        if (convention == SmoothingConvention::Standard) {
            out.vertices.push_back({v.id, {c[0], c[1]}});
            out.vertices.push_back({fresh_vertex++, {c[2], c[3]}});
        } else {
            out.vertices.push_back({v.id, {c[3], c[0]}});
            out.vertices.push_back({fresh_vertex++, {c[1], c[2]}});
        }
        out.junctions.push_back({{cyc[0], cyc[1], cyc[2], cyc[3]}});
    }

    out.edges = s.edges;
    for (auto& e : out.edges)
        if (e.curve == from || e.curve == to) e.curve = merged;
    for (const auto& c : s.curves) {
        if (c.id == from) out.curves.push_back({merged, std::nullopt});
        else if (c.id != to) out.curves.push_back(c);
    }

    validate(out);
    return out;
}

Scene parallel_copies(const Scene& s, const CurveId& curve, std::int64_t n, CopyLabels labels) {
    if (n <= 0) throw Error(ErrorCode::InvalidCount, "need n >= 1, got " + std::to_string(n));
    validate(s);
    const int icurve = detail::curve_index(s, curve);
    const Topology t = detail::build_topology(s);

    const auto census = components(s);
    const Component* comp = nullptr;
    for (const auto& c : census.components) {
        if (c.curve != curve) continue;
        if (comp) throw Error(ErrorCode::MultiComponentCurve, "curve '" + curve + "' has several components");
        comp = &c;
    }

    // Walk the component: steps[k] = (half-edge arriving at vertex k, half-edge leaving it).
    std::map<EdgeId, std::size_t> edge_pos;
    for (std::size_t i = 0; i < s.edges.size(); ++i) edge_pos[s.edges[i].id] = i;
    const Edge& first = s.edges[edge_pos.at(comp->edges.front())];
    struct Step {
        int in;
        int out;
    };
    std::vector<Step> steps;
    std::vector<int> leaving;  // leaving half-edge of each traversed edge
    int h = t.index(first.half[0]);
    for (std::size_t k = 0; k < comp->edges.size(); ++k) {
        leaving.push_back(h);
        const int arrive = t.alpha[h];
        const int v = t.vertex_of[arrive];
        if (t.junction_of[arrive] >= 0)
            throw Error(ErrorCode::MalformedInput, "curve '" + curve + "' passes through a smoothed crossing");
        int next;
        if (t.is_crossing(v)) {
            next = t.sigma[t.sigma[arrive]];
            if (t.curve_of[t.sigma[arrive]] == icurve)
                throw Error(ErrorCode::SelfCrossingCurve, "curve '" + curve + "' crosses itself");
        } else {
            next = t.sigma[arrive];
        }
        steps.push_back({arrive, next});
        h = next;
    }
    // steps[k] is the vertex at the end of edge k; edge k+1 leaves from it.

    Scene out;
    out.name = s.name.empty() ? std::string{} : s.name + "/" + curve + "^" + std::to_string(n);
    out.genus = s.genus;
    out.junctions = s.junctions;
    out.curves = s.curves;
    for (auto& c : out.curves)
        if (c.id == curve && c.expected_components && labels == CopyLabels::Shared) *c.expected_components *= n;
    std::vector<CurveId> strand_curve(static_cast<std::size_t>(n), curve);
    if (labels == CopyLabels::Distinct) {
        for (std::int64_t j = 1; j < n; ++j) {
            CurveId id = curve + "#" + std::to_string(j);
            while (s.has_curve(id)) id += "'";
            strand_curve[j] = id;
            out.curves.push_back({id, 1});
        }
    }

    HalfEdgeId fresh_he = next_free_halfedge(s);
    EdgeId fresh_edge = next_free(s.edges, [](const Edge& e) { return e.id; });
    VertexId fresh_vertex = next_free(s.vertices, [](const Vertex& v) { return v.id; });

    const auto L = steps.size();
    // in_he[j][k], out_he[j][k]: strand j's half-edges at vertex k. Strand 0 keeps the originals.
    std::vector<std::vector<HalfEdgeId>> in_he(n, std::vector<HalfEdgeId>(L));
    std::vector<std::vector<HalfEdgeId>> out_he(n, std::vector<HalfEdgeId>(L));
    for (std::size_t k = 0; k < L; ++k) {
        in_he[0][k] = t.he_id[steps[k].in];
        out_he[0][k] = t.he_id[steps[k].out];
        for (std::int64_t j = 1; j < n; ++j) {
            in_he[j][k] = fresh_he++;
            out_he[j][k] = fresh_he++;
        }
    }

    std::map<int, std::size_t> step_at_vertex;
    for (std::size_t k = 0; k < L; ++k) step_at_vertex[t.vertex_of[steps[k].in]] = k;

    std::vector<Edge> extra_edges;
    for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
        auto it = step_at_vertex.find(static_cast<int>(vi));
        if (it == step_at_vertex.end()) {
            out.vertices.push_back(s.vertices[vi]);
            continue;
        }
        const std::size_t k = it->second;
        const VertexId vid = s.vertices[vi].id;
        if (!t.is_crossing(static_cast<int>(vi))) {
            for (std::int64_t j = 0; j < n; ++j)
                out.vertices.push_back({j == 0 ? vid : fresh_vertex++, {out_he[j][k], in_he[j][k]}});
            continue;
        }
        // ccw: out, left, in, right. The crossing curve runs right -> left through strands 0..n-1.
        const int outgoing = steps[k].out;
        const HalfEdgeId left = t.he_id[t.sigma[outgoing]];
        const HalfEdgeId right = t.he_id[t.sigma[t.sigma[t.sigma[outgoing]]]];
        const int crossing_curve = t.curve_of[t.sigma[outgoing]];
        const bool markers = s.edges[t.edge_of[t.sigma[outgoing]]].marker.has_value();
        HalfEdgeId right_j = right;
        for (std::int64_t j = 0; j < n; ++j) {
            HalfEdgeId left_j = left;
            if (j + 1 < n) {
                left_j = fresh_he++;
                const HalfEdgeId next_right = fresh_he++;
                Edge e{fresh_edge++, {left_j, next_right}, s.curves[crossing_curve].id, std::nullopt};
                if (markers) e.marker = Marker{0, 0};
                extra_edges.push_back(std::move(e));
                out.vertices.push_back({j == 0 ? vid : fresh_vertex++, {out_he[j][k], left_j, in_he[j][k], right_j}});
                right_j = next_right;
            } else {
                out.vertices.push_back({j == 0 ? vid : fresh_vertex++, {out_he[j][k], left_j, in_he[j][k], right_j}});
            }
        }
    }

    std::map<EdgeId, std::size_t> comp_edge_index;
    for (std::size_t k = 0; k < comp->edges.size(); ++k) comp_edge_index[comp->edges[k]] = k;
    for (const auto& e : s.edges) {
        out.edges.push_back(e);
        auto it = comp_edge_index.find(e.id);
        if (it == comp_edge_index.end()) continue;
        // Edge k leaves vertex k-1 (cyclically) and arrives at vertex k.
        const std::size_t k = it->second;
        const std::size_t prev = (k + L - 1) % L;
        const bool forward = t.he_id[leaving[k]] == e.half[0];
        std::optional<Marker> marker = e.marker;
        if (marker && !forward) marker = Marker{-marker->p, -marker->q};
        for (std::int64_t j = 1; j < n; ++j)
            out.edges.push_back({fresh_edge++, {out_he[j][prev], in_he[j][k]}, strand_curve[j], marker});
    }
    out.edges.insert(out.edges.end(), extra_edges.begin(), extra_edges.end());

    validate(out);
    return out;
}

}  // namespace curvemul::scene
