#include "curvemul/scene.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "curvemul/checked.hpp"
#include "curvemul/error.hpp"
#include "topology.hpp"

namespace curvemul::scene {

using detail::Topology;

bool Scene::has_curve(const CurveId& id) const {
    return std::any_of(curves.begin(), curves.end(), [&](const Curve& c) { return c.id == id; });
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Half-edge continuing the same strand through the vertex of h.
int strand_next(const Topology& t, int h) {
    return t.is_crossing(t.vertex_of[h]) ? t.sigma[t.sigma[h]] : t.sigma[h];
}

bool ambient_connected(const Topology& t) {
    if (t.size() == 0) return false;
    UnionFind uf(t.size());
    for (std::size_t h = 0; h < t.size(); ++h) {
        uf.unite(static_cast<int>(h), t.sigma_ambient[h]);
        uf.unite(static_cast<int>(h), t.alpha[h]);
    }
    for (std::size_t h = 0; h < t.size(); ++h)
        if (uf.find(static_cast<int>(h)) != 0) return false;
    return true;
}

EulerGenus euler_of(const Scene& s, const Topology& t) {
    const auto faces = detail::trace_orbits(t, t.sigma_ambient);
    const auto v = static_cast<std::int64_t>(s.vertices.size() - s.junctions.size());
    const auto e = static_cast<std::int64_t>(s.edges.size());
    const auto f = static_cast<std::int64_t>(faces.size());
    EulerGenus out;
    out.euler_characteristic = v - e + f;
    const std::int64_t twice_genus = 2 - out.euler_characteristic;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error(ErrorCode::NonOrientableOrCorrupt,
                    "chi = " + std::to_string(out.euler_characteristic) + " gives no integer genus");
    out.genus = twice_genus / 2;
    return out;
}

std::vector<Region> regions_of(const Scene& s, const Topology& t) {
    const auto faces = detail::trace_orbits(t, t.sigma_ambient);
    std::vector<int> face_of(t.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int h : faces[f]) face_of[h] = static_cast<int>(f);

    UnionFind uf(faces.size());
    std::vector<int> band_face;  // one band per junction, attached at its opened corners
    for (const auto& j : s.junctions) {
        std::array<int, 4> hs{};
        for (int k = 0; k < 4; ++k) hs[k] = t.index(j.halfedges_ccw[k]);
        int first = -1;
        for (int k = 0; k < 4; ++k) {
            const bool closed = t.sigma[hs[k]] == hs[(k + 1) % 4];
            if (closed) continue;
            const int f = face_of[t.alpha[hs[k]]];
            if (first < 0) first = f;
            else uf.unite(first, f);
        }
        band_face.push_back(first);
    }

    std::map<int, std::size_t> slot;
    std::vector<Region> out;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const int root = uf.find(static_cast<int>(f));
        auto [it, inserted] = slot.emplace(root, out.size());
        if (inserted) out.emplace_back();
        out[it->second].faces.push_back(f);
        ++out[it->second].euler_characteristic;
    }
    for (int f : band_face) --out[slot.at(uf.find(f))].euler_characteristic;

    for (const auto& circuit : detail::trace_orbits(t, t.sigma)) {
        const int root = uf.find(face_of[circuit.front()]);
        out[slot.at(root)].boundary.push_back(detail::make_face(s, t, circuit, false));
    }
    return out;
}

bool sides_are(const Face& f, std::vector<CurveId> want) {
    auto have = f.polygon_sides;
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    return have == want;
}

}  // namespace

SceneDiagnostics validate(const Scene& s) {
    const Topology t = detail::build_topology(s);

    std::vector<std::int64_t> edges_per_curve(s.curves.size(), 0);
    for (std::size_t h = 0; h < t.size(); ++h) ++edges_per_curve[t.curve_of[h]];
    for (std::size_t c = 0; c < s.curves.size(); ++c)
        if (edges_per_curve[c] == 0)
            throw Error(ErrorCode::MalformedInput, "curve '" + s.curves[c].id + "' has no edges");

    SceneDiagnostics d;
    for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
        const auto& cyc = s.vertices[vi].halfedges_ccw;
        std::vector<int> label;
        for (auto h : cyc) label.push_back(t.curve_of[t.index(h)]);
        if (cyc.size() == 4) {
            ++d.crossings;
            if (label[0] != label[2] || label[1] != label[3] || label[0] == label[1])
                throw Error(ErrorCode::NonAlternatingCrossing,
                            "vertex " + std::to_string(s.vertices[vi].id) + " reads (" +
                                s.curves[label[0]].id + "," + s.curves[label[1]].id + "," +
                                s.curves[label[2]].id + "," + s.curves[label[3]].id + ")");
        } else if (label[0] != label[1]) {
            throw Error(ErrorCode::MalformedInput,
                        "curve label changes at plain vertex " + std::to_string(s.vertices[vi].id));
        }
    }

    if (!ambient_connected(t))
        throw Error(ErrorCode::NonCellular, "scene '" + s.name + "' is disconnected");

    const auto faces = detail::trace_orbits(t, t.sigma_ambient);
    d.vertices = static_cast<std::int64_t>(s.vertices.size() - s.junctions.size());
    d.edges = static_cast<std::int64_t>(s.edges.size());
    d.faces = static_cast<std::int64_t>(faces.size());
    d.junctions = static_cast<std::int64_t>(s.junctions.size());
    d.euler_characteristic = d.vertices - d.edges + d.faces;
    const std::int64_t twice_genus = 2 - d.euler_characteristic;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error(ErrorCode::NonCellular, "chi = " + std::to_string(d.euler_characteristic));
    d.genus = twice_genus / 2;
    if (s.genus && *s.genus != d.genus)
        throw Error(ErrorCode::NonCellular, "scene '" + s.name + "' declares genus " +
                                                std::to_string(*s.genus) + " but its faces give genus " +
                                                std::to_string(d.genus));

    if (std::any_of(s.curves.begin(), s.curves.end(), [](const Curve& c) { return c.expected_components; })) {
        std::map<CurveId, std::int64_t> count;
        for (const auto& comp : components(s).components) ++count[comp.curve];
        for (const auto& c : s.curves)
            if (c.expected_components && count[c.id] != *c.expected_components)
                throw Error(ErrorCode::MalformedInput, "curve '" + c.id + "' has " +
                                                           std::to_string(count[c.id]) + " components, expected " +
                                                           std::to_string(*c.expected_components));
    }
    return d;
}

std::vector<Face> trace_faces(const Scene& s) {
    const Topology t = detail::build_topology(s);
    std::vector<Face> out;
    for (const auto& orbit : detail::trace_orbits(t, t.sigma_ambient))
        out.push_back(detail::make_face(s, t, orbit, true));
    return out;
}

EulerGenus euler_genus(const Scene& s) {
    return euler_of(s, detail::build_topology(s));
}

std::vector<Region> regions(const Scene& s) {
    const Topology t = detail::build_topology(s);
    return regions_of(s, t);
}

std::vector<Face> find_bigons(const Scene& s, const CurveId& a, const CurveId& b) {
    detail::curve_index(s, a);
    detail::curve_index(s, b);
    std::vector<Face> out;
    for (auto& r : regions(s)) {
        if (r.is_disk() && r.boundary.front().degree == 2 && sides_are(r.boundary.front(), {a, b}))
            out.push_back(std::move(r.boundary.front()));
    }
    return out;
}

bool check_region_condition(const Scene& s, const CurveId& c1, const CurveId& c2, const CurveId& c3) {
    for (const auto* c : {&c1, &c2, &c3}) detail::curve_index(s, *c);
    const std::array<std::array<const CurveId*, 2>, 3> pairs{{{&c1, &c2}, {&c2, &c3}, {&c1, &c3}}};
    for (const auto& [x, y] : pairs)
        if (!find_bigons(s, *x, *y).empty())
            throw Error(ErrorCode::BigonPresent, "'" + *x + "' and '" + *y + "' are not in minimal position");
    for (const auto& r : regions(s)) {
        if (r.is_disk() && r.boundary.front().degree == 3 && sides_are(r.boundary.front(), {c1, c2, c3}))
            return false;
    }
    return true;
}

std::int64_t crossing_count(const Scene& s, const CurveId& a, const CurveId& b) {
    const int ia = detail::curve_index(s, a);
    const int ib = detail::curve_index(s, b);
    const Topology t = detail::build_topology(s);
    std::int64_t n = 0;
    for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
        if (!t.is_crossing(static_cast<int>(vi))) continue;
        const auto& cyc = s.vertices[vi].halfedges_ccw;
        const int l0 = t.curve_of[t.index(cyc[0])];
        const int l1 = t.curve_of[t.index(cyc[1])];
        if ((l0 == ia && l1 == ib) || (l0 == ib && l1 == ia)) ++n;
    }
    return n;
}

ComponentCensus components(const Scene& s) {
    const Topology t = detail::build_topology(s);
    std::vector<std::size_t> order(s.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return s.edges[x].id < s.edges[y].id; });

    ComponentCensus census;
    std::vector<char> used(s.edges.size(), 0);
    for (std::size_t first : order) {
        if (used[first]) continue;
        Component comp;
        comp.curve = s.edges[first].curve;
        bool have_markers = true;
        Marker sum;
        int h = t.index(s.edges[first].half[0]);  // leaving half-edge of the current edge
        while (true) {
            const int ei = t.edge_of[h];
            if (used[ei]) break;
            used[ei] = 1;
            const Edge& e = s.edges[ei];
            comp.edges.push_back(e.id);
            if (e.marker) {
                const bool forward = t.he_id[h] == e.half[0];
                sum.p = checked::add(sum.p, forward ? e.marker->p : checked::neg(e.marker->p));
                sum.q = checked::add(sum.q, forward ? e.marker->q : checked::neg(e.marker->q));
            } else {
                have_markers = false;
            }
            const int arrive = t.alpha[h];
            if (t.is_crossing(t.vertex_of[arrive])) ++comp.crossings;
            h = strand_next(t, arrive);
        }
        if (have_markers) comp.homology = sum;
        census.components.push_back(std::move(comp));
    }
    return census;
}

std::vector<std::size_t> trivial_components(const Scene& s) {
    const auto census = components(s);
    std::vector<std::size_t> queried;
    for (std::size_t i = 0; i < census.components.size(); ++i)
        if (census.components[i].crossings == 0) queried.push_back(i);
    return trivial_components(s, queried);
}

std::vector<std::size_t> trivial_components(const Scene& s, std::span<const std::size_t> queried) {
    const auto census = components(s);
    for (auto i : queried) {
        if (i >= census.components.size())
            throw Error(ErrorCode::MalformedInput, "no component " + std::to_string(i));
        if (census.components[i].crossings > 0)
            throw Error(ErrorCode::ComponentHasCrossings,
                        "component " + std::to_string(i) + " of curve '" + census.components[i].curve +
                            "' has " + std::to_string(census.components[i].crossings) + " crossings");
    }

    // Edge sets of smooth disk boundaries; an innermost null-homotopic
    // component bounds exactly such a region.
    const Topology t = detail::build_topology(s);
    std::set<std::vector<EdgeId>> disk_boundaries;
    for (const auto& r : regions_of(s, t)) {
        if (!r.is_disk() || r.boundary.front().degree != 0) continue;
        std::vector<EdgeId> edges;
        for (const auto& side : r.boundary.front().sides)
            edges.push_back(s.edges[t.edge_of[t.index(side.halfedge)]].id);
        std::sort(edges.begin(), edges.end());
        disk_boundaries.insert(std::move(edges));
    }

    std::vector<std::size_t> out;
    for (auto i : queried) {
        auto edges = census.components[i].edges;
        std::sort(edges.begin(), edges.end());
        if (disk_boundaries.count(edges)) out.push_back(i);
    }
    return out;
}

torus::TorusClass torus_class_of_component(const Component& c) {
    if (!c.homology)
        throw Error(ErrorCode::MissingMarkers, "component of curve '" + c.curve + "' lacks homology markers");
    return torus::TorusClass(c.homology->p, c.homology->q);
}

torus::TorusClass torus_class_of_component(const Scene& s, std::size_t component_index) {
    const auto census = components(s);
    if (component_index >= census.components.size())
        throw Error(ErrorCode::MalformedInput, "no component " + std::to_string(component_index));
    return torus_class_of_component(census.components[component_index]);
}

std::vector<std::size_t> corner_alternation_violations(const Scene& s, const CurveId& from, const CurveId& to,
                                                       SmoothingConvention convention) {
    const int ifrom = detail::curve_index(s, from);
    const int ito = detail::curve_index(s, to);
    const Topology t = detail::build_topology(s);
    const auto faces = detail::trace_orbits(t, t.sigma_ambient);

    std::vector<std::size_t> bad;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        // Status of each (from, to) corner in walk order: true = opened.
        std::vector<bool> status;
        for (int h : faces[f]) {
            const int x = t.alpha[h];
            if (!t.is_crossing(t.vertex_of[x])) continue;
            const int y = t.sigma[x];
            const int cx = t.curve_of[x];
            const int cy = t.curve_of[y];
            if (!((cx == ifrom && cy == ito) || (cx == ito && cy == ifrom))) continue;
            // Standard joins a `to` half-edge with its ccw successor, closing corners
            // that start on `to`; Flipped closes the ones that start on `from`.
            const bool closed = convention == SmoothingConvention::Standard ? cx == ito : cx == ifrom;
            status.push_back(!closed);
        }
        if (status.size() % 2 != 0) {
            bad.push_back(f);
            continue;
        }
        for (std::size_t k = 0; k < status.size(); ++k) {
            if (status[k] == status[(k + 1) % status.size()]) {
                bad.push_back(f);
                break;
            }
        }
    }
    return bad;
}

namespace {

std::vector<std::string> sorted_curve_keys(const Scene& s) {
    std::vector<std::string> keys;
    for (const auto& c : s.curves)
        keys.push_back(c.id + "\x1f" + (c.expected_components ? std::to_string(*c.expected_components) : "-"));
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<int> curve_ranks(const Scene& s) {
    std::vector<int> rank(s.curves.size());
    std::vector<CurveId> ids;
    for (const auto& c : s.curves) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < s.curves.size(); ++i)
        rank[i] = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), s.curves[i].id) - ids.begin());
    return rank;
}

std::vector<std::int64_t> encode_from(const Scene& s, const Topology& t, const std::vector<int>& rank, int start) {
    const auto n = t.size();
    std::vector<int> label(n, -1);
    std::vector<int> order;
    order.reserve(n);
    auto visit = [&](int h) {
        if (label[h] < 0) {
            label[h] = static_cast<int>(order.size());
            order.push_back(h);
        }
    };
    visit(start);
    for (std::size_t i = 0; i < order.size() || order.size() < n; ++i) {
        if (i == order.size()) {  // disconnected: continue from the smallest unlabeled
            for (std::size_t h = 0; h < n; ++h)
                if (label[h] < 0) {
                    visit(static_cast<int>(h));
                    break;
                }
        }
        const int h = order[i];
        visit(t.sigma[h]);
        visit(t.alpha[h]);
        visit(t.sigma_ambient[h]);
    }

    std::vector<std::int64_t> enc{s.genus.value_or(-1), static_cast<std::int64_t>(n)};
    enc.reserve(2 + n * 8);
    for (int h : order) {
        const Edge& e = s.edges[t.edge_of[h]];
        enc.push_back(label[t.sigma[h]]);
        enc.push_back(label[t.alpha[h]]);
        enc.push_back(label[t.sigma_ambient[h]]);
        enc.push_back(rank[t.curve_of[h]]);
        enc.push_back(t.junction_of[h] >= 0);
        if (e.marker) {
            const bool forward = t.he_id[h] == e.half[0];
            enc.push_back(1);
            enc.push_back(forward ? e.marker->p : -e.marker->p);
            enc.push_back(forward ? e.marker->q : -e.marker->q);
        } else {
            enc.insert(enc.end(), {0, 0, 0});
        }
    }
    return enc;
}

}  // namespace

bool isomorphic(const Scene& a, const Scene& b) {
    if (sorted_curve_keys(a) != sorted_curve_keys(b) || a.genus != b.genus) return false;
    const Topology ta = detail::build_topology(a);
    const Topology tb = detail::build_topology(b);
    if (ta.size() != tb.size() || a.edges.size() != b.edges.size() || a.vertices.size() != b.vertices.size() ||
        a.junctions.size() != b.junctions.size())
        return false;
    if (ta.size() == 0) return true;
    const auto ra = curve_ranks(a);
    const auto rb = curve_ranks(b);
    const auto target = encode_from(a, ta, ra, 0);
    for (std::size_t h = 0; h < tb.size(); ++h) {
        if (rb[tb.curve_of[h]] != ra[ta.curve_of[0]]) continue;
        if (encode_from(b, tb, rb, static_cast<int>(h)) == target) return true;
    }
    return false;
}

std::vector<std::int64_t> canonical_form(const Scene& s) {
    const Topology t = detail::build_topology(s);
    const auto rank = curve_ranks(s);
    std::vector<std::int64_t> best;
    for (std::size_t h = 0; h < t.size(); ++h) {
        auto enc = encode_from(s, t, rank, static_cast<int>(h));
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

}  // namespace curvemul::scene
