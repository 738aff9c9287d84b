#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvemul/torus.hpp"

// Transverse multicurve configurations on closed oriented surfaces, stored as
// rotation systems whose edges carry curve labels.
//
// Conventions used throughout:
//  * Each vertex lists its half-edges in counterclockwise order. Crossings are
//    4-valent with alternating labels (A, B, A, B); plain points on a curve are
//    2-valent.
//  * Faces are the orbits of h -> ccw_next(partner(h)), enumerated from the
//    smallest unused half-edge id.
//  * A smoothed crossing is kept as a Junction: its two 2-valent vertices are
//    fused back into the original 4-valent vertex to recover the cellular
//    ambient embedding, so genus and complementary regions stay computable
//    after resolution.
namespace curvemul::scene {

using HalfEdgeId = std::int64_t;
using VertexId = std::int64_t;
using EdgeId = std::int64_t;
using CurveId = std::string;

/// Integer homology displacement of an edge, oriented from half[0] to half[1].
struct Marker {
    std::int64_t p = 0;
    std::int64_t q = 0;

    friend auto operator<=>(const Marker&, const Marker&) = default;
};

struct Vertex {
    VertexId id = 0;
    std::vector<HalfEdgeId> halfedges_ccw;
};

struct Edge {
    EdgeId id = 0;
    std::array<HalfEdgeId, 2> half{};
    CurveId curve;
    std::optional<Marker> marker;
};

struct Curve {
    CurveId id;
    std::optional<std::int64_t> expected_components;
};

/// A resolved crossing. The four half-edges are in their counterclockwise order
/// around the former crossing point; in the scene they sit in two 2-valent
/// vertices, each holding a ccw-adjacent pair.
struct Junction {
    std::array<HalfEdgeId, 4> halfedges_ccw{};
};

struct Scene {
    std::string name;
    std::optional<std::int64_t> genus;  // declared genus; validate rejects a mismatch
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Curve> curves;
    std::vector<Junction> junctions;

    bool has_curve(const CurveId& id) const;
};

struct SceneDiagnostics {
    std::int64_t vertices = 0;  // ambient count: each junction counts once
    std::int64_t edges = 0;
    std::int64_t faces = 0;
    std::int64_t euler_characteristic = 0;
    std::int64_t genus = 0;
    std::int64_t crossings = 0;
    std::int64_t junctions = 0;
};

struct Side {
    HalfEdgeId halfedge = 0;
    CurveId curve;
};

/// A cyclic boundary walk. `degree` counts corners at crossings, i.e. polygon
/// sides; `polygon_sides` holds the curve of each polygon side in walk order.
/// A smooth loop with no corners has degree 0.
struct Face {
    std::vector<Side> sides;
    std::int64_t degree = 0;
    std::vector<CurveId> polygon_sides;
};

/// A connected component of the complement of the curves. For an unresolved
/// scene every region is a single face.
struct Region {
    std::vector<std::size_t> faces;  // indices into trace_faces()
    std::int64_t euler_characteristic = 0;
    std::vector<Face> boundary;

    bool is_disk() const { return euler_characteristic == 1 && boundary.size() == 1; }
};

struct Component {
    CurveId curve;
    std::vector<EdgeId> edges;  // traversal order
    std::optional<Marker> homology;
    std::int64_t crossings = 0;
};

struct ComponentCensus {
    std::vector<Component> components;
};

struct EulerGenus {
    std::int64_t euler_characteristic = 0;
    std::int64_t genus = 0;
};

enum class SmoothingConvention {
    /// Each half-edge of the target curve joins the source half-edge that
    /// follows it counterclockwise.
    Standard,
    /// Mirror image; only used to check that the oracle detects a flipped chirality.
    Flipped,
};

enum class CopyLabels { Shared, Distinct };

/// Checks every structural invariant. Throws DanglingHalfEdge,
/// NonAlternatingCrossing, NonCellular, UnknownCurve or MalformedInput.
SceneDiagnostics validate(const Scene& s);

std::vector<Face> trace_faces(const Scene& s);

/// Throws NonOrientableOrCorrupt when (2 - chi) / 2 is not a non-negative integer.
EulerGenus euler_genus(const Scene& s);

std::vector<Region> regions(const Scene& s);

/// Disk regions bounded by one arc of a and one arc of b.
std::vector<Face> find_bigons(const Scene& s, const CurveId& a, const CurveId& b);

/// True iff no disk region is a triangle with one side on each of c1, c2, c3.
/// The quadrilateral clause involves a boundary arc and is vacuous on closed
/// surfaces. Throws BigonPresent if any pair is not in minimal position.
bool check_region_condition(const Scene& s, const CurveId& c1, const CurveId& c2,
                            const CurveId& c3);

/// Smooths every crossing between `from` and `to`; the merged system gets a
/// fresh curve id "(from*to)". Throws BigonPresent for non-minimal input.
Scene resolve(const Scene& s, const CurveId& from, const CurveId& to,
              SmoothingConvention convention = SmoothingConvention::Standard);

/// Id that resolve() gives the merged curve.
CurveId merged_curve_id(const Scene& s, const CurveId& from, const CurveId& to);

ComponentCensus components(const Scene& s);

/// Crossing-free components bounding a disk region on one side. Components
/// with crossings are skipped.
std::vector<std::size_t> trivial_components(const Scene& s);

/// Same, restricted to `queried` (indices into components()); throws
/// ComponentHasCrossings if one of them has crossings.
std::vector<std::size_t> trivial_components(const Scene& s, std::span<const std::size_t> queried);

/// Replaces the single-component curve `curve` by n parallel strands pushed off
/// to its left. With CopyLabels::Distinct the extra strands become curves
/// "curve#1", "curve#2", ...
Scene parallel_copies(const Scene& s, const CurveId& curve, std::int64_t n,
                      CopyLabels labels = CopyLabels::Shared);

std::int64_t crossing_count(const Scene& s, const CurveId& a, const CurveId& b);

/// Normalized sum of edge markers along a component. Throws MissingMarkers, or
/// InvalidClass for a null-homologous component.
torus::TorusClass torus_class_of_component(const Component& c);
torus::TorusClass torus_class_of_component(const Scene& s, std::size_t component_index);

/// Debug check of the corner pattern used in the curve-system argument:
/// walking around each face of a two-curve scene, corners at (from, to)
/// crossings must alternate between opened and closed under the given
/// smoothing. Returns the indices of faces where they do not.
std::vector<std::size_t> corner_alternation_violations(
    const Scene& s, const CurveId& from, const CurveId& to,
    SmoothingConvention convention = SmoothingConvention::Standard);

/// Labeled rotation-system isomorphism (ids and name are ignored; curve labels,
/// markers, junctions and declared genus are not).
bool isomorphic(const Scene& a, const Scene& b);

/// Relabel-invariant encoding: minimum over all breadth-first relabelings.
std::vector<std::int64_t> canonical_form(const Scene& s);

}  // namespace curvemul::scene
