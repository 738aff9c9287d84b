#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvemul/torus.hpp"

// Twist coordinates relative to a pants decomposition. Internal curves are
// the gluings in file order; the single-curve operations number them from 1.
// Boundary slots follow pants order, then slot index.
namespace curvemul::dt {

struct SlotRef {
    std::string pants;
    int slot = 0;  // 0, 1 or 2

    std::string to_string() const { return pants + "." + std::to_string(slot); }
    friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

/// Parses "pantsId.slotIndex".
SlotRef parse_slot(std::string_view text);

struct PantsDecomposition {
    std::vector<std::string> pants;
    std::vector<std::array<SlotRef, 2>> gluing;  // gluing[i] is the internal curve alpha_i
};

struct DecompositionInfo {
    std::int64_t genus = 0;
    std::int64_t boundary_count = 0;
    std::int64_t internal_curves = 0;
    std::vector<SlotRef> boundary_slots;
};

/// Throws SlotReuse, UnknownSlot or CountMismatch (negative genus or a
/// disconnected gluing).
DecompositionInfo validate_decomposition(const PantsDecomposition& d);

struct DTCoords {
    std::vector<std::int64_t> m;  // per internal curve: intersection number
    std::vector<std::int64_t> t;  // per internal curve: twist
    std::vector<std::int64_t> b;  // per boundary slot: intersection number

    friend bool operator==(const DTCoords&, const DTCoords&) = default;
};

/// Throws CountMismatch, NegativeIntersection, ParityViolation (naming the
/// pants) or NegativeTwistOnMissedCurve.
void validate_coords(const PantsDecomposition& d, const DTCoords& x);

/// m_i for 1 <= i <= C. Throws UnknownCurveIndex.
std::int64_t pants_curve_intersection(const DTCoords& x, std::size_t i);

/// t_i += k_i for every i; m and b untouched. Throws TwistOnMissedCurve when
/// k_i != 0 but m_i == 0.
DTCoords twist_multiply(const DTCoords& x, std::span<const std::int64_t> k);

/// t_i += m_i (positive) or t_i -= m_i (negative), 1 <= i <= C. Throws UnknownCurveIndex.
DTCoords dehn_twist(const DTCoords& x, std::size_t i, torus::TwistDirection direction);

/// k with twist_multiply(x2, k) == x1. Throws IntersectionMismatch or
/// MissedCurveTwistMismatch.
std::vector<std::int64_t> solve_twists(const DTCoords& x1, const DTCoords& x2);

/// Decomposition plus coordinates, as stored on disk:
///   {"name"?, "pants": [{"id": "P0"}], "gluing": [["P0.0", "P1.0"]], "m": [], "t": [], "b": []}
struct DTFile {
    std::string name;
    PantsDecomposition decomposition;
    DTCoords coords;
};

std::string dt_to_text(const DTFile& f);
DTFile dt_from_text(std::string_view text);
DTFile load_dt(const std::filesystem::path& path);
void save_dt(const DTFile& f, const std::filesystem::path& path);

/// The shipped decompositions: closed genus 2 (two pants glued slot to slot),
/// one-holed torus, and a single pair of pants.
PantsDecomposition genus2_decomposition();
PantsDecomposition one_holed_torus_decomposition();
PantsDecomposition pants_decomposition();

}  // namespace curvemul::dt
