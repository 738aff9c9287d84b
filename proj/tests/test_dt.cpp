#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvemul/dt.hpp"
#include "curvemul/error.hpp"

using namespace curvemul;
using namespace curvemul::dt;
using V = std::vector<std::int64_t>;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

const auto pos = torus::TwistDirection::Positive;
const auto neg = torus::TwistDirection::Negative;

}  // namespace

TEST_CASE("validate decomposition") {
    auto g2 = validate_decomposition(genus2_decomposition());
    CHECK(g2.genus == 2);
    CHECK(g2.boundary_count == 0);
    CHECK(g2.internal_curves == 3);
    auto p = validate_decomposition(pants_decomposition());
    CHECK(p.genus == 0);
    CHECK(p.boundary_count == 3);
    CHECK(p.internal_curves == 0);
    auto t = validate_decomposition(one_holed_torus_decomposition());
    CHECK(t.genus == 1);
    CHECK(t.boundary_count == 1);
    CHECK(t.internal_curves == 1);
    REQUIRE(t.boundary_slots.size() == 1);
    CHECK(t.boundary_slots[0] == SlotRef{"P0", 0});
}

TEST_CASE("invalid decompositions") {
    PantsDecomposition reuse{{"P0", "P1"}, {{SlotRef{"P0", 0}, SlotRef{"P1", 0}}, {SlotRef{"P0", 0}, SlotRef{"P1", 1}}}};
    CHECK(code_of([&] { validate_decomposition(reuse); }) == ErrorCode::SlotReuse);
    PantsDecomposition unknown{{"P0"}, {{SlotRef{"P0", 0}, SlotRef{"P9", 1}}}};
    CHECK(code_of([&] { validate_decomposition(unknown); }) == ErrorCode::UnknownSlot);
    PantsDecomposition split{{"P0", "P1"}, {}};
    CHECK(code_of([&] { validate_decomposition(split); }) == ErrorCode::CountMismatch);
    CHECK(code_of([] { parse_slot("P0.3"); }) == ErrorCode::UnknownSlot);
    CHECK(code_of([] { parse_slot("P0"); }) == ErrorCode::UnknownSlot);
    CHECK(parse_slot("left.2") == SlotRef{"left", 2});
}

TEST_CASE("validate coords") {
    const auto d = genus2_decomposition();
    CHECK_NOTHROW(validate_coords(d, {{2, 0, 0}, {3, 0, 1}, {}}));
    CHECK(code_of([&] { validate_coords(d, {{1, 1, 1}, {0, 0, 0}, {}}); }) == ErrorCode::ParityViolation);
    CHECK(code_of([&] { validate_coords(d, {{2, 0, 0}, {0, -1, 0}, {}}); }) == ErrorCode::NegativeTwistOnMissedCurve);
    CHECK(code_of([&] { validate_coords(d, {{2, 0}, {0, 0}, {}}); }) == ErrorCode::CountMismatch);
    CHECK(code_of([&] { validate_coords(d, {{-2, 0, 0}, {0, 0, 0}, {}}); }) == ErrorCode::NegativeIntersection);
    try {
        validate_coords(d, {{1, 1, 1}, {0, 0, 0}, {}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("P0") != std::string::npos);
    }
}

TEST_CASE("pants curve intersection") {
    const DTCoords x{{2, 0, 0}, {3, 0, 1}, {}};
    CHECK(pants_curve_intersection(x, 1) == 2);
    CHECK(pants_curve_intersection(x, 2) == 0);
    CHECK(code_of([&] { pants_curve_intersection(x, 4); }) == ErrorCode::UnknownCurveIndex);
    CHECK(code_of([&] { pants_curve_intersection(x, 0); }) == ErrorCode::UnknownCurveIndex);
}

TEST_CASE("twist multiply") {
    const DTCoords x{{2, 0, 0}, {1, 0, 1}, {}};
    CHECK(twist_multiply(x, V{2, 0, 0}).t == V{3, 0, 1});
    CHECK(twist_multiply(x, V{0, 0, 0}) == x);
    CHECK(code_of([&] { twist_multiply(x, V{0, 1, 0}); }) == ErrorCode::TwistOnMissedCurve);
    CHECK(code_of([&] { twist_multiply(x, V{1, 0}); }) == ErrorCode::CountMismatch);
}

TEST_CASE("dehn twist on coordinates") {
    const DTCoords x{{2, 0, 0}, {3, 0, 1}, {}};
    CHECK(dehn_twist(x, 1, pos).t == V{5, 0, 1});
    CHECK(dehn_twist(x, 2, pos) == x);
    CHECK(dehn_twist(x, 2, neg) == x);
    CHECK(dehn_twist(dehn_twist(x, 1, pos), 1, neg) == x);
    CHECK(dehn_twist(x, 1, pos) == twist_multiply(x, V{2, 0, 0}));
    CHECK(code_of([&] { dehn_twist(x, 4, pos); }) == ErrorCode::UnknownCurveIndex);
}

TEST_CASE("solve twists") {
    const DTCoords x1{{2, 0, 0}, {3, 0, 1}, {}};
    const DTCoords x2{{2, 0, 0}, {1, 0, 1}, {}};
    CHECK(solve_twists(x1, x2) == V{2, 0, 0});
    CHECK(twist_multiply(x2, solve_twists(x1, x2)) == x1);
    CHECK(solve_twists(x1, x1) == V{0, 0, 0});
    CHECK(code_of([&] { solve_twists(x1, {{4, 0, 0}, {3, 0, 1}, {}}); }) == ErrorCode::IntersectionMismatch);
    CHECK(code_of([&] { solve_twists(x1, {{2, 0, 0}, {3, 2, 1}, {}}); }) == ErrorCode::MissedCurveTwistMismatch);
    const DTCoords hole{{1}, {0}, {2}};
    CHECK(code_of([&] { solve_twists(hole, {{1}, {0}, {4}}); }) == ErrorCode::IntersectionMismatch);
}
