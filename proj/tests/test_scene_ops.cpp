#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "curvemul/corpus.hpp"
#include "curvemul/error.hpp"
#include "curvemul/scene.hpp"
#include "curvemul/torus.hpp"
#include "curvemul/torus_scenes.hpp"

using namespace curvemul;
using namespace curvemul::scene;
using torus::TorusClass;

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

std::map<TorusClass, int> classes_of(const Scene& s, const CurveId& curve) {
    std::map<TorusClass, int> out;
    const auto census = components(s);
    for (std::size_t i = 0; i < census.components.size(); ++i)
        if (census.components[i].curve == curve) ++out[torus_class_of_component(s, i)];
    return out;
}

// k parallel copies of the primitive class
std::map<TorusClass, int> expected(const TorusClass& c) {
    return {{c.primitive(), static_cast<int>(c.multiplicity())}};
}

}  // namespace

TEST_CASE("resolve pins the smoothing convention") {
    const auto grid = torus_grid_scene(1, 0, 0, 1);
    const auto ab = resolve(grid, "A", "B");
    const auto merged = merged_curve_id(grid, "A", "B");
    CHECK(merged == "(A*B)");
    CHECK(components(ab).components.size() == 1);
    CHECK(classes_of(ab, merged) == expected(TorusClass(1, 1)));

    const auto ba = resolve(grid, "B", "A");
    CHECK(classes_of(ba, "(B*A)") == expected(TorusClass(1, -1)));

    // the mirror smoothing gives the other product
    const auto flipped = resolve(grid, "A", "B", SmoothingConvention::Flipped);
    CHECK(classes_of(flipped, merged) == expected(TorusClass(1, -1)));
}

TEST_CASE("resolve keeps the surface") {
    const auto grid = torus_grid_scene(3, -1, 2, 5);
    const auto before = euler_genus(grid);
    const auto after = euler_genus(resolve(grid, "A", "B"));
    CHECK(after.euler_characteristic == before.euler_characteristic);
    CHECK(after.genus == before.genus);
    const auto g2 = genus2_filling_pair();
    CHECK(euler_genus(resolve(g2, "A", "B")).genus == 2);
}

TEST_CASE("resolve refuses non-minimal input") {
    CHECK(code_of([] { resolve(bigon_control_scene(), "A", "B"); }) == ErrorCode::BigonPresent);
    CHECK(code_of([] { resolve(torus_grid_scene(1, 0, 0, 1), "A", "Q"); }) == ErrorCode::UnknownCurve);
}

TEST_CASE("resolving disjoint curves only relabels") {
    const auto s = torus_lines_scene("d", {{"A", 1, 0}, {"B", 0, 1}, {"C", 1, 0}});
    const auto r = resolve(s, "A", "C");
    CHECK(r.vertices.size() == s.vertices.size());
    CHECK(crossing_count(r, "(A*C)", "B") == 2);
    CHECK(classes_of(r, "(A*C)") == expected(TorusClass(2, 0)));
    CHECK_FALSE(r.has_curve("A"));
    CHECK_FALSE(r.has_curve("C"));
}

TEST_CASE("merged id avoids collisions") {
    Scene s = torus_grid_scene(1, 0, 0, 1);
    s.curves.push_back({"(A*B)", std::nullopt});
    CHECK(merged_curve_id(s, "A", "B") == "(A*B)'");
}

TEST_CASE("components after resolution") {
    const auto r = resolve(torus_grid_scene(2, 0, 0, 2), "A", "B");
    CHECK(components(r).components.size() == 2);
    CHECK(classes_of(r, "(A*B)") == expected(TorusClass(2, 2)));
    CHECK(trivial_components(r).empty());
}

TEST_CASE("resolution matches the product over a window") {
    for (const auto& a : torus::enumerate_classes(2))
        for (const auto& b : torus::enumerate_classes(2)) {
            if (torus::intersection(a, b) == 0) continue;
            const auto r = resolve(torus_grid_scene(a.x(), a.y(), b.x(), b.y()), "A", "B");
            CHECK(classes_of(r, "(A*B)") == expected(torus::multiply(a, b)));
            CHECK(trivial_components(r).empty());
        }
}

TEST_CASE("parallel copies") {
    const auto grid = torus_grid_scene(1, 0, 0, 1);
    const auto two = parallel_copies(grid, "A", 2);
    validate(two);
    CHECK(crossing_count(two, "A", "B") == 2);
    CHECK(classes_of(two, "A") == expected(TorusClass(2, 0)));
    CHECK(classes_of(resolve(two, "A", "B"), "(A*B)") == expected(TorusClass(2, 1)));

    CHECK(isomorphic(parallel_copies(grid, "A", 1), grid));

    const auto g2 = genus2_filling_pair();
    const auto three = parallel_copies(g2, "A", 3);
    CHECK(crossing_count(three, "A", "B") == 3 * crossing_count(g2, "A", "B"));
    CHECK(euler_genus(three).genus == 2);

    CHECK(code_of([&] { parallel_copies(grid, "A", 0); }) == ErrorCode::InvalidCount);
    CHECK(code_of([] { parallel_copies(torus_grid_scene(2, 0, 0, 1), "A", 2); }) == ErrorCode::MultiComponentCurve);
}

TEST_CASE("parallel copies then resolve agree with powers") {
    for (const auto& a : torus::enumerate_classes(2)) {
        if (!a.is_primitive()) continue;
        for (const auto& b : torus::enumerate_classes(2)) {
            if (torus::intersection(a, b) == 0) continue;
            const auto grid = torus_grid_scene(a.x(), a.y(), b.x(), b.y());
            for (std::int64_t n = 1; n <= 3; ++n) {
                const auto r = resolve(parallel_copies(grid, "A", n), "A", "B");
                CHECK(classes_of(r, "(A*B)") == expected(torus::signed_power_multiply(a, n, b)));
            }
        }
    }
}

TEST_CASE("distinct labels for copies") {
    const auto s = parallel_copies(torus_grid_scene(1, 0, 0, 1), "A", 3, CopyLabels::Distinct);
    CHECK(s.has_curve("A#1"));
    CHECK(s.has_curve("A#2"));
    CHECK(crossing_count(s, "A#2", "B") == 1);
}

TEST_CASE("self-crossing curves are rejected before copying") {
    Scene s = genus2_filling_pair();
    for (auto& e : s.edges) e.curve = "A";
    s.curves = {{"A", std::nullopt}};
    CHECK(code_of([&] { parallel_copies(s, "A", 2); }) == ErrorCode::NonAlternatingCrossing);
}

TEST_CASE("cancellation at scene level") {
    // a (b a) and (a b) a both give b when a, b, a' bound no triangles
    const auto base = parallel_copies(torus_grid_scene(1, 0, 0, 1), "A", 2, CopyLabels::Distinct);
    REQUIRE(check_region_condition(base, "A", "B", "A#1"));

    const auto inner = resolve(base, "B", "A#1");
    const auto left = resolve(inner, "A", merged_curve_id(base, "B", "A#1"));
    const auto l = components(left);
    REQUIRE(l.components.size() == 1);
    CHECK(torus_class_of_component(l.components[0]) == TorusClass(0, 1));

    const auto first = resolve(base, "A", "B");
    const auto right = resolve(first, merged_curve_id(base, "A", "B"), "A#1");
    const auto r = components(right);
    REQUIRE(r.components.size() == 1);
    CHECK(torus_class_of_component(r.components[0]) == TorusClass(0, 1));
}
