#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <utility>

#include "curvemul/error.hpp"
#include "curvemul/torus.hpp"

using namespace curvemul;
using namespace curvemul::torus;

namespace {

using Vec = std::pair<std::int64_t, std::int64_t>;

Vec canon(std::int64_t x, std::int64_t y) {
    if (x < 0 || (x == 0 && y < 0)) return {-x, -y};
    return {x, y};
}

// Straight from the defining formula, on raw vectors.
Vec oracle_multiply(Vec a, Vec b) {
    a = canon(a.first, a.second);
    b = canon(b.first, b.second);
    const std::int64_t d = a.first * b.second - b.first * a.second;
    int delta;
    if (d != 0) {
        delta = d > 0 ? 1 : -1;
    } else {
        // a = k b; the sign of k is the sign of any nonzero coordinate ratio
        const std::int64_t k_sign = a.first != 0 ? a.first * b.first : a.second * b.second;
        delta = k_sign > 0 ? 1 : -1;
    }
    return canon(a.first + delta * b.first, a.second + delta * b.second);
}

Vec v(const TorusClass& c) { return {c.x(), c.y()}; }

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

}  // namespace

TEST_CASE("normalize") {
    CHECK(v(normalize(-1, 2)) == Vec{1, -2});
    CHECK(v(normalize(0, -3)) == Vec{0, 3});
    CHECK(v(normalize(2, 4)) == Vec{2, 4});
    CHECK(normalize(5, -7) == normalize(-5, 7));
    CHECK(code_of([] { normalize(0, 0); }) == ErrorCode::InvalidClass);
    CHECK(code_of([] { TorusClass(0, 0); }) == ErrorCode::InvalidClass);
}

TEST_CASE("multiplicity and primitive part") {
    CHECK(TorusClass(2, 4).multiplicity() == 2);
    CHECK(TorusClass(2, 4).primitive() == TorusClass(1, 2));
    CHECK(TorusClass(0, 3).multiplicity() == 3);
    CHECK(TorusClass(1, -2).is_primitive());
    CHECK(TorusClass(3, -2).to_string() == "(3,-2)");
}

TEST_CASE("intersection") {
    CHECK(intersection({1, 0}, {0, 1}) == 1);
    CHECK(intersection({2, 1}, {1, 1}) == 1);
    CHECK(intersection({2, 0}, {0, 3}) == 6);
    CHECK(intersection({3, 6}, {1, 2}) == 0);
    for (const auto& a : enumerate_classes(3))
        for (const auto& b : enumerate_classes(3)) {
            CHECK(intersection(a, b) == intersection(b, a));
            CHECK((intersection(a, b) == 0) == (a.primitive() == b.primitive()));
        }
}

TEST_CASE("multiply examples") {
    CHECK(v(multiply({1, 0}, {0, 1})) == Vec{1, 1});
    CHECK(v(multiply({0, 1}, {1, 0})) == Vec{1, -1});
    CHECK(v(multiply({1, 0}, {2, 0})) == Vec{3, 0});
    CHECK(v(multiply({1, 1}, {1, 1})) == Vec{2, 2});
}

TEST_CASE("multiply agrees with the raw formula") {
    for (const auto& a : enumerate_classes(4))
        for (const auto& b : enumerate_classes(4)) CHECK(v(multiply(a, b)) == oracle_multiply(v(a), v(b)));
}

TEST_CASE("power") {
    CHECK(v(power({1, 1}, 3)) == Vec{3, 3});
    CHECK(v(power({2, 0}, 1)) == Vec{2, 0});
    CHECK(v(power({1, -2}, 2)) == Vec{2, -4});
    CHECK(code_of([] { power({1, 0}, 0); }) == ErrorCode::InvalidExponent);
    CHECK(code_of([] { power({1, 0}, -2); }) == ErrorCode::InvalidExponent);
}

TEST_CASE("signed power multiply") {
    const TorusClass a(1, 0), b(0, 1);
    CHECK(v(signed_power_multiply(a, 2, b)) == Vec{2, 1});
    CHECK(v(signed_power_multiply(a, -1, b)) == Vec{1, -1});
    CHECK(v(signed_power_multiply(a, 0, b)) == Vec{0, 1});
    // iterated definition
    CHECK(signed_power_multiply(a, 2, b) == multiply(power(a, 2), b));
    CHECK(signed_power_multiply(a, -3, b) == multiply(b, power(a, 3)));
}

TEST_CASE("dehn twist") {
    const TorusClass a(1, 0), b(0, 1);
    CHECK(v(dehn_twist(a, b, TwistDirection::Positive)) == Vec{1, 1});
    CHECK(v(dehn_twist(a, b, TwistDirection::Negative)) == Vec{1, -1});
    CHECK(dehn_twist(a, dehn_twist(a, b, TwistDirection::Positive), TwistDirection::Negative) == b);
    CHECK(v(dehn_twist(a, {3, 0}, TwistDirection::Positive)) == Vec{3, 0});
    CHECK(code_of([] { dehn_twist({2, 0}, {0, 1}, TwistDirection::Positive); }) == ErrorCode::NotSimpleLoop);
}

TEST_CASE("convexity profile examples") {
    auto p = convexity_profile({1, 0}, {0, 1}, {1, 2}, -2, 2);
    CHECK(p.values == std::vector<std::int64_t>{5, 3, 1, 1, 3});
    CHECK(p.is_convex());
    CHECK(convexity_profile({1, 0}, {0, 1}, {1, 0}, 0, 2).values == std::vector<std::int64_t>{1, 1, 1});
    CHECK(convexity_profile({1, 1}, {1, 1}, {0, 1}, 1, 3).values == std::vector<std::int64_t>{2, 3, 4});
    CHECK(convexity_profile({1, 0}, {0, 1}, {1, 2}, 4, 4).values.size() == 1);
    CHECK(code_of([] { convexity_profile({1, 0}, {0, 1}, {1, 2}, 3, 2); }) == ErrorCode::InvalidBound);
}

TEST_CASE("profile values match iterated multiplication") {
    // f(n) = |2n - 1| for alpha=(1,0), beta=(0,1), gamma=(1,2)
    for (std::int64_t n = -6; n <= 6; ++n) {
        TorusClass c(0, 1);
        for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i)
            c = n > 0 ? multiply(TorusClass(1, 0), c) : multiply(c, TorusClass(1, 0));
        CHECK(intersection(c, {1, 2}) == (2 * n - 1 < 0 ? 1 - 2 * n : 2 * n - 1));
    }
}

TEST_CASE("first violation is reported") {
    ConvexityProfile p{{1, 0}, {0, 1}, {1, 0}, 0, 3, {1, 4, 1, 1}};
    REQUIRE(p.first_violation().has_value());
    CHECK(*p.first_violation() == 1);
    CHECK_FALSE(p.is_convex());
}

TEST_CASE("non-associativity witness") {
    const TorusClass e1(1, 0), e2(0, 1), d(1, 1);
    CHECK(v(multiply(multiply(e1, e2), d)) == Vec{2, 2});
    CHECK(v(multiply(e1, multiply(e2, d))) == Vec{2, 0});
    CHECK(v(multiply(e1, multiply(e2, e1))) == Vec{0, 1});
    CHECK(v(multiply(multiply(e1, e2), e1)) == Vec{0, 1});
}

TEST_CASE("enumerate classes") {
    const auto one = enumerate_classes(1);
    CHECK(one.size() == 4);
    CHECK(code_of([] { enumerate_classes(0); }) == ErrorCode::InvalidBound);
    // (2k+1)^2 - 1 nonzero vectors, halved by the sign
    CHECK(enumerate_classes(4).size() == 40);
}

TEST_CASE("overflow is reported, not wrapped") {
    const auto big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    CHECK(code_of([&] { intersection({big, 1}, {1, big}); }) == ErrorCode::Overflow);
    CHECK(code_of([&] { power({big, 1}, 2); }) == ErrorCode::Overflow);
}

TEST_CASE("parse class") {
    CHECK(parse_class("3,-2") == TorusClass(3, -2));
    CHECK(parse_class("(-1, 2)") == TorusClass(1, -2));
    CHECK(code_of([] { parse_class("3;2"); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { parse_class("0,0"); }) == ErrorCode::InvalidClass);
}
