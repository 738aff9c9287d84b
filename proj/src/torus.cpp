#include "curvemul/torus.hpp"

#include <numeric>
#include <regex>

#include "curvemul/checked.hpp"

namespace curvemul::torus {

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

TorusClass::TorusClass(std::int64_t x, std::int64_t y) : x_(x), y_(y) {
    if (x == 0 && y == 0) throw Error(ErrorCode::InvalidClass, "zero vector is not a curve system");
    if (x < 0 || (x == 0 && y < 0)) {
        x_ = checked::neg(x);
        y_ = checked::neg(y);
    }
}

std::int64_t TorusClass::multiplicity() const noexcept {
    return std::gcd(x_, y_);
}

TorusClass TorusClass::primitive() const {
    const std::int64_t d = multiplicity();
    return TorusClass(x_ / d, y_ / d);
}

std::string TorusClass::to_string() const {
    return "(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
}

TorusClass normalize(std::int64_t x, std::int64_t y) { return TorusClass(x, y); }

std::int64_t intersection(const TorusClass& a, const TorusClass& b) {
    return checked::abs(checked::det(a.x(), a.y(), b.x(), b.y()));
}

TorusClass multiply(const TorusClass& a, const TorusClass& b) {
    const std::int64_t d = checked::det(a.x(), a.y(), b.x(), b.y());
    // Parallel canonical vectors share a direction, so k > 0.
    const int delta = d != 0 ? sign(d) : 1;
    return TorusClass(checked::add(a.x(), checked::mul(delta, b.x())),
                      checked::add(a.y(), checked::mul(delta, b.y())));
}

TorusClass power(const TorusClass& a, std::int64_t k) {
    if (k <= 0) throw Error(ErrorCode::InvalidExponent, "power needs k >= 1, got " + std::to_string(k));
    return TorusClass(checked::mul(k, a.x()), checked::mul(k, a.y()));
}

TorusClass signed_power_multiply(const TorusClass& a, std::int64_t n, const TorusClass& b) {
    if (n == 0) return b;
    if (n > 0) return multiply(power(a, n), b);
    return multiply(b, power(a, checked::neg(n)));
}

TorusClass dehn_twist(const TorusClass& a, const TorusClass& b, TwistDirection direction) {
    if (!a.is_primitive())
        throw Error(ErrorCode::NotSimpleLoop, a.to_string() + " is a multicurve, not a simple loop");
    const std::int64_t k = intersection(a, b);
    return signed_power_multiply(a, direction == TwistDirection::Positive ? k : -k, b);
}

std::optional<std::size_t> ConvexityProfile::first_violation() const {
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (2 * values[i] > values[i - 1] + values[i + 1]) return i;
    }
    return std::nullopt;
}

ConvexityProfile convexity_profile(const TorusClass& alpha, const TorusClass& beta,
                                   const TorusClass& gamma, std::int64_t n_min,
                                   std::int64_t n_max) {
    if (n_min > n_max)
        throw Error(ErrorCode::InvalidBound, "empty range " + std::to_string(n_min) + ".." +
                                                 std::to_string(n_max));
    ConvexityProfile profile{alpha, beta, gamma, n_min, n_max, {}};
    profile.values.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (std::int64_t n = n_min; n <= n_max; ++n)
        profile.values.push_back(intersection(signed_power_multiply(alpha, n, beta), gamma));
    return profile;
}

std::vector<TorusClass> enumerate_classes(std::int64_t bound) {
    if (bound < 1) throw Error(ErrorCode::InvalidBound, "class bound must be >= 1");
    std::vector<TorusClass> out;
    for (std::int64_t x = 0; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            if (x == 0 && y <= 0) continue;
            out.emplace_back(x, y);
        }
    }
    return out;
}

TorusClass parse_class(const std::string& text) {
    static const std::regex pattern(R"(\s*\(?\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw Error(ErrorCode::MalformedInput, "expected 'x,y', got '" + text + "'");
    try {
        return TorusClass(std::stoll(m[1].str()), std::stoll(m[2].str()));
    } catch (const std::out_of_range&) {
        throw Error(ErrorCode::Overflow, "class coordinate out of range: " + text);
    }
}

}  // namespace curvemul::torus
