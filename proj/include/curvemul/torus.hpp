#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact model of curve systems on the closed torus. A class is a nonzero
// integer homology vector up to global sign; a non-primitive vector d*(x, y)
// stands for d parallel copies of the primitive class (x, y).
namespace curvemul::torus {

class TorusClass {
public:
    /// Canonical representative of +-(x, y): x > 0, or x == 0 and y > 0.
    /// Throws InvalidClass on the zero vector.
    TorusClass(std::int64_t x, std::int64_t y);

    std::int64_t x() const noexcept { return x_; }
    std::int64_t y() const noexcept { return y_; }

    /// Number of parallel copies, gcd(|x|, |y|).
    std::int64_t multiplicity() const noexcept;
    bool is_primitive() const noexcept { return multiplicity() == 1; }
    TorusClass primitive() const;

    std::string to_string() const;

    friend auto operator<=>(const TorusClass&, const TorusClass&) = default;

private:
    std::int64_t x_;
    std::int64_t y_;
};

TorusClass normalize(std::int64_t x, std::int64_t y);

/// Geometric intersection number |x*y' - x'*y|.
std::int64_t intersection(const TorusClass& a, const TorusClass& b);

/// The resolution product a*b = +-((x, y) + delta (x', y')), where delta is the
/// sign of x*y' - x'*y, or the sign of k when (x, y) = k (x', y'). Canonical
/// representatives of parallel classes point the same way, so k > 0 and
/// delta = +1 in the parallel case.
TorusClass multiply(const TorusClass& a, const TorusClass& b);

/// k parallel copies of a; k >= 1 (InvalidExponent otherwise).
TorusClass power(const TorusClass& a, std::int64_t k);

/// a^n b with the convention a^n b = b a^{-n} for n < 0 and a^0 b = b.
TorusClass signed_power_multiply(const TorusClass& a, std::int64_t n, const TorusClass& b);

enum class TwistDirection { Positive, Negative };

/// Dehn twist along the simple loop a applied to b: a^{I(a,b)} b (positive) or
/// a^{-I(a,b)} b (negative). Throws NotSimpleLoop when a is not primitive.
TorusClass dehn_twist(const TorusClass& a, const TorusClass& b, TwistDirection direction);

/// f(n) = I(alpha^n beta, gamma) sampled on [n_min, n_max].
struct ConvexityProfile {
    TorusClass alpha;
    TorusClass beta;
    TorusClass gamma;
    std::int64_t n_min;
    std::int64_t n_max;
    std::vector<std::int64_t> values;

    /// First interior index i (0-based into values) with
    /// 2 values[i] > values[i-1] + values[i+1], if any.
    std::optional<std::size_t> first_violation() const;
    bool is_convex() const { return !first_violation().has_value(); }
};

/// Throws InvalidBound when n_min > n_max.
ConvexityProfile convexity_profile(const TorusClass& alpha, const TorusClass& beta,
                                   const TorusClass& gamma, std::int64_t n_min,
                                   std::int64_t n_max);

/// Every canonical class with |x|, |y| <= bound.
std::vector<TorusClass> enumerate_classes(std::int64_t bound);

/// Parses "x,y" (whitespace and surrounding parentheses allowed).
TorusClass parse_class(const std::string& text);

}  // namespace curvemul::torus
