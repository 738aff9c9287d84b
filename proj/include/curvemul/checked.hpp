#pragma once

#include <cstdint>

#include "curvemul/error.hpp"

// Overflow-checked 64-bit arithmetic. Values in this library stay small, but a
// wrapped intersection number would silently corrupt every downstream check.
namespace curvemul::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

/// x1*y2 - x2*y1
inline std::int64_t det(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
    return sub(mul(x1, y2), mul(x2, y1));
}

}  // namespace curvemul::checked
