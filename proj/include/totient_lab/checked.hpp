#pragma once

#include <cstdint>
#include <stdexcept>

namespace totient_lab {

// 64-bit arithmetic that throws std::overflow_error instead of wrapping.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit addition overflow");
    }
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit multiplication overflow");
    }
    return r;
}

} // namespace totient_lab
