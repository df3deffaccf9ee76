#pragma once

// Slow, obviously-correct reference routines. They share no code with the
// library so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t gcd_by_subtraction(std::uint64_t a, std::uint64_t b)
{
    if (a == 0) {
        return b;
    }
    if (b == 0) {
        return a;
    }
    while (a != b) {
        if (a > b) {
            a -= b;
        } else {
            b -= a;
        }
    }
    return a;
}

/// (prime, exponent) pairs by dividing out every d = 2, 3, 4, ... in turn.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_by_division(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t d = 2; n > 1; ++d) {
        std::uint32_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) {
            out.emplace_back(d, e);
        }
    }
    return out;
}

inline std::uint64_t radical_by_division(std::uint64_t n)
{
    std::uint64_t r = 1;
    for (const auto& [p, e] : factor_by_division(n)) {
        r *= p;
    }
    return r;
}

/// |{k : 1 <= k < n, gcd(k, n) = 1}|.
inline std::uint64_t count_coprime_below(std::uint64_t n)
{
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k < n; ++k) {
        c += std::gcd(k, n) == 1;
    }
    return c;
}

/// All reduced a/b in (0, 1) with b <= d, sorted by value.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> farey_by_sort(std::uint64_t d)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t b = 2; b <= d; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) == 1) {
                out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.first * y.second < y.first * x.second;
    });
    return out;
}

} // namespace oracle
