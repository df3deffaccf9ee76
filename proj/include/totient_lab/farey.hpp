#pragma once

#include "totient_lab/sieve.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace totient_lab {

/// Largest D accepted by count_by_enumeration(); the double loop is O(D^2 log D).
inline constexpr std::uint64_t kEnumerationLimit = 10'000;
/// Largest D accepted by farey_sequence(). The list holds ~0.3 D^2 entries.
inline constexpr std::uint64_t kFareyMaterializeLimit = 10'000;
/// Largest D accepted by for_each_farey().
inline constexpr std::uint64_t kFareyStreamLimit = 100'000;

/// A fraction strictly between 0 and 1 in lowest terms.
class ReducedFraction {
public:
    /// Throws std::domain_error unless 0 < numerator < denominator and they are coprime.
    ReducedFraction(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

    /// Exact comparison by cross-multiplication in 128 bits.
    friend std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b)
    {
        using u128 = unsigned __int128;
        return u128{a.num_} * b.den_ <=> u128{b.num_} * a.den_;
    }

private:
    struct unchecked_tag {};
    ReducedFraction(std::uint64_t n, std::uint64_t d, unchecked_tag) : num_(n), den_(d) {}
    friend void for_each_farey(std::uint64_t, const std::function<void(const ReducedFraction&)>&);

    std::uint64_t num_;
    std::uint64_t den_;
};

/// Reduced fractions in (0, 1) with denominator <= max_denominator, counted
/// several ways. The counts must all agree.
struct FareyCountReport {
    std::uint64_t max_denominator = 0;
    /// D(D-1)/2: every a/b with 1 <= a < b <= D, reduced or not.
    std::uint64_t total_unreduced = 0;
    /// Sum over k >= 2 of (floor(D/k) - 1) * phi(k): the non-reduced ones.
    std::uint64_t excluded = 0;
    std::uint64_t count_by_exclusion = 0;
    std::uint64_t count_by_totient_sum = 0;
    std::optional<std::uint64_t> count_by_enumeration;

    bool consistent() const noexcept;
};

/// Sum of phi(k) for k = 2..D.
std::uint64_t count_by_totient_sum(std::uint64_t max_denominator, SieveOptions options = {});

/// D(D-1)/2 minus the multiples of each smaller reduced fraction. The k-loop
/// stops once floor(D/k) < 2 since later terms contribute zero. With
/// `enumerate` the brute-force count is filled in as well.
FareyCountReport count_by_exclusion(std::uint64_t max_denominator, bool enumerate = false,
                                    SieveOptions options = {});

/// Fractions a/b with 1 <= a < b <= D that are not in lowest terms.
std::uint64_t count_reducible(std::uint64_t max_denominator, SieveOptions options = {});

/// Direct double loop over (a, b) with a gcd test.
std::uint64_t count_by_enumeration(std::uint64_t max_denominator);

/// Visits the Farey sequence of order D in increasing order, excluding 0/1
/// and 1/1, via the next-term neighbour recurrence.
void for_each_farey(std::uint64_t max_denominator,
                    const std::function<void(const ReducedFraction&)>& visit);

std::vector<ReducedFraction> farey_sequence(std::uint64_t max_denominator);

} // namespace totient_lab
