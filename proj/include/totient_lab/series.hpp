#pragma once

#include "totient_lab/sieve.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace totient_lab {

/// Nonnegative rational, always stored in lowest terms.
class ExactRational {
public:
    ExactRational() = default;
    /// Reduces on construction; throws std::domain_error for a zero denominator.
    ExactRational(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

    friend bool operator==(const ExactRational&, const ExactRational&) = default;
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
    {
        using u128 = unsigned __int128;
        return u128{a.num_} * b.den_ <=> u128{b.num_} * a.den_;
    }

    /// Cross-reduces before multiplying; throws std::overflow_error if the
    /// reduced result does not fit.
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Terms of sum phi(n) x^n that share one coefficient phi(n)/n: exactly the
/// n with the same squarefree kernel.
struct CoefficientGroup {
    ExactRational coefficient;
    std::uint64_t radical = 1;
    std::vector<std::uint64_t> members;
};

/// Coefficient of x^n in sum phi(n) x^n for n = 1..max_n (Euler convention,
/// so element 0 is 0). Requires max_n >= 2.
std::vector<std::uint64_t> series_coefficients(std::uint64_t max_n, SieveOptions options = {});

/// phi(n)/n in lowest terms. Requires n >= 2.
ExactRational phi_over_n(std::uint64_t n);

/// Product of the distinct primes dividing n; radical(1) = 1.
std::uint64_t radical(std::uint64_t n);

/// Partitions 2..max_n by radical, ascending by radical.
std::vector<CoefficientGroup> group_by_coefficient(std::uint64_t max_n);

/// phi(n)/n for n = 2..max_n; element 0 is n = 2.
std::vector<ExactRational> integrated_series_coefficients(std::uint64_t max_n,
                                                          SieveOptions options = {});

} // namespace totient_lab
