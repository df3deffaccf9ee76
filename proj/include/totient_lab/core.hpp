#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace totient_lab {

/// Largest integer accepted by factorize() and totient(). Trial division up to
/// the square root of this value stays well under a second.
inline constexpr std::uint64_t kIntegerCeiling = 1'000'000'000'000'000ULL;

/// Largest n accepted by totient_bruteforce().
inline constexpr std::uint64_t kBruteforceLimit = 1'000'000ULL;

/// Raised when an input exceeds the documented bound of a deliberately slow
/// or memory-hungry routine (oracles, enumeration, sieve size).
class bound_exceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when a table cannot be allocated.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Value assigned to n = 1. Modern counts 1 as coprime to itself (phi(1) = 1);
/// Euler counts only numbers strictly below n (phi(1) = 0). They agree for n >= 2.
enum class Convention { modern, euler };

std::string to_string(Convention c);

inline constexpr std::uint64_t value_at_one(Convention c) noexcept
{
    return c == Convention::modern ? 1 : 0;
}

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of a positive integer, primes strictly ascending.
class Factorization {
public:
    /// Factorization of 1.
    Factorization() = default;

    /// Validates every invariant: ascending distinct primes, each actually
    /// prime, exponents >= 1, product fits in 64 bits.
    static Factorization from_factors(std::span<const PrimePower> factors);

    std::uint64_t value() const noexcept { return n_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::vector<std::uint64_t> distinct_primes() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    Factorization(std::uint64_t n, std::vector<PrimePower> factors)
        : n_(n), factors_(std::move(factors))
    {
    }

    friend Factorization factorize(std::uint64_t n);

    std::uint64_t n_ = 1;
    std::vector<PrimePower> factors_;
};

/// Throws std::domain_error when both arguments are zero.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Trial division by 2, then odd candidates up to the square root of the
/// unfactored remainder. Throws std::domain_error for 0 and
/// std::overflow_error above kIntegerCeiling.
Factorization factorize(std::uint64_t n);

/// Product of p^(e-1) * (p-1) over the factors; the convention's value for n = 1.
std::uint64_t totient_from_factorization(const Factorization& f,
                                         Convention c = Convention::modern);

/// n * prod (p-1)/p over the distinct prime divisors, dividing before
/// multiplying so every intermediate stays <= n.
std::uint64_t totient(std::uint64_t n, Convention c = Convention::modern);

/// Counts 1 <= k < n with gcd(k, n) = 1. Euler convention by construction.
std::uint64_t totient_bruteforce(std::uint64_t n);

/// Every k in [1, d) coprime to d, ascending. Requires d >= 2.
std::vector<std::uint64_t> coprime_numerators(std::uint64_t d);

/// All n <= limit whose set of distinct prime divisors is exactly `primes`.
/// Duplicate entries in `primes` are ignored.
std::vector<std::uint64_t> numbers_with_prime_support(std::span<const std::uint64_t> primes,
                                                      std::uint64_t limit);

} // namespace totient_lab
