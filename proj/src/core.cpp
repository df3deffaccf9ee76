#include "totient_lab/core.hpp"

#include "totient_lab/checked.hpp"

#include <algorithm>
#include <functional>

namespace totient_lab {

std::string to_string(Convention c)
{
    return c == Convention::modern ? "modern" : "euler";
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 && b == 0) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Factorization Factorization::from_factors(std::span<const PrimePower> factors)
{
    std::uint64_t n = 1;
    std::uint64_t previous = 0;
    for (const auto& [prime, exponent] : factors) {
        if (prime <= previous) {
            throw std::domain_error("factorization primes must be strictly increasing");
        }
        if (exponent == 0) {
            throw std::domain_error("factorization exponents must be >= 1");
        }
        if (!is_prime(prime)) {
            throw std::domain_error("factorization entry " + std::to_string(prime) +
                                    " is not prime");
        }
        for (std::uint32_t i = 0; i < exponent; ++i) {
            n = checked_mul(n, prime);
        }
        previous = prime;
    }
    return Factorization(n, {factors.begin(), factors.end()});
}

std::vector<std::uint64_t> Factorization::distinct_primes() const
{
    std::vector<std::uint64_t> primes;
    primes.reserve(factors_.size());
    for (const auto& f : factors_) {
        primes.push_back(f.prime);
    }
    return primes;
}

Factorization factorize(std::uint64_t n)
{
    if (n == 0) {
        throw std::domain_error("cannot factorize 0");
    }
    if (n > kIntegerCeiling) {
        throw std::overflow_error(std::to_string(n) + " exceeds the integer ceiling " +
                                  std::to_string(kIntegerCeiling));
    }

    const std::uint64_t original = n;
    std::vector<PrimePower> factors;
    auto strip = [&](std::uint64_t d) {
        std::uint32_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) {
            factors.push_back({d, e});
        }
    };

    strip(2);
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        strip(d);
    }
    if (n > 1) {
        factors.push_back({n, 1});
    }
    return Factorization(original, std::move(factors));
}

std::uint64_t totient_from_factorization(const Factorization& f, Convention c)
{
    if (f.value() == 1) {
        return value_at_one(c);
    }
    std::uint64_t result = 1;
    for (const auto& [prime, exponent] : f.factors()) {
        result *= prime - 1;
        for (std::uint32_t i = 1; i < exponent; ++i) {
            result *= prime;
        }
    }
    return result;
}

std::uint64_t totient(std::uint64_t n, Convention c)
{
    const Factorization f = factorize(n);
    if (n == 1) {
        return value_at_one(c);
    }
    std::uint64_t result = n;
    for (const auto& pp : f.factors()) {
        result = result / pp.prime * (pp.prime - 1);
    }
    return result;
}

std::uint64_t totient_bruteforce(std::uint64_t n)
{
    if (n == 0) {
        throw std::domain_error("totient of 0 is undefined");
    }
    if (n > kBruteforceLimit) {
        throw bound_exceeded("brute-force totient refuses n = " + std::to_string(n) +
                             " above " + std::to_string(kBruteforceLimit));
    }
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k < n; ++k) {
        if (gcd(k, n) == 1) {
            ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t> coprime_numerators(std::uint64_t d)
{
    if (d < 2) {
        throw std::domain_error("coprime numerators need a denominator >= 2");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k < d; ++k) {
        if (gcd(k, d) == 1) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::uint64_t> numbers_with_prime_support(std::span<const std::uint64_t> primes,
                                                      std::uint64_t limit)
{
    if (primes.empty()) {
        throw std::domain_error("prime support must be nonempty");
    }
    if (limit == 0) {
        throw std::domain_error("limit must be >= 1");
    }
    std::vector<std::uint64_t> support(primes.begin(), primes.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (const auto p : support) {
        if (!is_prime(p)) {
            throw std::domain_error(std::to_string(p) + " is not prime");
        }
    }

    // Every member is prod p_i^(e_i) with all e_i >= 1; expand one prime at a time.
    std::vector<std::uint64_t> out;
    std::function<void(std::size_t, std::uint64_t)> expand = [&](std::size_t i, std::uint64_t acc) {
        if (i == support.size()) {
            out.push_back(acc);
            return;
        }
        const std::uint64_t p = support[i];
        while (acc <= limit / p) {
            acc *= p;
            expand(i + 1, acc);
        }
    };
    expand(0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace totient_lab
