#include "totient_lab/series.hpp"

#include "totient_lab/checked.hpp"

#include <map>

namespace totient_lab {

namespace {

void require_at_least_two(std::uint64_t n, const char* what)
{
    if (n < 2) {
        throw std::domain_error(std::string(what) + " must be >= 2");
    }
}

} // namespace

ExactRational::ExactRational(std::uint64_t numerator, std::uint64_t denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    const std::uint64_t g = gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string ExactRational::to_string() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactRational operator*(const ExactRational& a, const ExactRational& b)
{
    if (a.num_ == 0 || b.num_ == 0) {
        return {};
    }
    const std::uint64_t g1 = gcd(a.num_, b.den_);
    const std::uint64_t g2 = gcd(b.num_, a.den_);
    ExactRational r;
    r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
}

std::vector<std::uint64_t> series_coefficients(std::uint64_t max_n, SieveOptions options)
{
    require_at_least_two(max_n, "series length");
    const TotientTable table = totient_sieve(max_n, Convention::euler, options);
    return {table.values().begin(), table.values().end()};
}

ExactRational phi_over_n(std::uint64_t n)
{
    require_at_least_two(n, "coefficient index");
    return {totient(n, Convention::euler), n};
}

std::uint64_t radical(std::uint64_t n)
{
    const Factorization f = factorize(n);
    std::uint64_t r = 1;
    for (const auto& pp : f.factors()) {
        r *= pp.prime;
    }
    return r;
}

std::vector<CoefficientGroup> group_by_coefficient(std::uint64_t max_n)
{
    require_at_least_two(max_n, "series length");
    const std::vector<std::uint32_t> spf = smallest_prime_factors(max_n);

    std::map<std::uint64_t, std::vector<std::uint64_t>> by_radical;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        std::uint64_t rad = 1;
        for (std::uint64_t m = n; m > 1;) {
            const std::uint64_t p = spf[m];
            rad *= p;
            while (m % p == 0) {
                m /= p;
            }
        }
        by_radical[rad].push_back(n);
    }

    std::vector<CoefficientGroup> groups;
    groups.reserve(by_radical.size());
    for (auto& [rad, members] : by_radical) {
        groups.push_back({phi_over_n(rad), rad, std::move(members)});
    }
    return groups;
}

std::vector<ExactRational> integrated_series_coefficients(std::uint64_t max_n,
                                                          SieveOptions options)
{
    require_at_least_two(max_n, "series length");
    const TotientTable table = totient_sieve(max_n, Convention::euler, options);
    std::vector<ExactRational> out;
    out.reserve(max_n - 1);
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        out.emplace_back(table[n], n);
    }
    return out;
}

} // namespace totient_lab
