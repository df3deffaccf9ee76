#include "totient_lab/farey.hpp"

#include "totient_lab/checked.hpp"

namespace totient_lab {

namespace {

void require_denominator(std::uint64_t d)
{
    if (d < 2) {
        throw std::domain_error("max denominator must be >= 2");
    }
}

std::uint64_t triangle(std::uint64_t d)
{
    // One of d, d-1 is even; halve it first so the product cannot overflow early.
    return d % 2 == 0 ? checked_mul(d / 2, d - 1) : checked_mul(d, (d - 1) / 2);
}

std::uint64_t sum_from_two(const TotientTable& table)
{
    std::uint64_t sum = 0;
    for (std::uint64_t k = 2; k <= table.max_n(); ++k) {
        sum = checked_add(sum, table[k]);
    }
    return sum;
}

} // namespace

ReducedFraction::ReducedFraction(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator)
{
    if (numerator == 0 || numerator >= denominator) {
        throw std::domain_error("fraction " + std::to_string(numerator) + "/" +
                                std::to_string(denominator) + " is not strictly between 0 and 1");
    }
    if (gcd(numerator, denominator) != 1) {
        throw std::domain_error("fraction " + std::to_string(numerator) + "/" +
                                std::to_string(denominator) + " is not in lowest terms");
    }
}

bool FareyCountReport::consistent() const noexcept
{
    return total_unreduced == max_denominator * (max_denominator - 1) / 2 &&
           count_by_exclusion == total_unreduced - excluded &&
           count_by_exclusion == count_by_totient_sum &&
           (!count_by_enumeration || *count_by_enumeration == count_by_totient_sum);
}

std::uint64_t count_by_totient_sum(std::uint64_t max_denominator, SieveOptions options)
{
    require_denominator(max_denominator);
    return sum_from_two(totient_sieve(max_denominator, Convention::euler, options));
}

FareyCountReport count_by_exclusion(std::uint64_t max_denominator, bool enumerate,
                                    SieveOptions options)
{
    require_denominator(max_denominator);
    const std::uint64_t d = max_denominator;
    const TotientTable table = totient_sieve(d, Convention::euler, options);

    FareyCountReport report;
    report.max_denominator = d;
    report.total_unreduced = triangle(d);
    for (std::uint64_t k = 2; d / k >= 2; ++k) {
        report.excluded = checked_add(report.excluded, checked_mul(d / k - 1, table[k]));
    }
    report.count_by_exclusion = report.total_unreduced - report.excluded;
    report.count_by_totient_sum = sum_from_two(table);
    if (enumerate) {
        report.count_by_enumeration = count_by_enumeration(d);
    }
    return report;
}

std::uint64_t count_reducible(std::uint64_t max_denominator, SieveOptions options)
{
    require_denominator(max_denominator);
    return triangle(max_denominator) - count_by_totient_sum(max_denominator, options);
}

std::uint64_t count_by_enumeration(std::uint64_t max_denominator)
{
    require_denominator(max_denominator);
    if (max_denominator > kEnumerationLimit) {
        throw bound_exceeded("enumeration refuses D = " + std::to_string(max_denominator) +
                             " above " + std::to_string(kEnumerationLimit));
    }
    std::uint64_t count = 0;
    for (std::uint64_t b = 2; b <= max_denominator; ++b) {
        for (std::uint64_t a = 1; a < b; ++a) {
            if (gcd(a, b) == 1) {
                ++count;
            }
        }
    }
    return count;
}

void for_each_farey(std::uint64_t max_denominator,
                    const std::function<void(const ReducedFraction&)>& visit)
{
    require_denominator(max_denominator);
    if (max_denominator > kFareyStreamLimit) {
        throw bound_exceeded("Farey enumeration refuses D = " + std::to_string(max_denominator) +
                             " above " + std::to_string(kFareyStreamLimit));
    }
    const std::uint64_t n = max_denominator;
    // Neighbours a/b < c/d; the successor of c/d is (k c - a)/(k d - b), k = floor((n + b)/d).
    std::uint64_t a = 0, b = 1, c = 1, d = n;
    while (c < d) {
        visit(ReducedFraction(c, d, ReducedFraction::unchecked_tag{}));
        const std::uint64_t k = (n + b) / d;
        const std::uint64_t e = k * c - a;
        const std::uint64_t f = k * d - b;
        a = c;
        b = d;
        c = e;
        d = f;
    }
}

std::vector<ReducedFraction> farey_sequence(std::uint64_t max_denominator)
{
    require_denominator(max_denominator);
    if (max_denominator > kFareyMaterializeLimit) {
        throw bound_exceeded("Farey materialization refuses D = " +
                             std::to_string(max_denominator) + " above " +
                             std::to_string(kFareyMaterializeLimit));
    }
    std::vector<ReducedFraction> out;
    try {
        out.reserve(count_by_totient_sum(max_denominator));
    } catch (const std::bad_alloc&) {
        throw resource_error("cannot allocate the Farey sequence of order " +
                             std::to_string(max_denominator));
    }
    for_each_farey(max_denominator, [&out](const ReducedFraction& f) { out.push_back(f); });
    return out;
}

} // namespace totient_lab
