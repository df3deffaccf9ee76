#include "totient_lab/series.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace totient_lab;

namespace {

using R = ExactRational;

} // namespace

TEST(ExactRational, StoresReduced)
{
    const R r(2160, 9450);
    EXPECT_EQ(r.numerator(), 8u);
    EXPECT_EQ(r.denominator(), 35u);
    EXPECT_EQ(r.to_string(), "8/35");
    EXPECT_EQ(R(4, 2).to_string(), "2");
    EXPECT_EQ(R(0, 7), R());
    EXPECT_THROW(R(1, 0), std::domain_error);
}

TEST(ExactRational, ComparisonAndProduct)
{
    EXPECT_LT(R(1, 3), R(1, 2));
    EXPECT_EQ(R(1, 2) * R(2, 3), R(1, 3));
    EXPECT_EQ(R(0, 1) * R(2, 3), R());
    EXPECT_THROW(R(1, 1ULL << 40) * R(1, 1ULL << 40), std::overflow_error);
}

TEST(SeriesCoefficients, Examples)
{
    EXPECT_EQ(series_coefficients(10),
              (std::vector<std::uint64_t>{0, 1, 2, 2, 4, 2, 6, 4, 6, 4}));
    EXPECT_EQ(series_coefficients(2), (std::vector<std::uint64_t>{0, 1}));
    EXPECT_EQ(series_coefficients(100).at(99), 40u);
    EXPECT_THROW(series_coefficients(1), std::domain_error);
}

TEST(PhiOverN, Examples)
{
    EXPECT_EQ(phi_over_n(4), R(1, 2));
    EXPECT_EQ(phi_over_n(10), R(2, 5));
    EXPECT_EQ(phi_over_n(6), R(1, 3));
    EXPECT_EQ(phi_over_n(5), R(4, 5));
    EXPECT_EQ(phi_over_n(9450), R(8, 35));
    EXPECT_THROW(phi_over_n(1), std::domain_error);
    EXPECT_THROW(phi_over_n(0), std::domain_error);
}

TEST(Radical, Examples)
{
    EXPECT_EQ(oracle::radical_by_division(12), 6u);
    EXPECT_EQ(radical(12), 6u);
    EXPECT_EQ(radical(8), 2u);
    EXPECT_EQ(radical(1), 1u);
    EXPECT_THROW(radical(0), std::domain_error);
}

TEST(GroupByCoefficient, Examples)
{
    auto find = [](const std::vector<CoefficientGroup>& groups, std::uint64_t rad) {
        for (const auto& g : groups) {
            if (g.radical == rad) {
                return g;
            }
        }
        throw std::runtime_error("missing group");
    };

    const auto g2 = find(group_by_coefficient(64), 2);
    EXPECT_EQ(g2.coefficient, R(1, 2));
    EXPECT_EQ(g2.members, (std::vector<std::uint64_t>{2, 4, 8, 16, 32, 64}));

    const auto g3 = find(group_by_coefficient(27), 3);
    EXPECT_EQ(g3.coefficient, R(2, 3));
    EXPECT_EQ(g3.members, (std::vector<std::uint64_t>{3, 9, 27}));

    const auto g6 = find(group_by_coefficient(36), 6);
    EXPECT_EQ(g6.coefficient, R(1, 3));
    EXPECT_EQ(g6.members, (std::vector<std::uint64_t>{6, 12, 18, 24, 36}));

    const auto g5 = find(group_by_coefficient(125), 5);
    EXPECT_EQ(g5.coefficient, R(4, 5));
    EXPECT_EQ(g5.members, (std::vector<std::uint64_t>{5, 25, 125}));

    EXPECT_THROW(group_by_coefficient(1), std::domain_error);
}

TEST(IntegratedSeries, Examples)
{
    EXPECT_EQ(integrated_series_coefficients(10),
              (std::vector<R>{R(1, 2), R(2, 3), R(1, 2), R(4, 5), R(1, 3), R(6, 7), R(1, 2),
                              R(2, 3), R(2, 5)}));
    EXPECT_EQ(integrated_series_coefficients(2), (std::vector<R>{R(1, 2)}));
    EXPECT_EQ(integrated_series_coefficients(9450).back(), R(8, 35));
    EXPECT_THROW(integrated_series_coefficients(1), std::domain_error);
}

// Properties ---------------------------------------------------------------

TEST(SeriesProperty, CoefficientIsProductOverPrimes)
{
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        R product(1, 1);
        for (const auto& [p, e] : oracle::factor_by_division(n)) {
            product = product * R(p - 1, p);
        }
        ASSERT_EQ(phi_over_n(n), product) << n;
        ASSERT_EQ(phi_over_n(n), R(totient(n, Convention::euler), n)) << n;
    }
}

TEST(SeriesProperty, RadicalDeterminesCoefficientAndConversely)
{
    // Equal radicals give equal coefficients, and at this scale the converse holds too.
    std::map<R, std::uint64_t> radical_of_coefficient;
    std::map<std::uint64_t, R> coefficient_of_radical;
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        const auto rad = radical(n);
        ASSERT_EQ(rad, oracle::radical_by_division(n));
        const auto c = phi_over_n(n);
        const auto [it_c, fresh_c] = coefficient_of_radical.emplace(rad, c);
        ASSERT_EQ(it_c->second, c) << n;
        const auto [it_r, fresh_r] = radical_of_coefficient.emplace(c, rad);
        ASSERT_EQ(it_r->second, rad) << n;
    }
}

TEST(SeriesProperty, GroupsPartitionTheRange)
{
    const std::uint64_t limit = 5000;
    const auto groups = group_by_coefficient(limit);
    std::vector<int> seen(limit + 1, 0);
    std::uint64_t total = 0;
    std::uint64_t previous_radical = 0;
    for (const auto& g : groups) {
        ASSERT_GT(g.radical, previous_radical);
        previous_radical = g.radical;
        ASSERT_FALSE(g.members.empty());
        ASSERT_TRUE(std::is_sorted(g.members.begin(), g.members.end()));
        ASSERT_EQ(g.coefficient, phi_over_n(g.radical));
        for (const auto n : g.members) {
            ASSERT_EQ(radical(n), g.radical);
            ++seen[n];
        }
        total += g.members.size();
    }
    EXPECT_EQ(total, limit - 1);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        ASSERT_EQ(seen[n], 1) << n;
    }
}

TEST(SeriesProperty, PrimeGroupsArePowers)
{
    const std::uint64_t limit = 3000;
    for (const auto& g : group_by_coefficient(limit)) {
        if (!is_prime(g.radical)) {
            continue;
        }
        std::vector<std::uint64_t> powers;
        for (std::uint64_t q = g.radical; q <= limit; q *= g.radical) {
            powers.push_back(q);
        }
        ASSERT_EQ(g.members, powers) << g.radical;
    }
}
