#pragma once

#include "totient_lab/core.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace totient_lab {

/// Largest table the sieve will build. At this size the table costs 800 MB
/// plus 400 MB of smallest-prime-factor scratch.
inline constexpr std::uint64_t kSieveLimit = 100'000'000ULL;

struct SieveOptions {
    /// Worker threads for the totient pass. Any count yields the same table.
    unsigned threads = 1;
};

/// Totient values for 1..max_n under one convention. Immutable once built.
class TotientTable {
public:
    std::uint64_t max_n() const noexcept { return values_.size(); }
    Convention convention() const noexcept { return convention_; }

    /// 1-based; unchecked.
    std::uint64_t operator[](std::uint64_t n) const noexcept { return values_[n - 1]; }
    /// 1-based; throws std::out_of_range outside 1..max_n.
    std::uint64_t at(std::uint64_t n) const;

    /// Element i holds the value for n = i + 1.
    std::span<const std::uint64_t> values() const noexcept { return values_; }

    friend bool operator==(const TotientTable&, const TotientTable&) = default;

private:
    friend TotientTable totient_sieve(std::uint64_t, Convention, SieveOptions);

    TotientTable(std::vector<std::uint64_t> values, Convention c)
        : values_(std::move(values)), convention_(c)
    {
    }

    std::vector<std::uint64_t> values_;
    Convention convention_ = Convention::modern;
};

/// Smallest prime factor of every n in 0..max_n via a linear sieve;
/// entries 0 and 1 are 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t max_n);

/// Throws std::domain_error for 0, bound_exceeded above kSieveLimit and
/// resource_error when allocation fails.
TotientTable totient_sieve(std::uint64_t max_n, Convention c = Convention::modern,
                           SieveOptions options = {});

struct CumulativeCountRow {
    std::uint64_t max_denominator = 0;
    /// Sum of totient(k) for k = 2..max_denominator.
    std::uint64_t fraction_count = 0;

    friend bool operator==(const CumulativeCountRow&, const CumulativeCountRow&) = default;
};

/// Checkpoints must be nonempty and non-decreasing.
std::vector<CumulativeCountRow> cumulative_counts(std::span<const std::uint64_t> checkpoints,
                                                  SieveOptions options = {});

/// Same, reading values from an existing table whose max_n covers every checkpoint.
std::vector<CumulativeCountRow> cumulative_counts(const TotientTable& table,
                                                  std::span<const std::uint64_t> checkpoints);

// Benchmark harness ---------------------------------------------------------

struct BenchLimits {
    std::uint64_t bruteforce = 20'000;
    std::uint64_t factorization = 10'000'000;
    std::uint64_t sieve = kSieveLimit;
};

struct BenchMethodResult {
    std::string method;
    bool executed = false;
    std::string skip_reason;
    double seconds = 0.0;
    /// Sum of all values modulo 2^64.
    std::uint64_t checksum = 0;
};

struct BenchReport {
    std::uint64_t max_n = 0;
    Convention convention = Convention::modern;
    std::vector<BenchMethodResult> methods;

    bool checksums_agree() const noexcept;
};

/// Runs bruteforce-oracle, per-n-factorization and sieve over 1..max_n.
/// Methods whose limit is below max_n are skipped and marked.
BenchReport bench_totient_methods(std::uint64_t max_n, Convention c = Convention::modern,
                                  const BenchLimits& limits = {}, SieveOptions options = {});

} // namespace totient_lab
