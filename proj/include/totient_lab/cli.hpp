#pragma once

#include "totient_lab/farey.hpp"
#include "totient_lab/series.hpp"
#include "totient_lab/sieve.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace totient_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCrossCheck = 3;

enum class OutputFormat { plain, csv, json };

/// Plain decimal digits only: no sign, whitespace or base prefix.
/// Throws std::invalid_argument on malformed text and std::overflow_error
/// when the value does not fit in 64 bits.
std::uint64_t parse_decimal(std::string_view text);

/// Result of `count`; a field is empty when its method did not run.
struct CountSummary {
    std::uint64_t max_denominator = 0;
    std::uint64_t total_unreduced = 0;
    std::optional<std::uint64_t> excluded;
    std::optional<std::uint64_t> by_exclusion;
    std::optional<std::uint64_t> by_totient_sum;
    std::optional<std::uint64_t> by_enumeration;

    /// True when every count that is present is equal.
    bool agree() const noexcept;
};

int exit_code_for(const CountSummary& summary) noexcept;
int exit_code_for(const BenchReport& report) noexcept;

// Writers. CSV has a header row and LF line endings; JSON is one line.

void write_totient(std::ostream& os, std::uint64_t n, Convention c, bool verbose,
                   OutputFormat format);
void write_table(std::ostream& os, const TotientTable& table, OutputFormat format);
void write_cumulative(std::ostream& os, std::span<const CumulativeCountRow> rows,
                      OutputFormat format);
void write_count(std::ostream& os, const CountSummary& summary, OutputFormat format);
/// Streams the sequence; returns the number of fractions written.
std::uint64_t write_farey(std::ostream& os, std::uint64_t max_denominator, OutputFormat format);
/// `coefficients[i]` is phi(i + 1); rows start at n = 2.
void write_series(std::ostream& os, std::span<const std::uint64_t> coefficients,
                  OutputFormat format);
void write_groups(std::ostream& os, std::span<const CoefficientGroup> groups,
                  OutputFormat format);
void write_bench(std::ostream& os, const BenchReport& report, OutputFormat format);

/// Entry point behind the `totient-lab` binary. `args[0]` is the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace totient_lab::cli
