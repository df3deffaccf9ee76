#include "totient_lab/sieve.hpp"

#include "totient_lab/checked.hpp"

#include <algorithm>
#include <chrono>
#include <new>
#include <thread>

namespace totient_lab {

namespace {

void check_sieve_size(std::uint64_t max_n)
{
    if (max_n == 0) {
        throw std::domain_error("sieve size must be >= 1");
    }
    if (max_n > kSieveLimit) {
        throw bound_exceeded("sieve size " + std::to_string(max_n) + " exceeds the limit " +
                             std::to_string(kSieveLimit));
    }
}

// phi(n) from the smallest-prime-factor chain, independent of other entries.
std::uint64_t phi_from_spf(std::span<const std::uint32_t> spf, std::uint64_t n)
{
    std::uint64_t result = 1;
    while (n > 1) {
        const std::uint64_t p = spf[n];
        n /= p;
        result *= p - 1;
        while (n % p == 0) {
            n /= p;
            result *= p;
        }
    }
    return result;
}

void fill_sequential(std::span<const std::uint32_t> spf, std::vector<std::uint64_t>& values)
{
    const std::uint64_t max_n = values.size();
    values[0] = 1;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const std::uint64_t p = spf[n];
        const std::uint64_t m = n / p;
        const std::uint64_t phi_m = values[m - 1];
        values[n - 1] = spf[m] == p ? phi_m * p : phi_m * (p - 1);
    }
}

void fill_parallel(std::span<const std::uint32_t> spf, std::vector<std::uint64_t>& values,
                   unsigned threads)
{
    const std::uint64_t max_n = values.size();
    const std::uint64_t chunk = (max_n + threads - 1) / threads;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = std::uint64_t{t} * chunk + 1;
        const std::uint64_t hi = std::min(max_n, lo + chunk - 1);
        if (lo > hi) {
            break;
        }
        workers.emplace_back([&values, spf, lo, hi] {
            for (std::uint64_t n = lo; n <= hi; ++n) {
                values[n - 1] = phi_from_spf(spf, n);
            }
        });
    }
}

template <typename F>
double time_seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

} // namespace

std::uint64_t TotientTable::at(std::uint64_t n) const
{
    if (n == 0 || n > max_n()) {
        throw std::out_of_range("table index " + std::to_string(n) + " outside 1.." +
                                std::to_string(max_n()));
    }
    return values_[n - 1];
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t max_n)
{
    check_sieve_size(max_n);
    try {
        std::vector<std::uint32_t> spf(max_n + 1, 0);
        std::vector<std::uint32_t> primes;
        for (std::uint64_t i = 2; i <= max_n; ++i) {
            if (spf[i] == 0) {
                spf[i] = static_cast<std::uint32_t>(i);
                primes.push_back(static_cast<std::uint32_t>(i));
            }
            for (const std::uint64_t p : primes) {
                if (p > spf[i] || i * p > max_n) {
                    break;
                }
                spf[i * p] = static_cast<std::uint32_t>(p);
            }
        }
        return spf;
    } catch (const std::bad_alloc&) {
        throw resource_error("cannot allocate a sieve of size " + std::to_string(max_n));
    }
}

TotientTable totient_sieve(std::uint64_t max_n, Convention c, SieveOptions options)
{
    const std::vector<std::uint32_t> spf = smallest_prime_factors(max_n);
    std::vector<std::uint64_t> values;
    try {
        values.assign(max_n, 0);
    } catch (const std::bad_alloc&) {
        throw resource_error("cannot allocate a totient table of size " + std::to_string(max_n));
    }

    if (options.threads <= 1) {
        fill_sequential(spf, values);
    } else {
        fill_parallel(spf, values, options.threads);
    }
    values[0] = value_at_one(c);
    return TotientTable(std::move(values), c);
}

std::vector<CumulativeCountRow> cumulative_counts(const TotientTable& table,
                                                  std::span<const std::uint64_t> checkpoints)
{
    if (checkpoints.empty()) {
        throw std::domain_error("checkpoints must be nonempty");
    }
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
        throw std::domain_error("checkpoints must be ascending");
    }
    if (checkpoints.front() == 0) {
        throw std::domain_error("checkpoints must be positive");
    }
    if (checkpoints.back() > table.max_n()) {
        throw std::out_of_range("checkpoint " + std::to_string(checkpoints.back()) +
                                " exceeds the table size " + std::to_string(table.max_n()));
    }

    std::vector<CumulativeCountRow> rows;
    rows.reserve(checkpoints.size());
    std::uint64_t sum = 0;
    std::uint64_t k = 2;
    for (const std::uint64_t checkpoint : checkpoints) {
        for (; k <= checkpoint; ++k) {
            sum = checked_add(sum, table[k]);
        }
        rows.push_back({checkpoint, sum});
    }
    return rows;
}

std::vector<CumulativeCountRow> cumulative_counts(std::span<const std::uint64_t> checkpoints,
                                                  SieveOptions options)
{
    if (checkpoints.empty()) {
        throw std::domain_error("checkpoints must be nonempty");
    }
    const auto largest = *std::max_element(checkpoints.begin(), checkpoints.end());
    if (largest == 0) {
        throw std::domain_error("checkpoints must be positive");
    }
    return cumulative_counts(totient_sieve(largest, Convention::euler, options), checkpoints);
}

bool BenchReport::checksums_agree() const noexcept
{
    const BenchMethodResult* first = nullptr;
    for (const auto& m : methods) {
        if (!m.executed) {
            continue;
        }
        if (first == nullptr) {
            first = &m;
        } else if (m.checksum != first->checksum) {
            return false;
        }
    }
    return true;
}

BenchReport bench_totient_methods(std::uint64_t max_n, Convention c, const BenchLimits& limits,
                                  SieveOptions options)
{
    if (max_n == 0) {
        throw std::domain_error("bench size must be >= 1");
    }
    BenchReport report{max_n, c, {}};

    auto run = [&](std::string name, std::uint64_t limit, auto&& body) {
        BenchMethodResult r;
        r.method = std::move(name);
        if (max_n > limit) {
            r.skip_reason = "max_n exceeds method limit " + std::to_string(limit);
        } else {
            r.executed = true;
            r.seconds = time_seconds([&] { r.checksum = body(); });
        }
        report.methods.push_back(std::move(r));
    };

    // Checksums wrap modulo 2^64 on purpose.
    run("bruteforce-oracle", limits.bruteforce, [&] {
        std::uint64_t sum = value_at_one(c);
        for (std::uint64_t n = 2; n <= max_n; ++n) {
            sum += totient_bruteforce(n);
        }
        return sum;
    });
    run("per-n-factorization", limits.factorization, [&] {
        std::uint64_t sum = 0;
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            sum += totient(n, c);
        }
        return sum;
    });
    run("sieve", limits.sieve, [&] {
        const TotientTable table = totient_sieve(max_n, c, options);
        std::uint64_t sum = 0;
        for (const auto v : table.values()) {
            sum += v;
        }
        return sum;
    });
    return report;
}

} // namespace totient_lab
