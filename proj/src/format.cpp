#include "totient_lab/cli.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>

namespace totient_lab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int digits(std::uint64_t v)
{
    return static_cast<int>(std::to_string(v).size());
}

ordered_json rational_json(const ExactRational& r)
{
    return {{"num", r.numerator()}, {"den", r.denominator()}};
}

void put_optional(std::ostream& os, const std::optional<std::uint64_t>& v)
{
    if (v) {
        os << *v;
    }
}

ordered_json optional_json(const std::optional<std::uint64_t>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

} // namespace

bool CountSummary::agree() const noexcept
{
    std::optional<std::uint64_t> seen;
    for (const auto& v : {by_exclusion, by_totient_sum, by_enumeration}) {
        if (!v) {
            continue;
        }
        if (seen && *seen != *v) {
            return false;
        }
        seen = v;
    }
    if (excluded && by_exclusion && total_unreduced - *excluded != *by_exclusion) {
        return false;
    }
    return true;
}

int exit_code_for(const CountSummary& summary) noexcept
{
    return summary.agree() ? kExitOk : kExitCrossCheck;
}

int exit_code_for(const BenchReport& report) noexcept
{
    return report.checksums_agree() ? kExitOk : kExitCrossCheck;
}

void write_totient(std::ostream& os, std::uint64_t n, Convention c, bool verbose,
                   OutputFormat format)
{
    const Factorization f = factorize(n);
    const std::uint64_t phi = totient(n, c);

    switch (format) {
    case OutputFormat::csv:
        os << "n,phi\n" << n << ',' << phi << '\n';
        return;
    case OutputFormat::json: {
        ordered_json j = {{"n", n}, {"convention", to_string(c)}, {"phi", phi}};
        if (verbose) {
            ordered_json factors = ordered_json::array();
            for (const auto& pp : f.factors()) {
                factors.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
            }
            j["factors"] = std::move(factors);
            j["primes"] = f.distinct_primes();
        }
        os << j.dump() << '\n';
        return;
    }
    case OutputFormat::plain:
        break;
    }

    if (!verbose) {
        os << phi << '\n';
        return;
    }
    os << "n: " << n << '\n';
    os << "factorization: ";
    if (f.factors().empty()) {
        os << "1";
    }
    for (std::size_t i = 0; i < f.factors().size(); ++i) {
        const auto& pp = f.factors()[i];
        os << (i ? " * " : "") << pp.prime;
        if (pp.exponent > 1) {
            os << '^' << pp.exponent;
        }
    }
    os << "\ndistinct primes: ";
    const auto primes = f.distinct_primes();
    if (primes.empty()) {
        os << "(none)";
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        os << (i ? ", " : "") << primes[i];
    }
    os << "\nproduct formula: ";
    if (primes.empty()) {
        os << "value at 1 under the " << to_string(c) << " convention";
    } else {
        os << n;
        for (const auto p : primes) {
            os << " * " << (p - 1) << '/' << p;
        }
    }
    os << "\nphi(" << n << ") = " << phi << " (" << to_string(c) << ")\n";
}

void write_table(std::ostream& os, const TotientTable& table, OutputFormat format)
{
    const auto values = table.values();
    switch (format) {
    case OutputFormat::csv:
        os << "n,phi\n";
        for (std::uint64_t n = 1; n <= table.max_n(); ++n) {
            os << n << ',' << table[n] << '\n';
        }
        return;
    case OutputFormat::json:
        os << '[';
        for (std::uint64_t n = 1; n <= table.max_n(); ++n) {
            os << (n > 1 ? "," : "") << "{\"n\":" << n << ",\"phi\":" << table[n] << '}';
        }
        os << "]\n";
        return;
    case OutputFormat::plain: {
        const int wn = std::max(1, digits(table.max_n()));
        const int wv = std::max(6, digits(*std::max_element(values.begin(), values.end())));
        os << std::setw(wn) << "n" << "  " << std::setw(wv) << "phi(n)" << '\n';
        for (std::uint64_t n = 1; n <= table.max_n(); ++n) {
            os << std::setw(wn) << n << "  " << std::setw(wv) << table[n] << '\n';
        }
        return;
    }
    }
}

void write_cumulative(std::ostream& os, std::span<const CumulativeCountRow> rows,
                      OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        os << "max_denominator,fraction_count\n";
        for (const auto& r : rows) {
            os << r.max_denominator << ',' << r.fraction_count << '\n';
        }
        return;
    case OutputFormat::json: {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            j.push_back({{"max_denominator", r.max_denominator},
                         {"fraction_count", r.fraction_count}});
        }
        os << j.dump() << '\n';
        return;
    }
    case OutputFormat::plain:
        os << "max denom.  fractions\n";
        for (const auto& r : rows) {
            os << std::setw(10) << r.max_denominator << "  " << std::setw(9) << r.fraction_count
               << '\n';
        }
        return;
    }
}

void write_count(std::ostream& os, const CountSummary& s, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        os << "max_denominator,total_unreduced,excluded,count_by_exclusion,"
              "count_by_totient_sum,count_by_enumeration\n";
        os << s.max_denominator << ',' << s.total_unreduced << ',';
        put_optional(os, s.excluded);
        os << ',';
        put_optional(os, s.by_exclusion);
        os << ',';
        put_optional(os, s.by_totient_sum);
        os << ',';
        put_optional(os, s.by_enumeration);
        os << '\n';
        return;
    case OutputFormat::json: {
        const ordered_json j = {{"max_denominator", s.max_denominator},
                                {"total_unreduced", s.total_unreduced},
                                {"excluded", optional_json(s.excluded)},
                                {"count_by_exclusion", optional_json(s.by_exclusion)},
                                {"count_by_totient_sum", optional_json(s.by_totient_sum)},
                                {"count_by_enumeration", optional_json(s.by_enumeration)},
                                {"agree", s.agree()}};
        os << j.dump() << '\n';
        return;
    }
    case OutputFormat::plain:
        break;
    }

    auto line = [&os](std::string_view label, std::uint64_t v) {
        os << std::left << std::setw(22) << label << std::right << v << '\n';
    };
    line("max denominator", s.max_denominator);
    line("total unreduced", s.total_unreduced);
    if (s.excluded) {
        line("excluded", *s.excluded);
    }
    if (s.by_exclusion) {
        line("count (exclusion)", *s.by_exclusion);
    }
    if (s.by_totient_sum) {
        line("count (totient sum)", *s.by_totient_sum);
    }
    if (s.by_enumeration) {
        line("count (enumeration)", *s.by_enumeration);
    }
    const int methods = s.by_exclusion.has_value() + s.by_totient_sum.has_value() +
                        s.by_enumeration.has_value();
    if (methods > 1) {
        os << (s.agree() ? "all methods agree" : "METHODS DISAGREE") << '\n';
    }
}

std::uint64_t write_farey(std::ostream& os, std::uint64_t max_denominator, OutputFormat format)
{
    std::uint64_t count = 0;
    switch (format) {
    case OutputFormat::csv:
        os << "numerator,denominator\n";
        for_each_farey(max_denominator, [&](const ReducedFraction& f) {
            os << f.numerator() << ',' << f.denominator() << '\n';
            ++count;
        });
        break;
    case OutputFormat::json:
        os << "{\"max_denominator\":" << max_denominator << ",\"fractions\":[";
        for_each_farey(max_denominator, [&](const ReducedFraction& f) {
            os << (count ? "," : "") << '[' << f.numerator() << ',' << f.denominator() << ']';
            ++count;
        });
        os << "],\"count\":" << count << "}\n";
        break;
    case OutputFormat::plain:
        for_each_farey(max_denominator, [&](const ReducedFraction& f) {
            os << f.numerator() << '/' << f.denominator() << '\n';
            ++count;
        });
        os << "count: " << count << '\n';
        break;
    }
    return count;
}

void write_series(std::ostream& os, std::span<const std::uint64_t> coefficients,
                  OutputFormat format)
{
    const std::uint64_t max_n = coefficients.size();
    switch (format) {
    case OutputFormat::csv:
        os << "n,phi,phi_over_n\n";
        for (std::uint64_t n = 2; n <= max_n; ++n) {
            const ExactRational r(coefficients[n - 1], n);
            os << n << ',' << coefficients[n - 1] << ',' << r.to_string() << '\n';
        }
        return;
    case OutputFormat::json:
        os << '[';
        for (std::uint64_t n = 2; n <= max_n; ++n) {
            const ExactRational r(coefficients[n - 1], n);
            os << (n > 2 ? "," : "") << "{\"n\":" << n << ",\"phi\":" << coefficients[n - 1]
               << ",\"coefficient\":{\"num\":" << r.numerator() << ",\"den\":" << r.denominator()
               << "}}";
        }
        os << "]\n";
        return;
    case OutputFormat::plain: {
        const int wn = std::max(1, digits(max_n));
        const int wv = std::max(6, digits(max_n));
        os << std::setw(wn) << "n" << "  " << std::setw(wv) << "phi(n)" << "  phi(n)/n\n";
        for (std::uint64_t n = 2; n <= max_n; ++n) {
            const ExactRational r(coefficients[n - 1], n);
            os << std::setw(wn) << n << "  " << std::setw(wv) << coefficients[n - 1] << "  "
               << r.to_string() << '\n';
        }
        return;
    }
    }
}

void write_groups(std::ostream& os, std::span<const CoefficientGroup> groups, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        os << "radical,coefficient,n\n";
        for (const auto& g : groups) {
            for (const auto n : g.members) {
                os << g.radical << ',' << g.coefficient.to_string() << ',' << n << '\n';
            }
        }
        return;
    case OutputFormat::json: {
        ordered_json j = ordered_json::array();
        for (const auto& g : groups) {
            j.push_back({{"radical", g.radical},
                         {"coefficient", rational_json(g.coefficient)},
                         {"members", g.members}});
        }
        os << j.dump() << '\n';
        return;
    }
    case OutputFormat::plain:
        for (const auto& g : groups) {
            os << "radical " << g.radical << "  coefficient " << g.coefficient.to_string()
               << "  members";
            for (const auto n : g.members) {
                os << ' ' << n;
            }
            os << '\n';
        }
        return;
    }
}

void write_bench(std::ostream& os, const BenchReport& report, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        os << "method,status,seconds,checksum\n";
        for (const auto& m : report.methods) {
            os << m.method << ',' << (m.executed ? "executed" : "skipped") << ',';
            if (m.executed) {
                os << std::fixed << std::setprecision(6) << m.seconds << ',' << m.checksum;
            } else {
                os << ',';
            }
            os << '\n';
        }
        return;
    case OutputFormat::json: {
        ordered_json methods = ordered_json::array();
        for (const auto& m : report.methods) {
            ordered_json j = {{"method", m.method}, {"executed", m.executed}};
            if (m.executed) {
                j["seconds"] = m.seconds;
                j["checksum"] = m.checksum;
            } else {
                j["skip_reason"] = m.skip_reason;
            }
            methods.push_back(std::move(j));
        }
        const ordered_json j = {{"max_n", report.max_n},
                                {"convention", to_string(report.convention)},
                                {"checksums_agree", report.checksums_agree()},
                                {"methods", std::move(methods)}};
        os << j.dump() << '\n';
        return;
    }
    case OutputFormat::plain:
        os << "max_n " << report.max_n << " (" << to_string(report.convention)
           << " convention)\n";
        for (const auto& m : report.methods) {
            os << std::left << std::setw(21) << m.method << std::right;
            if (m.executed) {
                os << std::fixed << std::setprecision(6) << std::setw(12) << m.seconds
                   << " s  checksum " << m.checksum << '\n';
            } else {
                os << "skipped (" << m.skip_reason << ")\n";
            }
        }
        os << (report.checksums_agree() ? "checksums agree" : "CHECKSUMS DISAGREE") << '\n';
        return;
    }
}

} // namespace totient_lab::cli
