#include "totient_lab/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <locale>

namespace totient_lab::cli {

namespace {

OutputFormat parse_format(const std::string& name)
{
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    return OutputFormat::plain;
}

// Restores the stream's locale on scope exit.
class ClassicLocale {
public:
    explicit ClassicLocale(std::ostream& os) : os_(os), saved_(os.imbue(std::locale::classic())) {}
    ~ClassicLocale() { os_.imbue(saved_); }
    ClassicLocale(const ClassicLocale&) = delete;
    ClassicLocale& operator=(const ClassicLocale&) = delete;

private:
    std::ostream& os_;
    std::locale saved_;
};

} // namespace

std::uint64_t parse_decimal(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("expected a decimal integer, got an empty string");
    }
    std::uint64_t value = 0;
    for (const char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("expected a decimal integer, got '" + std::string(text) +
                                        "'");
        }
        const auto digit = static_cast<std::uint64_t>(ch - '0');
        if (__builtin_mul_overflow(value, 10u, &value) ||
            __builtin_add_overflow(value, digit, &value)) {
            throw std::overflow_error("'" + std::string(text) + "' does not fit in 64 bits");
        }
    }
    return value;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    const ClassicLocale locale_guard(out);

    CLI::App app{"Euler's totient: tables, reduced-fraction counts and series coefficients",
                 "totient-lab"};
    app.require_subcommand(1);

    std::string convention_name = "modern";
    std::string format_name = "plain";
    unsigned threads = 1;
    app.add_option("--convention", convention_name, "Value at n = 1: modern (1) or euler (0)")
        ->check(CLI::IsMember({"modern", "euler"}))
        ->capture_default_str();
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for sieve-backed commands")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    std::string n_arg;
    bool verbose = false;
    auto* totient_cmd = app.add_subcommand("totient", "Totient of one integer");
    totient_cmd->add_option("n", n_arg, "Positive integer")->required();
    totient_cmd->add_flag("-v,--verbose", verbose, "Show factorization and product formula");

    auto* table_cmd = app.add_subcommand("table", "Totient table for 1..max_n");
    table_cmd->add_option("max_n", n_arg, "Table size")->required();

    std::vector<std::string> checkpoint_args;
    auto* cumulative_cmd =
        app.add_subcommand("cumulative", "Reduced-fraction counts at ascending max denominators");
    cumulative_cmd->add_option("checkpoints", checkpoint_args, "Ascending max denominators")
        ->required();

    std::string method = "exclusion";
    auto* count_cmd = app.add_subcommand("count", "Count reduced fractions in (0,1)");
    count_cmd->add_option("D", n_arg, "Max denominator")->required();
    count_cmd->add_option("--method", method, "Counting method")
        ->check(CLI::IsMember({"sum", "exclusion", "enumerate", "all"}))
        ->capture_default_str();

    auto* farey_cmd = app.add_subcommand("farey", "Farey sequence of order D, excluding 0/1 and 1/1");
    farey_cmd->add_option("D", n_arg, "Max denominator")->required();

    bool grouped = false;
    auto* series_cmd = app.add_subcommand("series", "Coefficients phi(n) and phi(n)/n");
    series_cmd->add_option("max_n", n_arg, "Last exponent")->required();
    series_cmd->add_flag("--grouped", grouped, "Group exponents sharing a coefficient");

    auto* bench_cmd = app.add_subcommand("bench", "Time and cross-check totient methods");
    bench_cmd->add_option("max_n", n_arg, "Range size")->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    const Convention convention =
        convention_name == "euler" ? Convention::euler : Convention::modern;
    const OutputFormat format = parse_format(format_name);
    const SieveOptions sieve{threads};

    try {
        if (*totient_cmd) {
            write_totient(out, parse_decimal(n_arg), convention, verbose, format);
        } else if (*table_cmd) {
            write_table(out, totient_sieve(parse_decimal(n_arg), convention, sieve), format);
        } else if (*cumulative_cmd) {
            std::vector<std::uint64_t> checkpoints;
            for (const auto& a : checkpoint_args) {
                checkpoints.push_back(parse_decimal(a));
            }
            write_cumulative(out, cumulative_counts(checkpoints, sieve), format);
        } else if (*count_cmd) {
            const std::uint64_t d = parse_decimal(n_arg);
            CountSummary summary;
            if (method == "sum") {
                summary.by_totient_sum = count_by_totient_sum(d, sieve);
            } else if (method == "enumerate") {
                summary.by_enumeration = count_by_enumeration(d);
            } else {
                const FareyCountReport report = count_by_exclusion(d, method == "all", sieve);
                summary.excluded = report.excluded;
                summary.by_exclusion = report.count_by_exclusion;
                if (method == "all") {
                    summary.by_totient_sum = report.count_by_totient_sum;
                    summary.by_enumeration = report.count_by_enumeration;
                }
            }
            summary.max_denominator = d;
            summary.total_unreduced = d % 2 == 0 ? d / 2 * (d - 1) : (d - 1) / 2 * d;
            write_count(out, summary, format);
            if (const int code = exit_code_for(summary); code != kExitOk) {
                err << "error: counting methods disagree for D = " << d << '\n';
                return code;
            }
        } else if (*farey_cmd) {
            write_farey(out, parse_decimal(n_arg), format);
        } else if (*series_cmd) {
            const std::uint64_t max_n = parse_decimal(n_arg);
            if (grouped) {
                write_groups(out, group_by_coefficient(max_n), format);
            } else {
                write_series(out, series_coefficients(max_n, sieve), format);
            }
        } else if (*bench_cmd) {
            const BenchReport report =
                bench_totient_methods(parse_decimal(n_arg), convention, {}, sieve);
            write_bench(out, report, format);
            if (const int code = exit_code_for(report); code != kExitOk) {
                err << "error: bench checksums disagree\n";
                return code;
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace totient_lab::cli
