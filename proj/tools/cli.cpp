#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace fwword::cli {

namespace {

using nlohmann::json;

std::vector<std::uint64_t> as_vector(const PeriodSet& periods)
{
    auto span = periods.periods();
    return {span.begin(), span.end()};
}

} // namespace

PeriodSet parse_periods(std::string_view text)
{
    if (text.empty())
        throw Error(ErrorCode::EmptyPeriodSet, "no periods given");
    std::vector<std::uint64_t> values;
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorCode::InvalidPeriod, "'" + std::string(token) + "' is not a positive integer");
        if (value == 0)
            throw Error(ErrorCode::InvalidPeriod, "period 0 is not positive");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return PeriodSet::from_values(std::move(values));
}

std::string format_periods(const PeriodSet& periods)
{
    std::string out = "{";
    for (std::size_t i = 0; i < periods.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(periods.periods()[i]);
    }
    return out + "}";
}

std::string render_word(const LabeledWord& w, const PeriodSet& periods, OutputFormat format)
{
    std::string out;
    switch (format) {
    case OutputFormat::ints:
        for (Position i = 0; i < w.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(w[i]);
        }
        break;
    case OutputFormat::dense:
        out.reserve(w.size());
        for (auto letter : w) {
            if (letter >= 36)
                throw Error(ErrorCode::AlphabetTooLargeForDense,
                            "letter " + std::to_string(letter) + " has no base-36 digit");
            out += "0123456789abcdefghijklmnopqrstuvwxyz"[letter];
        }
        break;
    case OutputFormat::json: {
        json doc;
        doc["periods"] = as_vector(periods);
        doc["length"] = w.size();
        doc["letters"] = std::vector<Letter>(w.begin(), w.end());
        doc["alphabet_size"] = alphabet(w).size();
        doc["trivial"] = is_trivial(w, periods);
        out = doc.dump();
        break;
    }
    }
    out += '\n';
    return out;
}

std::string render_chain(const ReductionChain& chain)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < chain.steps.size(); ++i)
        out << 'Q' << i << '=' << format_periods(chain.steps[i].periods) << " n" << i << '='
            << chain.steps[i].length << '\n';
    out << "termination: " << to_string(chain.termination) << '\n';
    return out.str();
}

namespace {

std::string describe(const PeriodSet& periods, Length n)
{
    return "P=" + format_periods(periods) + " n=" + std::to_string(n);
}

/// Every subset of {1..max_value} with 1..max_size elements, in
/// lexicographic order.
void for_each_period_set(std::uint64_t max_value, std::size_t max_size,
                         const std::function<bool(const PeriodSet&)>& visit)
{
    std::vector<std::uint64_t> current;
    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t next) {
        for (auto v = next; v <= max_value; ++v) {
            current.push_back(v);
            if (!visit(PeriodSet::from_values(current)))
                return false;
            if (current.size() < max_size && !extend(v + 1))
                return false;
            current.pop_back();
        }
        return true;
    };
    extend(1);
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& options)
{
    SelftestReport report;
    auto fail = [&](std::string message) {
        report.first_failure = std::move(message);
        return false;
    };

    for_each_period_set(options.max_period, options.max_set_size, [&](const PeriodSet& periods) {
        ++report.period_sets;
        auto m = periods.min();
        auto reduced = reduce(periods);
        for (Length n = 0; n <= options.max_n; ++n) {
            ++report.cases;
            auto oracle = fw_oracle(periods, n);
            auto fast = fw_fast(periods, n);
            if (fast != oracle) {
                for (Position i = 0; i < n; ++i)
                    if (fast[i] != oracle[i])
                        return fail("fw_fast != fw_oracle at " + describe(periods, n) +
                                    " position=" + std::to_string(i));
            }
            for (Position i = 0; i < n; ++i) {
                ++report.letter_checks;
                if (letter_at(periods, n, i) != oracle[i] ||
                    stepwise::letter_at(periods, n, i) != oracle[i])
                    return fail("letter_at mismatch at " + describe(periods, n) +
                                " position=" + std::to_string(i));
            }

            ++report.prefix_checks;
            if (fw_oracle(reduced, n) != pref(fw_oracle(periods, n + m), n))
                return fail("reduced word is not a prefix at " + describe(periods, n + m) +
                            " k=" + std::to_string(n));

            if (n > m) {
                for (Position i = n - m; i < m; ++i) {
                    ++report.singleton_checks;
                    if (oracle[i] != i || std::count(oracle.begin(), oracle.end(), i) != 1)
                        return fail("position is not a singleton class at " +
                                    describe(periods, n) + " position=" + std::to_string(i));
                }
            }
        }

        if (periods.gcd() < m) {
            ++report.extremal_checks;
            auto batched = extremal_length(periods);
            if (batched != stepwise::extremal_length(periods) || !batched.value)
                return fail("batched and stepwise extremal lengths differ for P=" +
                            format_periods(periods));
            auto extremal = *batched.value;
            auto w = fw_fast(periods, extremal);
            if (is_trivial(w, periods))
                return fail("extremal word is trivial at " + describe(periods, extremal));
            for (Length j = 1; j <= 2 * m; ++j)
                if (!is_trivial(fw_fast(periods, extremal + j), periods))
                    return fail("non-trivial word beyond the extremal length at " +
                                describe(periods, extremal + j));
            // With gcd > 1 reversal permutes the residue classes, so only
            // the gcd = 1 case is a literal palindrome.
            bool palindrome = periods.gcd() == 1 ? is_palindrome(w)
                                                 : canonicalize(reversed(w)) == w;
            if (!palindrome)
                return fail("extremal word is not a palindrome at " + describe(periods, extremal));
        }
        return true;
    });
    return report;
}

std::vector<BenchRow> run_bench(const PeriodSet& periods, Length length, unsigned repetitions,
                                Length guard)
{
    using clock = std::chrono::steady_clock;
    volatile std::uint64_t sink = 0;

    auto time = [&](std::string engine, auto&& body) {
        std::vector<std::uint64_t> samples;
        samples.reserve(repetitions);
        for (unsigned r = 0; r < repetitions; ++r) {
            auto start = clock::now();
            sink = sink + body();
            auto stop = clock::now();
            samples.push_back(static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
        }
        BenchRow row{std::move(engine), std::nullopt, samples.size(), ""};
        if (!samples.empty()) {
            std::sort(samples.begin(), samples.end());
            row.median_ns = samples[samples.size() / 2];
        }
        return row;
    };
    auto skipped = [](std::string engine, std::string why) {
        return BenchRow{std::move(engine), std::nullopt, 0, "skipped (" + std::move(why) + ")"};
    };

    std::vector<BenchRow> rows;
    if (length <= guard) {
        rows.push_back(time("fast_word", [&] { return fw_fast(periods, length).size(); }));
        rows.push_back(time("oracle_word", [&] { return fw_oracle(periods, length).size(); }));
    } else {
        rows.push_back(skipped("fast_word", "guard"));
        rows.push_back(skipped("oracle_word", "guard"));
    }
    if (length > 0)
        rows.push_back(time("letter_at", [&] { return letter_at(periods, length, length - 1); }));
    else
        rows.push_back(skipped("letter_at", "empty word"));
    rows.push_back(time("extremal_length",
                        [&] { return extremal_length(periods).value.value_or(0); }));
    return rows;
}

namespace {

std::string render_bench(const PeriodSet& periods, Length length, unsigned repetitions,
                         const std::vector<BenchRow>& rows, bool as_json)
{
    if (as_json) {
        json doc;
        doc["periods"] = as_vector(periods);
        doc["length"] = length;
        doc["repetitions"] = repetitions;
        doc["rows"] = json::array();
        for (const auto& row : rows) {
            json entry;
            entry["engine"] = row.engine;
            entry["median_ns"] = row.median_ns ? json(*row.median_ns) : json(nullptr);
            entry["runs"] = row.runs;
            if (!row.note.empty())
                entry["note"] = row.note;
            doc["rows"].push_back(std::move(entry));
        }
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    out << "periods=" << format_periods(periods) << " length=" << length
        << " repetitions=" << repetitions << '\n';
    out << std::left << std::setw(18) << "engine" << std::setw(18) << "median_ns" << "runs\n";
    for (const auto& row : rows) {
        out << std::setw(18) << row.engine << std::setw(18)
            << (row.median_ns ? std::to_string(*row.median_ns) : row.note) << row.runs << '\n';
    }
    return out.str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Words with a prescribed set of periods and the richest alphabet", "fwword"};
    app.require_subcommand(1);

    std::string periods_text;
    Length length = 0;
    Position index = 0;
    std::string format_text = "ints";
    std::string engine = "fast";

    const std::map<std::string, OutputFormat> formats{
        {"ints", OutputFormat::ints}, {"dense", OutputFormat::dense}, {"json", OutputFormat::json}};

    auto* word = app.add_subcommand("word", "Print FW(P, n)");
    word->add_option("--periods", periods_text, "Comma-separated periods, e.g. 5,7")->required();
    word->add_option("--length", length, "Word length n")->required();
    word->add_option("--format", format_text, "ints | dense | json")
        ->check(CLI::IsMember({"ints", "dense", "json"}));
    word->add_option("--engine", engine, "fast | oracle")->check(CLI::IsMember({"fast", "oracle"}));

    auto* at = app.add_subcommand("at", "Print the letter of FW(P, n) at one position");
    at->add_option("--periods", periods_text)->required();
    at->add_option("--length", length)->required();
    at->add_option("--index", index)->required();

    auto* extremal = app.add_subcommand("extremal", "Print the extremal non-trivial length, or none");
    extremal->add_option("--periods", periods_text)->required();

    std::uint64_t max_steps = 1'000'000;
    auto* chain = app.add_subcommand("chain", "Print the reduction chain of (P, n)");
    chain->add_option("--periods", periods_text)->required();
    chain->add_option("--length", length)->required();
    chain->add_option("--max-steps", max_steps, "Refuse chains longer than this");

    SelftestOptions selftest_options;
    auto* selftest = app.add_subcommand("selftest", "Cross-check the fast construction against the oracle");
    selftest->add_option("--max-period", selftest_options.max_period);
    selftest->add_option("--max-n", selftest_options.max_n);
    selftest->add_option("--max-size", selftest_options.max_set_size, "Largest |P| on the grid");

    unsigned repetitions = 5;
    Length guard = default_bench_guard;
    std::string bench_format = "text";
    auto* bench = app.add_subcommand("bench", "Time the fast and oracle engines");
    bench->add_option("--periods", periods_text)->required();
    bench->add_option("--length", length)->required();
    bench->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);
    bench->add_option("--guard", guard, "Largest length the word builders will materialize");
    bench->add_option("--format", bench_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*word) {
            auto periods = parse_periods(periods_text);
            auto w = engine == "oracle" ? fw_oracle(periods, length) : fw_fast(periods, length);
            out << render_word(w, periods, formats.at(format_text));
        } else if (*at) {
            auto periods = parse_periods(periods_text);
            out << letter_at(periods, length, index) << '\n';
        } else if (*extremal) {
            auto result = extremal_length(parse_periods(periods_text));
            if (result.value)
                out << *result.value << '\n';
            else
                out << "none\n";
        } else if (*chain) {
            auto periods = parse_periods(periods_text);
            auto steps = reduction_chain_length(periods, length);
            if (steps >= max_steps) {
                err << "error: the chain has " << steps << " reduction steps, more than --max-steps "
                    << max_steps << '\n';
                return exit_usage;
            }
            out << render_chain(reduction_chain(periods, length));
        } else if (*selftest) {
            auto report = run_selftest(selftest_options);
            out << "period sets: " << report.period_sets << '\n'
                << "cases: " << report.cases << '\n'
                << "letter checks: " << report.letter_checks << '\n'
                << "prefix checks: " << report.prefix_checks << '\n'
                << "singleton checks: " << report.singleton_checks << '\n'
                << "extremal checks: " << report.extremal_checks << '\n';
            if (!report.passed()) {
                out << "FAIL: " << *report.first_failure << '\n';
                return exit_check_failed;
            }
            out << "OK\n";
        } else if (*bench) {
            auto periods = parse_periods(periods_text);
            auto rows = run_bench(periods, length, repetitions, guard);
            out << render_bench(periods, length, repetitions, rows, bench_format == "json");
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace fwword::cli
