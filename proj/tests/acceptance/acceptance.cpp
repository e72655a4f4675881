// acceptance.cpp -- exit criteria for the fwword library and CLI. Prints one
// PASS/FAIL line per criterion; exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fwword/fwword.hpp"

using namespace fwword;

namespace {

using clock_type = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;
};

double seconds_since(clock_type::time_point start)
{
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

/// Every P in {1..max_value} with 1 <= |P| <= max_size.
std::vector<PeriodSet> period_sets(std::uint64_t max_value, std::size_t max_size)
{
    std::vector<PeriodSet> out;
    std::vector<std::uint64_t> current;
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t next) {
        for (auto v = next; v <= max_value; ++v) {
            current.push_back(v);
            out.push_back(PeriodSet::from_values(current));
            if (current.size() < max_size)
                extend(v + 1);
            current.pop_back();
        }
    };
    extend(1);
    return out;
}

std::string show(const PeriodSet& p)
{
    return cli::format_periods(p);
}

const std::vector<PeriodSet>& grid()
{
    static const auto sets = period_sets(12, 3);
    return sets;
}
constexpr Length grid_max_n = 40;

Verdict worked_example()
{
    auto start = clock_type::now();
    auto p = make_period_set({5, 7});
    auto fast = fw_fast(p, 8);
    auto oracle = fw_oracle(p, 8);
    auto chain = reduction_chain(p, 8);
    auto rendered = cli::render_chain(chain);
    auto elapsed = seconds_since(start);

    Verdict v;
    auto expected = word_from_digits("01034010");
    v.pass = fast == expected && oracle == expected && chain.steps.size() == 3 &&
             chain.steps[1].periods == make_period_set({2, 5}) && chain.steps[1].length == 3 &&
             chain.steps[2].periods == make_period_set({2, 3}) && chain.steps[2].length == 1 &&
             rendered.find("Q1={2,5} n1=3\nQ2={2,3} n2=1\n") != std::string::npos &&
             elapsed < 1e-3;
    std::ostringstream d;
    d << "fw_fast=" << cli::render_word(fast, p, cli::OutputFormat::dense).substr(0, 8)
      << " fw_oracle=" << cli::render_word(oracle, p, cli::OutputFormat::dense).substr(0, 8)
      << " chain steps=" << chain.steps.size() << " time=" << elapsed * 1e3 << "ms (<1ms)";
    v.detail = d.str();
    return v;
}

Verdict oracle_equivalence()
{
    auto start = clock_type::now();
    std::uint64_t words = 0, letters = 0, mismatches = 0;
    std::string first;
    for (const auto& p : grid())
        for (Length n = 0; n <= grid_max_n; ++n) {
            ++words;
            auto oracle = fw_oracle(p, n);
            if (fw_fast(p, n) != oracle) {
                if (!mismatches++)
                    first = "word P=" + show(p) + " n=" + std::to_string(n);
            }
            for (Position i = 0; i < n; ++i) {
                ++letters;
                if (letter_at(p, n, i) != oracle[i] && !mismatches++)
                    first = "letter P=" + show(p) + " n=" + std::to_string(n) +
                            " i=" + std::to_string(i);
            }
        }
    auto elapsed = seconds_since(start);
    Verdict v{mismatches == 0 && elapsed < 30.0, ""};
    v.detail = std::to_string(grid().size()) + " sets, " + std::to_string(words) + " words, " +
               std::to_string(letters) + " letters, mismatches=" + std::to_string(mismatches) +
               (first.empty() ? "" : " first: " + first) + " time=" + std::to_string(elapsed) +
               "s (<30s)";
    return v;
}

Verdict prefix_property()
{
    std::uint64_t checks = 0, failures = 0;
    std::string first;
    for (const auto& p : grid()) {
        auto reduced = reduce(p);
        for (Length k = 0; k <= grid_max_n; ++k) {
            ++checks;
            if (fw_oracle(reduced, k) != pref(fw_oracle(p, k + p.min()), k) && !failures++)
                first = "P=" + show(p) + " k=" + std::to_string(k);
        }
    }
    return {failures == 0, std::to_string(checks) + " checks, failures=" + std::to_string(failures) +
                               (first.empty() ? "" : " first: " + first)};
}

Verdict singleton_classes()
{
    std::uint64_t checks = 0, failures = 0;
    std::string first;
    for (const auto& p : grid()) {
        auto m = p.min();
        for (Length n = m + 1; n <= grid_max_n; ++n) {
            auto w = fw_oracle(p, n);
            for (Position i = n - m; i < m; ++i) {
                ++checks;
                if ((w[i] != i || std::count(w.begin(), w.end(), i) != 1) && !failures++)
                    first = "P=" + show(p) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " positions, failures=" +
                               std::to_string(failures) + (first.empty() ? "" : " first: " + first)};
}

Verdict two_period_law()
{
    auto start = clock_type::now();
    std::uint64_t pairs = 0, failures = 0;
    std::string first;
    for (std::uint64_t p = 1; p <= 30; ++p)
        for (std::uint64_t q = p + 1; q <= 30; ++q) {
            auto g = std::gcd(p, q);
            if (g >= p)
                continue;
            ++pairs;
            auto periods = PeriodSet::from_values({p, q});
            auto expected = p + q - g - 1;
            auto got = extremal_length(periods).value;
            bool ok = got && *got == expected && !is_trivial(fw_oracle(periods, expected), periods);
            for (Length n = expected + 1; ok && n <= expected + 2 * p; ++n)
                ok = is_trivial(fw_oracle(periods, n), periods);
            if (!ok && !failures++)
                first = "P=" + show(periods);
        }
    auto elapsed = seconds_since(start);
    return {failures == 0 && elapsed < 60.0,
            std::to_string(pairs) + " pairs, failures=" + std::to_string(failures) +
                (first.empty() ? "" : " first: " + first) + " time=" + std::to_string(elapsed) +
                "s (<60s)"};
}

Verdict palindromes()
{
    std::uint64_t sets = 0, failures = 0, gcd_one = 0, gcd_one_failures = 0, renamed_failures = 0;
    std::string examples;
    for (const auto& p : grid()) {
        if (p.gcd() >= p.min())
            continue;
        ++sets;
        auto w = fw_fast(p, *extremal_length(p).value);
        bool literal = is_palindrome(w);
        if (p.gcd() == 1) {
            ++gcd_one;
            gcd_one_failures += !literal;
        }
        if (canonicalize(reversed(w)) != w)
            ++renamed_failures;
        if (!literal) {
            if (failures++ < 6)
                examples += " " + show(p);
        }
    }
    std::ostringstream d;
    d << sets << " sets, literal failures=" << failures;
    if (failures)
        d << " (" << examples.substr(1) << ")";
    d << "; gcd=1 subset: " << gcd_one << " sets, failures=" << gcd_one_failures
      << "; up to renaming: failures=" << renamed_failures;
    return {failures == 0, d.str()};
}

Verdict maximality()
{
    auto start = clock_type::now();
    std::uint64_t cases = 0, failures = 0, candidates = 0;
    std::string first;
    for (const auto& p : period_sets(8, 8))
        for (Length n = 0; n <= 9; ++n) {
            ++cases;
            auto result = max_alphabet_exhaustive(p, n);
            candidates += result.candidates;
            bool ok = result.max_alphabet == class_count(p, n) && result.maximizers.size() == 1 &&
                      result.maximizers.front() == fw_oracle(p, n);
            if (!ok && !failures++)
                first = "P=" + show(p) + " n=" + std::to_string(n);
        }
    auto elapsed = seconds_since(start);
    return {failures == 0 && elapsed < 120.0,
            std::to_string(cases) + " cases, " + std::to_string(candidates) +
                " partitions, failures=" + std::to_string(failures) +
                (first.empty() ? "" : " first: " + first) + " time=" + std::to_string(elapsed) +
                "s (<120s)"};
}

Verdict batching()
{
    std::uint64_t exhaustions = 0, grid_checks = 0, failures = 0;
    std::string first;
    auto check_exhaustion = [&](const PeriodSet& p) {
        ++exhaustions;
        auto batched = reduce_to_exhaustion(p);
        auto literal = stepwise::reduce_to_exhaustion(p);
        if ((batched.periods != literal.periods || batched.steps != literal.steps) && !failures++)
            first = "exhaustion P=" + show(p);
    };
    for (const auto& p : period_sets(60, 3))
        check_exhaustion(p);
    std::mt19937_64 rng(60);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::uint64_t> raw(4 + rng() % 5);
        for (auto& v : raw)
            v = 1 + rng() % 60;
        check_exhaustion(PeriodSet::from_values(raw));
    }

    for (const auto& p : grid()) {
        ++grid_checks;
        if (extremal_length(p) != stepwise::extremal_length(p) && !failures++)
            first = "extremal P=" + show(p);
        for (Length n = 1; n <= grid_max_n; ++n)
            for (Position i = 0; i < n; ++i) {
                ++grid_checks;
                if (letter_at(p, n, i) != stepwise::letter_at(p, n, i) && !failures++)
                    first = "letter P=" + show(p) + " n=" + std::to_string(n) +
                            " i=" + std::to_string(i);
            }
    }
    return {failures == 0, std::to_string(exhaustions) + " exhaustions, " +
                               std::to_string(grid_checks) + " grid checks, failures=" +
                               std::to_string(failures) + (first.empty() ? "" : " first: " + first)};
}

Verdict performance()
{
    auto median_of = [](const std::vector<cli::BenchRow>& rows, const std::string& engine) {
        for (const auto& row : rows)
            if (row.engine == engine && row.median_ns)
                return static_cast<double>(*row.median_ns) * 1e-6;
        return 1e18;
    };
    auto wide = PeriodSet::from_values({3, 1000000007});
    auto at_scale = cli::run_bench(wide, 1000000000000ULL, 5);
    auto letter_ms = median_of(at_scale, "letter_at");
    auto extremal_ms = median_of(at_scale, "extremal_length");

    auto narrow = make_period_set({5, 7});
    auto word_rows = cli::run_bench(narrow, 1000000, 5);
    auto word_ms = median_of(word_rows, "fast_word");
    auto wide_word_ms = median_of(cli::run_bench(wide, 1000000, 5), "fast_word");

    std::ostringstream d;
    d << "letter_at={3,1e9+7},1e12: " << letter_ms << "ms (<10ms); extremal_length: " << extremal_ms
      << "ms (<10ms); fw_fast {5,7} n=1e6: " << word_ms << "ms, {3,1e9+7} n=1e6: " << wide_word_ms
      << "ms (<100ms)";
    return {letter_ms < 10.0 && extremal_ms < 10.0 && word_ms < 100.0 && wide_word_ms < 100.0,
            d.str()};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "worked example {5,7}, n=8", worked_example},
        {2, "fast = oracle on the grid", oracle_equivalence},
        {3, "reduced-set prefix property", prefix_property},
        {4, "singleton classes near the middle", singleton_classes},
        {5, "two-period extremal law", two_period_law},
        {6, "extremal word is a palindrome", palindromes},
        {7, "maximality and uniqueness (exhaustive)", maximality},
        {8, "batched = stepwise", batching},
        {9, "performance", performance},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = clock_type::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("[%s] %d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                    v.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
                std::size(criteria));
    return failed ? 1 : 0;
}
