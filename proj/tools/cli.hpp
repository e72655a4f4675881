// cli.hpp -- command implementations behind the fwword executable

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwword/fwword.hpp"

namespace fwword::cli {

/// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

enum class OutputFormat { ints, dense, json };

/// Comma-separated decimal periods without spaces, e.g. "5,7". Duplicates
/// collapse. Throws fwword::Error (InvalidPeriod / EmptyPeriodSet) on bad
/// input.
PeriodSet parse_periods(std::string_view text);

/// Renders a word followed by a single '\n'. Dense mode uses 0-9a-z and
/// throws AlphabetTooLargeForDense for a letter >= 36.
std::string render_word(const LabeledWord& w, const PeriodSet& periods, OutputFormat format);

/// One line "Qi={...} ni=<k>" per step, then "termination: <tag>".
std::string render_chain(const ReductionChain& chain);

std::string format_periods(const PeriodSet& periods);

struct SelftestOptions {
    std::uint64_t max_period = 12;
    Length max_n = 40;
    std::size_t max_set_size = 3;
};

struct SelftestReport {
    std::uint64_t period_sets = 0;
    std::uint64_t cases = 0;          // (P, n) pairs
    std::uint64_t letter_checks = 0;  // positions compared via letter_at
    std::uint64_t prefix_checks = 0;
    std::uint64_t singleton_checks = 0;
    std::uint64_t extremal_checks = 0;
    std::optional<std::string> first_failure;

    bool passed() const { return !first_failure; }
};

/// Runs the fast-versus-oracle grid over every P in {1..max_period} with
/// 1 <= |P| <= max_set_size and every n <= max_n. Stops at the first
/// counterexample.
SelftestReport run_selftest(const SelftestOptions& options);

inline constexpr Length default_bench_guard = 100'000'000;

struct BenchRow {
    std::string engine;
    std::optional<std::uint64_t> median_ns;  // absent when skipped
    std::uint64_t runs = 0;
    std::string note;
};

/// Times fw_fast, fw_oracle, letter_at and extremal_length. Materializing
/// legs are skipped when length exceeds guard.
std::vector<BenchRow> run_bench(const PeriodSet& periods, Length length, unsigned repetitions,
                                Length guard = default_bench_guard);

/// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fwword::cli
