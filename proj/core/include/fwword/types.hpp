// types.hpp -- domain types shared by the fwword library

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fwword {

/// Periods, lengths and positions are all unsigned 64-bit.
using Length = std::uint64_t;
using Position = std::uint64_t;

/// Letters are integers; rendering them is left to callers.
using Letter = std::uint64_t;

enum class ErrorCode {
    EmptyPeriodSet,
    InvalidPeriod,
    InvalidArgument,
    OutOfRange,
    EmptyGenerator,
    ArithmeticOverflow,
    TooLargeForExhaustive,
    AlphabetTooLargeForDense,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception thrown by every fallible operation in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return _code; }

private:
    ErrorCode _code;
};

/// A non-empty set of positive periods, kept sorted and deduplicated,
/// with its minimum and gcd cached.
class PeriodSet {
public:
    /// Sorts and collapses duplicates. Throws EmptyPeriodSet or
    /// InvalidPeriod (for a zero).
    static PeriodSet from_values(std::vector<std::uint64_t> values);

    std::span<const std::uint64_t> periods() const noexcept { return _periods; }
    std::size_t size() const noexcept { return _periods.size(); }

    /// Smallest period.
    std::uint64_t min() const noexcept { return _periods.front(); }

    /// gcd of all periods.
    std::uint64_t gcd() const noexcept { return _gcd; }

    /// Second-smallest period, or 0 for a singleton.
    std::uint64_t second() const noexcept { return _periods.size() > 1 ? _periods[1] : 0; }

    bool contains(std::uint64_t p) const noexcept;

    friend bool operator==(const PeriodSet&, const PeriodSet&) = default;

private:
    PeriodSet(std::vector<std::uint64_t> sorted, std::uint64_t g)
      : _periods(std::move(sorted)), _gcd(g) {}

    std::vector<std::uint64_t> _periods;
    std::uint64_t _gcd;
};

/// Accepts signed input so that non-positive values can be reported as
/// InvalidPeriod rather than wrapping.
PeriodSet make_period_set(std::span<const std::int64_t> values);
PeriodSet make_period_set(std::initializer_list<std::int64_t> values);

/// A finite word over integer letters.
class LabeledWord {
public:
    LabeledWord() = default;
    explicit LabeledWord(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    LabeledWord(std::initializer_list<Letter> letters) : _letters(letters) {}

    Length size() const noexcept { return _letters.size(); }
    bool empty() const noexcept { return _letters.empty(); }

    Letter operator[](Position i) const { return _letters[i]; }
    Letter at(Position i) const;

    std::span<const Letter> letters() const noexcept { return _letters; }

    auto begin() const noexcept { return _letters.begin(); }
    auto end() const noexcept { return _letters.end(); }

    friend bool operator==(const LabeledWord&, const LabeledWord&) = default;

private:
    std::vector<Letter> _letters;
};

/// Parses a word written as base-36 digits, e.g. "01034010". Intended for
/// tests and small literals.
LabeledWord word_from_digits(std::string_view digits);

/// Partition of positions {0, ..., k-1}; rep[i] is the least element of the
/// class containing i.
class EquivalencePartition {
public:
    EquivalencePartition() = default;
    explicit EquivalencePartition(std::vector<Position> rep) : _rep(std::move(rep)) {}

    Length size() const noexcept { return _rep.size(); }
    Position rep(Position i) const { return _rep[i]; }
    std::span<const Position> reps() const noexcept { return _rep; }

    bool same_class(Position i, Position j) const { return _rep[i] == _rep[j]; }

    /// Number of classes, i.e. the number of fixed points of rep.
    std::uint64_t class_count() const noexcept;

    friend bool operator==(const EquivalencePartition&, const EquivalencePartition&) = default;

private:
    std::vector<Position> _rep;
};

enum class Termination {
    LengthAtMostMin,
    GcdEqualsMin,
};

const char* to_string(Termination t) noexcept;

struct ChainStep {
    PeriodSet periods;
    Length length;

    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// The sequence (Q_0, n_0), (Q_1, n_1), ... of a descent, starting at the
/// caller's (P, n), and the condition that ended it.
struct ReductionChain {
    std::vector<ChainStep> steps;
    Termination termination;
};

/// Returns the first k letters of w. Throws OutOfRange if k > |w|.
LabeledWord pref(const LabeledWord& w, Length k);

/// result[i] = w[i mod |w|] for i < n. Throws EmptyGenerator when w is empty
/// and n > 0.
LabeledWord extend_periodically(const LabeledWord& w, Length n);

} // namespace fwword
