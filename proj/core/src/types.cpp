#include "fwword/types.hpp"

#include <algorithm>
#include <numeric>

namespace fwword {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyPeriodSet: return "EmptyPeriodSet";
    case ErrorCode::InvalidPeriod: return "InvalidPeriod";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyGenerator: return "EmptyGenerator";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::AlphabetTooLargeForDense: return "AlphabetTooLargeForDense";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what), _code(code)
{
}

PeriodSet PeriodSet::from_values(std::vector<std::uint64_t> values)
{
    if (values.empty())
        throw Error(ErrorCode::EmptyPeriodSet, "a period set needs at least one period");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front() == 0)
        throw Error(ErrorCode::InvalidPeriod, "periods must be positive");
    std::uint64_t g = 0;
    for (auto p : values)
        g = std::gcd(g, p);
    return PeriodSet(std::move(values), g);
}

bool PeriodSet::contains(std::uint64_t p) const noexcept
{
    return std::binary_search(_periods.begin(), _periods.end(), p);
}

PeriodSet make_period_set(std::span<const std::int64_t> values)
{
    std::vector<std::uint64_t> out;
    out.reserve(values.size());
    for (auto v : values) {
        if (v < 1)
            throw Error(ErrorCode::InvalidPeriod,
                        "period " + std::to_string(v) + " is not positive");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return PeriodSet::from_values(std::move(out));
}

PeriodSet make_period_set(std::initializer_list<std::int64_t> values)
{
    return make_period_set(std::span<const std::int64_t>(values.begin(), values.size()));
}

Letter LabeledWord::at(Position i) const
{
    if (i >= _letters.size())
        throw Error(ErrorCode::OutOfRange, "position " + std::to_string(i) +
                                               " outside word of length " +
                                               std::to_string(_letters.size()));
    return _letters[i];
}

LabeledWord word_from_digits(std::string_view digits)
{
    std::vector<Letter> letters;
    letters.reserve(digits.size());
    for (char c : digits) {
        if (c >= '0' && c <= '9')
            letters.push_back(static_cast<Letter>(c - '0'));
        else if (c >= 'a' && c <= 'z')
            letters.push_back(static_cast<Letter>(c - 'a' + 10));
        else
            throw Error(ErrorCode::InvalidArgument,
                        std::string("not a base-36 digit: '") + c + "'");
    }
    return LabeledWord(std::move(letters));
}

std::uint64_t EquivalencePartition::class_count() const noexcept
{
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < _rep.size(); ++i)
        if (_rep[i] == i)
            ++count;
    return count;
}

const char* to_string(Termination t) noexcept
{
    switch (t) {
    case Termination::LengthAtMostMin: return "LengthAtMostMin";
    case Termination::GcdEqualsMin: return "GcdEqualsMin";
    }
    return "Unknown";
}

LabeledWord pref(const LabeledWord& w, Length k)
{
    if (k > w.size())
        throw Error(ErrorCode::OutOfRange, "prefix length " + std::to_string(k) +
                                               " exceeds word length " +
                                               std::to_string(w.size()));
    auto letters = w.letters();
    return LabeledWord(std::vector<Letter>(letters.begin(), letters.begin() + k));
}

LabeledWord extend_periodically(const LabeledWord& w, Length n)
{
    if (n == 0)
        return {};
    if (w.empty())
        throw Error(ErrorCode::EmptyGenerator, "cannot extend the empty word");
    std::vector<Letter> out;
    out.reserve(n);
    auto gen = w.letters();
    while (out.size() < n) {
        auto take = std::min<Length>(gen.size(), n - out.size());
        out.insert(out.end(), gen.begin(), gen.begin() + take);
    }
    return LabeledWord(std::move(out));
}

} // namespace fwword
