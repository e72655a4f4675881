#include "fwword/properties.hpp"

#include <algorithm>
#include <unordered_map>

namespace fwword {

bool has_period(const LabeledWord& w, std::uint64_t p)
{
    if (p == 0)
        throw Error(ErrorCode::InvalidPeriod, "period must be positive");
    if (p >= w.size())
        return true;
    for (Position i = 0; i + p < w.size(); ++i)
        if (w[i] != w[i + p])
            return false;
    return true;
}

bool is_trivial(const LabeledWord& w, const PeriodSet& periods)
{
    return has_period(w, periods.gcd());
}

LabeledWord canonicalize(const LabeledWord& w)
{
    std::unordered_map<Letter, Letter> first_seen;
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Position i = 0; i < w.size(); ++i) {
        auto [it, inserted] = first_seen.try_emplace(w[i], i);
        out.push_back(it->second);
    }
    return LabeledWord(std::move(out));
}

bool is_palindrome(const LabeledWord& w)
{
    return std::equal(w.begin(), w.begin() + w.size() / 2, std::make_reverse_iterator(w.end()));
}

LabeledWord reversed(const LabeledWord& w)
{
    return LabeledWord(std::vector<Letter>(std::make_reverse_iterator(w.end()),
                                           std::make_reverse_iterator(w.begin())));
}

std::set<Letter> alphabet(const LabeledWord& w)
{
    return {w.begin(), w.end()};
}

} // namespace fwword
