#include "fwword/oracle.hpp"

#include <limits>
#include <numeric>

#include "fwword/properties.hpp"

namespace fwword {

UnionFind::UnionFind(std::size_t size) : _parent(size), _size(size, 1)
{
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) noexcept
{
    while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x = _parent[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) noexcept
{
    x = find(x);
    y = find(y);
    if (x == y)
        return false;
    if (_size[x] < _size[y])
        std::swap(x, y);
    _parent[y] = x;
    _size[x] += _size[y];
    return true;
}

EquivalencePartition build_partition(const PeriodSet& periods, Length k)
{
    UnionFind uf(k);
    for (auto p : periods.periods()) {
        if (p >= k)
            break;
        for (Position i = 0; i + p < k; ++i)
            uf.unite(i, i + p);
    }

    // Scanning in increasing order, the first position met in a class is
    // its minimum.
    constexpr auto unset = std::numeric_limits<Position>::max();
    std::vector<Position> min_of_root(k, unset);
    std::vector<Position> rep(k);
    for (Position i = 0; i < k; ++i) {
        auto root = uf.find(i);
        if (min_of_root[root] == unset)
            min_of_root[root] = i;
        rep[i] = min_of_root[root];
    }
    return EquivalencePartition(std::move(rep));
}

LabeledWord fw_oracle(const PeriodSet& periods, Length n)
{
    auto partition = build_partition(periods, n);
    auto reps = partition.reps();
    return LabeledWord(std::vector<Letter>(reps.begin(), reps.end()));
}

std::uint64_t class_count(const PeriodSet& periods, Length n)
{
    return build_partition(periods, n).class_count();
}

namespace {

struct PartitionSearch {
    const PeriodSet& periods;
    Length n;
    std::vector<Letter> word;
    std::vector<Letter> letters_used;
    ExhaustiveResult result;

    bool has_all_periods() const
    {
        LabeledWord w(word);
        for (auto p : periods.periods())
            if (!has_period(w, p))
                return false;
        return true;
    }

    void visit(Position i)
    {
        if (i == n) {
            ++result.candidates;
            if (!has_all_periods())
                return;
            auto size = letters_used.size();
            if (size > result.max_alphabet) {
                result.max_alphabet = size;
                result.maximizers.clear();
            }
            if (size == result.max_alphabet)
                result.maximizers.emplace_back(word);
            return;
        }
        // Either reuse a letter already introduced, or open a new class
        // whose name is this position.
        for (std::size_t j = 0; j < letters_used.size(); ++j) {
            word[i] = letters_used[j];
            visit(i + 1);
        }
        word[i] = i;
        letters_used.push_back(i);
        visit(i + 1);
        letters_used.pop_back();
    }
};

} // namespace

ExhaustiveResult max_alphabet_exhaustive(const PeriodSet& periods, Length n, Length bound)
{
    if (n > bound)
        throw Error(ErrorCode::TooLargeForExhaustive,
                    "length " + std::to_string(n) + " exceeds exhaustive bound " +
                        std::to_string(bound));
    PartitionSearch search{periods, n, std::vector<Letter>(n), {}, {}};
    search.visit(0);
    return std::move(search.result);
}

} // namespace fwword
