// oracle.hpp -- FW-words built directly from the equivalence closure of the
// period relations. O(k) memory; intended as ground truth for the fast
// construction and for moderate lengths only.

#pragma once

#include <cstdint>
#include <vector>

#include "fwword/types.hpp"

namespace fwword {

/// Disjoint sets over {0, ..., size-1} with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t size);

    std::size_t find(std::size_t x) noexcept;

    /// Returns false if x and y were already in the same set.
    bool unite(std::size_t x, std::size_t y) noexcept;

    std::size_t size() const noexcept { return _parent.size(); }

private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
};

/// Classes of the equivalence closure generated by the period relations on
/// positions {0, ..., k-1}, each labelled by its least element.
///
/// Two positions are related when they are congruent mod m = min P, or when
/// positions congruent to them lie at a distance p in P. The closure of that
/// relation is generated by the unit steps i ~ i+p for p in P (m is itself in
/// P): a congruence i = j mod m inside the range is a chain of in-range
/// m-steps, and the second clause is such a chain, one p-step, and another
/// chain. Periods p >= k produce no in-range step and contribute nothing.
EquivalencePartition build_partition(const PeriodSet& periods, Length k);

/// FW(P, n): letter i is the least position of the class of i.
LabeledWord fw_oracle(const PeriodSet& periods, Length n);

/// Size of the alphabet of FW(P, n).
std::uint64_t class_count(const PeriodSet& periods, Length n);

inline constexpr Length default_exhaustive_bound = 9;

struct ExhaustiveResult {
    std::uint64_t max_alphabet = 0;
    /// Canonical words examined; the Bell number B(n).
    std::uint64_t candidates = 0;
    /// Every word attaining max_alphabet, canonically labelled, in
    /// lexicographic order.
    std::vector<LabeledWord> maximizers;
};

/// Brute force over every canonical word of length n (one per set partition
/// of the positions); keeps those having all periods in P and reports the
/// largest alphabet and its maximizers. Throws TooLargeForExhaustive when
/// n > bound.
ExhaustiveResult max_alphabet_exhaustive(const PeriodSet& periods, Length n,
                                         Length bound = default_exhaustive_bound);

} // namespace fwword
