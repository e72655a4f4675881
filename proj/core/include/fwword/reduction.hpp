// reduction.hpp -- the reduction/extension construction of FW-words,
// positional letter queries and the extremal length recurrence.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "fwword/types.hpp"

namespace fwword {

/// Q = {p - m : p in P, p != m} u {m}, where m = min P. Preserves the gcd.
PeriodSet reduce(const PeriodSet& periods);

/// The literal descent from (P, n): one step per reduction, stopping at the
/// first level with n_i <= min Q_i or min Q_i = gcd Q_i (the former wins a
/// tie). Memory is linear in the number of steps.
ReductionChain reduction_chain(const PeriodSet& periods, Length n);

/// Number of reduction steps reduction_chain(P, n) would take, computed with
/// batched reductions.
std::uint64_t reduction_chain_length(const PeriodSet& periods, Length n);

inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

struct BatchedReduction {
    PeriodSet periods;
    std::uint64_t steps;
};

/// Applies reduce k times in one pass, where k is as large as possible
/// without the minimum changing (k = floor((p2 - m) / m), at least 1, and at
/// most budget). A singleton is a fixed point and takes one step. Throws
/// InvalidArgument for a zero budget.
BatchedReduction batched_reduce(const PeriodSet& periods, std::uint64_t budget = unlimited_budget);

/// Reduces until the set is the singleton {gcd P}, batching the steps.
BatchedReduction reduce_to_exhaustion(const PeriodSet& periods);

/// FW(P, n), letter for letter equal to fw_oracle(P, n). Memory is O(n) for
/// the result plus one generating prefix per batched level.
LabeledWord fw_fast(const PeriodSet& periods, Length n);

/// FW(P, n)[i] without materializing the word. Cost is linear in the number
/// of batched levels. Throws OutOfRange if i >= n.
Letter letter_at(const PeriodSet& periods, Length n, Position i);

/// Length of the longest non-trivial FW-word relative to P; absent when
/// gcd P = min P, since then every word with periods P is trivial.
struct ExtremalResult {
    std::optional<Length> value;

    friend bool operator==(const ExtremalResult&, const ExtremalResult&) = default;
};

/// L(P) = m + max{L(Q), m - 1}, with L = m - 1 at a set whose gcd equals
/// its minimum. Throws ArithmeticOverflow if the result exceeds 64 bits.
ExtremalResult extremal_length(const PeriodSet& periods);

/// One-step-at-a-time versions of the batched routines. They follow the
/// definitions literally and exist to check the batched paths.
namespace stepwise {

Letter letter_at(const PeriodSet& periods, Length n, Position i);

ExtremalResult extremal_length(const PeriodSet& periods);

BatchedReduction reduce_to_exhaustion(const PeriodSet& periods);

} // namespace stepwise

} // namespace fwword
