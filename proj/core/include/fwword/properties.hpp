// properties.hpp -- predicates and normal forms on words

#pragma once

#include <cstdint>
#include <set>

#include "fwword/types.hpp"

namespace fwword {

/// w[i] = w[i+p] wherever both exist. Any p >= |w| is a period. Throws
/// InvalidPeriod for p = 0.
bool has_period(const LabeledWord& w, std::uint64_t p);

/// True iff gcd P is a period of w. Words shorter than gcd P are trivial
/// by vacuity.
bool is_trivial(const LabeledWord& w, const PeriodSet& periods);

/// Renames letters so that each one equals the position of its first
/// occurrence. Two words agree up to renaming iff their canonical forms are
/// equal.
LabeledWord canonicalize(const LabeledWord& w);

/// The empty word is a palindrome.
bool is_palindrome(const LabeledWord& w);

LabeledWord reversed(const LabeledWord& w);

std::set<Letter> alphabet(const LabeledWord& w);

} // namespace fwword
