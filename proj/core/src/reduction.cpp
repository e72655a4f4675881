#include "fwword/reduction.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fwword {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorCode::ArithmeticOverflow,
                    std::to_string(a) + " + " + std::to_string(b) + " overflows 64 bits");
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorCode::ArithmeticOverflow,
                    std::to_string(a) + " * " + std::to_string(b) + " overflows 64 bits");
    return out;
}

/// Every period other than m lowered by steps * m; callers keep
/// steps * m below the second-smallest period.
PeriodSet shift_down(const PeriodSet& periods, std::uint64_t steps)
{
    auto m = periods.min();
    auto delta = steps * m;
    std::vector<std::uint64_t> values;
    values.reserve(periods.size());
    values.push_back(m);
    for (auto p : periods.periods().subspan(1))
        values.push_back(p - delta);
    return PeriodSet::from_values(std::move(values));
}

} // namespace

PeriodSet reduce(const PeriodSet& periods)
{
    auto m = periods.min();
    std::vector<std::uint64_t> values;
    values.reserve(periods.size());
    values.push_back(m);
    for (auto p : periods.periods().subspan(1))
        values.push_back(p - m);
    return PeriodSet::from_values(std::move(values));
}

ReductionChain reduction_chain(const PeriodSet& periods, Length n)
{
    ReductionChain chain{{}, Termination::LengthAtMostMin};
    auto q = periods;
    while (true) {
        chain.steps.push_back({q, n});
        if (n <= q.min()) {
            chain.termination = Termination::LengthAtMostMin;
            break;
        }
        if (q.min() == q.gcd()) {
            chain.termination = Termination::GcdEqualsMin;
            break;
        }
        n -= q.min();
        q = reduce(q);
    }
    return chain;
}

std::uint64_t reduction_chain_length(const PeriodSet& periods, Length n)
{
    std::uint64_t count = 0;
    auto q = periods;
    while (n > q.min() && q.min() != q.gcd()) {
        // The descent ends at the first level with n_j <= m, i.e. after
        // ceil(n / m) - 1 steps if the minimum does not change first.
        auto m = q.min();
        auto batch = batched_reduce(q, (n - 1) / m);
        count += batch.steps;
        n -= batch.steps * m;
        q = std::move(batch.periods);
    }
    return count;
}

BatchedReduction batched_reduce(const PeriodSet& periods, std::uint64_t budget)
{
    if (budget == 0)
        throw Error(ErrorCode::InvalidArgument, "batched_reduce needs a positive budget");
    if (periods.size() == 1)
        return {periods, 1};
    auto m = periods.min();
    auto steps = std::clamp<std::uint64_t>((periods.second() - m) / m, 1, budget);
    return {shift_down(periods, steps), steps};
}

BatchedReduction reduce_to_exhaustion(const PeriodSet& periods)
{
    BatchedReduction out{periods, 0};
    while (out.periods.size() > 1) {
        auto batch = batched_reduce(out.periods);
        out.steps = checked_add(out.steps, batch.steps);
        out.periods = std::move(batch.periods);
    }
    return out;
}

LabeledWord fw_fast(const PeriodSet& periods, Length n)
{
    struct Level {
        std::uint64_t m;
        Length length_below;
    };

    // Descent. Each level is a run of reductions sharing the same minimum.
    std::vector<Level> levels;
    auto q = periods;
    auto length = n;
    while (length > q.min() && q.min() != q.gcd()) {
        auto m = q.min();
        auto batch = batched_reduce(q, (length - 1) / m);
        length -= batch.steps * m;
        levels.push_back({m, length});
        q = std::move(batch.periods);
    }

    // Base word: 0 1 ... (n-1) when short, otherwise (0 1 ... (m-1))^omega.
    auto base_m = q.min();
    auto base_letter = [&](Position x) -> Letter { return length <= base_m ? x : x % base_m; };
    if (levels.empty()) {
        std::vector<Letter> out(n);
        for (Position x = 0; x < n; ++x)
            out[x] = base_letter(x);
        return LabeledWord(std::move(out));
    }

    // Ascent. Only the prefix of the lower word that the generator of the
    // level above can see is kept. Within a run of equal minima the
    // generator is x < n_below ? u_below[x] : x, composed across the run.
    std::vector<Letter> below(std::min<Length>(length, levels.back().m));
    for (Position x = 0; x < below.size(); ++x)
        below[x] = base_letter(x);

    for (auto idx = levels.size(); idx-- > 0;) {
        const auto& level = levels[idx];
        std::vector<Letter> generator(level.m);
        for (Position x = 0; x < level.m; ++x)
            generator[x] = x < level.length_below ? below[x] : x;

        if (idx == 0)
            return extend_periodically(LabeledWord(std::move(generator)), n);

        auto level_length = levels[idx - 1].length_below;
        std::vector<Letter> next(std::min<Length>(level_length, levels[idx - 1].m));
        for (Position x = 0; x < next.size(); ++x)
            next[x] = generator[x % level.m];
        below = std::move(next);
    }
    return {}; // unreachable: the loop returns at idx == 0
}

Letter letter_at(const PeriodSet& periods, Length n, Position i)
{
    if (i >= n)
        throw Error(ErrorCode::OutOfRange, "position " + std::to_string(i) +
                                               " outside word of length " + std::to_string(n));
    auto q = periods;
    while (true) {
        auto m = q.min();
        if (n <= m)
            return i;
        if (m == q.gcd())
            return i % m;
        auto r = i % m;
        if (r >= n - m)
            return r;
        // With r < m fixed and the minimum unchanged, the descent continues
        // while r < n_j - m, i.e. for (n - r - 1) / m steps. Stopping early
        // inside a run is handled by the next iteration.
        auto batch = batched_reduce(q, (n - r - 1) / m);
        n -= batch.steps * m;
        i = r;
        q = std::move(batch.periods);
    }
}

ExtremalResult extremal_length(const PeriodSet& periods)
{
    if (periods.min() == periods.gcd())
        return {};

    struct Level {
        std::uint64_t m;
        std::uint64_t steps;
    };
    std::vector<Level> levels;
    auto q = periods;
    while (q.min() != q.gcd()) {
        auto batch = batched_reduce(q);
        levels.push_back({q.min(), batch.steps});
        q = std::move(batch.periods);
    }

    // Inside a run the inner values are already >= m - 1, so k steps
    // telescope to k*m + max{L, m - 1}.
    Length value = q.min() - 1;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        value = checked_add(checked_mul(it->steps, it->m), std::max(value, it->m - 1));
    return {value};
}

namespace stepwise {

Letter letter_at(const PeriodSet& periods, Length n, Position i)
{
    if (i >= n)
        throw Error(ErrorCode::OutOfRange, "position " + std::to_string(i) +
                                               " outside word of length " + std::to_string(n));
    auto q = periods;
    while (true) {
        auto m = q.min();
        if (n <= m)
            return i;
        auto r = i % m;
        if (r >= n - m)
            return r;
        q = reduce(q);
        n -= m;
        i = r;
    }
}

ExtremalResult extremal_length(const PeriodSet& periods)
{
    if (periods.min() == periods.gcd())
        return {};
    std::vector<std::uint64_t> minima;
    auto q = periods;
    while (q.min() != q.gcd()) {
        minima.push_back(q.min());
        q = reduce(q);
    }
    Length value = q.min() - 1;
    for (auto it = minima.rbegin(); it != minima.rend(); ++it)
        value = checked_add(*it, std::max(value, *it - 1));
    return {value};
}

BatchedReduction reduce_to_exhaustion(const PeriodSet& periods)
{
    BatchedReduction out{periods, 0};
    while (out.periods.size() > 1) {
        out.periods = reduce(out.periods);
        ++out.steps;
    }
    return out;
}

} // namespace stepwise

} // namespace fwword
