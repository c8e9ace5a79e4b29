#include "fusion/basis_enum.hpp"

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "fusion/affine_char.hpp"
#include "fusion/errors.hpp"
#include "fusion/fusion_char.hpp"
#include "internal.hpp"

namespace fusion {

std::string to_string(LowerBound b)
{
    switch (b) {
    case LowerBound::intro:
        return "intro";
    case LowerBound::section3:
        return "section3";
    case LowerBound::linear:
        return "linear";
    }
    return "?";
}

LowerBound parse_lower_bound(const std::string& name)
{
    if (name == "intro")
        return LowerBound::intro;
    if (name == "section3")
        return LowerBound::section3;
    if (name == "linear")
        return LowerBound::linear;
    throw UsageError("unknown lower bound '" + name + "' (expected intro, section3 or linear)");
}

namespace {

using Long = long long;

// Enumerates index families level by level (alpha = k down to 1) and counts
// them by (sum of indices, z-weight).
class MonomialCounter {
public:
    MonomialCounter(std::vector<Long> constants, LowerBound bound, Long budget)
        : c_(std::move(constants)), bound_(bound), budget_(budget)
    {
    }

    // counts[(degree, zweight)]
    std::map<std::pair<Long, Long>, Integer> run()
    {
        counts_.clear();
        const int k = static_cast<int>(c_.size());
        if (min_rest(k, 0) <= budget_)
            level(k, 0, 0, 0);
        return counts_;
    }

private:
    Long first_bound(int a, Long big_l) const
    {
        const Long c = c_[static_cast<std::size_t>(a) - 1];
        switch (bound_) {
        case LowerBound::intro:
            return c + a * big_l * (big_l + 1);
        case LowerBound::section3:
            return c + big_l * (big_l + 1);
        case LowerBound::linear:
            return c + 2 * a * big_l;
        }
        return c;
    }

    // Smallest index sum of l entries at level a, first >= lb, spacing 2a.
    static Long level_min(int a, Long lb, Long l) { return l * lb + a * l * (l - 1); }

    // Smallest total index sum over levels a..1 given L. Nondecreasing in L
    // because every first_bound is.
    Long min_rest(int a, Long big_l)
    {
        if (a == 0)
            return 0;
        auto key = std::make_pair(a, big_l);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const Long lb = first_bound(a, big_l);
        const Long floor_rest = min_rest(a - 1, big_l);
        Long best = std::numeric_limits<Long>::max();
        for (Long l = 0;; ++l) {
            const Long f = level_min(a, lb, l);
            // From here on f is nondecreasing; stop once it cannot win.
            if (lb + 2 * a * (l - 1) >= 0 && f + floor_rest >= best)
                break;
            best = std::min(best, f + min_rest(a - 1, big_l + l));
        }
        memo_[key] = best;
        return best;
    }

    void level(int a, Long big_l, Long acc, Long zweight)
    {
        if (a == 0) {
            counts_[{acc, zweight}] += 1;
            return;
        }
        const Long lb = first_bound(a, big_l);
        const Long floor_rest = min_rest(a - 1, big_l);
        for (Long l = 0;; ++l) {
            const Long f = level_min(a, lb, l);
            const bool nondecreasing = lb + 2 * a * (l - 1) >= 0;
            if (nondecreasing && acc + f + floor_rest > budget_)
                break;
            const Long rest = min_rest(a - 1, big_l + l);
            if (acc + f + rest > budget_)
                continue;
            sequence(a, l, lb, big_l + l, acc, zweight + a * l, rest);
        }
    }

    // Chooses the remaining `left` entries of level a, each >= lb.
    void sequence(int a, Long left, Long lb, Long next_l, Long acc, Long zweight, Long rest)
    {
        if (left == 0) {
            level(a - 1, next_l, acc, zweight);
            return;
        }
        for (Long x = lb; acc + level_min(a, x, left) + rest <= budget_; ++x)
            sequence(a, left - 1, x + 2 * a, next_l, acc + x, zweight, rest);
    }

    std::vector<Long> c_;
    LowerBound bound_;
    Long budget_;
    std::map<std::pair<int, Long>, Long> memo_;
    std::map<std::pair<Long, Long>, Integer> counts_;
};

IdentityReport compare(const BiSeries& lhs, const BiSeries& rhs, const std::string& what)
{
    IdentityReport r;
    if (!(lhs == rhs)) {
        r.holds = false;
        r.detail = what + ": first mismatch at " + first_difference(lhs, rhs);
    }
    return r;
}

}  // namespace

BiSeries enumerate_winf_basis(const CompositionD& d, int qmax4, LowerBound bound)
{
    const int k = d.k();
    std::vector<Long> c(static_cast<std::size_t>(k), 0);
    for (int a = 1; a <= k; ++a) {
        for (int j = 1; j <= a; ++j)
            c[static_cast<std::size_t>(a) - 1] += static_cast<Long>(a - j + 1) * d.d(j);
    }
    BiSeries out(qmax4);
    out.mark_infinite();
    const Long budget = detail::floor_div(qmax4, 4);
    if (budget < 0)
        return out;
    MonomialCounter counter(std::move(c), bound, budget);
    for (const auto& [key, n] : counter.run())
        out.add_term({static_cast<int>(4 * key.first), static_cast<int>(2 * key.second)}, n);
    return out;
}

IdentityReport winf_basis_count_check(const CompositionD& d, int qmax4, LowerBound bound)
{
    return compare(enumerate_winf_basis(d, qmax4, bound), w_infinity_character(d, qmax4),
                   "D=" + to_string(d) + " bound=" + to_string(bound));
}

BiSeries enumerate_ld_basis(const CompositionD& d, int s, int qmax4, LowerBound bound)
{
    const int k = d.k();
    if (d.d(k + 1) > 1)
        throw UsageError("enumerate_ld_basis: requires d_{k+1} <= 1");
    if (s < 0)
        throw UsageError("enumerate_ld_basis: s must be nonnegative");
    const CompositionD ds = d.stripped().with_top(2 + 2 * s);
    const auto a2 = alpha_vector(ds);
    std::vector<Long> c(static_cast<std::size_t>(k), 0);
    for (int a = 1; a <= k; ++a) {
        Long v = a - static_cast<Long>(a) * a2[static_cast<std::size_t>(a) - 1];
        for (int j = 2; j <= a; ++j)
            v -= static_cast<Long>(j - 1) * ds.d(j);
        c[static_cast<std::size_t>(a) - 1] = v;
    }
    const ExponentPair w = wA_degrees(ds);
    BiSeries out(qmax4);
    out.mark_infinite();
    const Long budget = detail::floor_div(qmax4 - w.q4, 4);
    MonomialCounter counter(std::move(c), bound, budget);
    for (const auto& [key, n] : counter.run()) {
        out.add_term({static_cast<int>(w.q4 + 4 * key.first),
                      static_cast<int>(w.z2 + 2 * key.second)},
                     n);
    }
    return out;
}

int ld_basis_stabilization(const CompositionD& d, int qmax4, int s_cap, LowerBound bound)
{
    if (s_cap < 0)
        s_cap = std::max(qmax4, 1);
    const CompositionD base = d.stripped();
    const BiSeries target = ld_character(base, qmax4);
    std::optional<BiSeries> previous;
    int first_equal = -1;
    for (int s = 0; s <= s_cap + 1; ++s) {
        const BiSeries current = enumerate_ld_basis(base, s, qmax4, bound);
        std::string where;
        if (previous && !coefficientwise_le(*previous, current, &where))
            throw InvariantError("ld_basis_stabilization: counts decreased at s=" +
                                 std::to_string(s) + " for D=" + to_string(base) + " at " + where);
        if (!coefficientwise_le(current, target, &where))
            throw InvariantError("ld_basis_stabilization: counts exceed ch L^D at s=" +
                                 std::to_string(s) + " for D=" + to_string(base) + " at " + where);
        if (current == target) {
            if (first_equal >= 0)
                return first_equal;
            first_equal = s;
        } else if (first_equal >= 0) {
            throw InvariantError("ld_basis_stabilization: counts left ch L^D after s=" +
                                 std::to_string(first_equal));
        }
        previous = current;
    }
    throw InvariantError("ld_basis_stabilization: no convergence within s <= " +
                         std::to_string(s_cap) + " for D=" + to_string(base) + " (bound " +
                         to_string(bound) + ")");
}

}  // namespace fusion
