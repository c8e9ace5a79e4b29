#include "fusion/affine_char.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "fusion/errors.hpp"
#include "fusion/fusion_char.hpp"
#include "internal.hpp"

namespace fusion {

std::vector<int> alpha_vector(const CompositionD& d)
{
    const int k = d.k();
    std::vector<int> a2(static_cast<std::size_t>(k), 0);
    int acc = 0;
    for (int i = k; i >= 1; --i) {
        acc += d.d(i + 1);
        a2[static_cast<std::size_t>(i) - 1] = acc;
    }
    return a2;
}

int parity_count(const CompositionD& d)
{
    int p = 0;
    for (int x : alpha_vector(d))
        p += x % 2;
    return p;
}

ExponentPair wA_degrees(const CompositionD& d)
{
    ExponentPair e;
    for (int x : alpha_vector(d)) {
        e.q4 += x * x;
        e.z2 -= x;
    }
    e.q4 -= parity_count(d);
    return e;
}

namespace {

// Collects z2 -> dense integer-degree series, then multiplies every column by
// 1/(inf)_q.
class ColumnAccumulator {
public:
    explicit ColumnAccumulator(int max_degree) : max_degree_(max_degree) {}

    std::vector<Integer>& column(int z2)
    {
        auto [it, inserted] = columns_.try_emplace(z2);
        if (inserted)
            it->second.assign(static_cast<std::size_t>(max_degree_) + 1, 0);
        return it->second;
    }

    // Adds q^base / prod (m_l)_q! to column z2.
    void add(int z2, int base, const std::vector<int>& factorials)
    {
        std::vector<Integer> s(static_cast<std::size_t>(max_degree_ - base) + 1);
        s[0] = 1;
        for (int m : factorials)
            univariate::divide_by_q_factorial(s, m);
        auto& col = column(z2);
        for (std::size_t i = 0; i < s.size(); ++i)
            col[i + static_cast<std::size_t>(base)] += s[i];
    }

    BiSeries finish(int qmax4) const
    {
        BiSeries out(qmax4);
        out.mark_infinite();
        if (max_degree_ < 0)
            return out;
        const auto euler = univariate::inverse_q_factorial(max_degree_, max_degree_);
        for (const auto& [z2, col] : columns_)
            out.add_univariate({0, z2}, univariate::multiply(col, euler, max_degree_));
        return out;
    }

private:
    int max_degree_;
    std::map<int, std::vector<Integer>> columns_;
};

}  // namespace

BiSeries ld_character(const CompositionD& d, int qmax4)
{
    const int k = d.k();
    if (d.d(k + 1) > 1)
        throw UsageError("ld_character: requires d_{k+1} <= 1, got " + to_string(d));
    const auto a2 = alpha_vector(d);
    const int p = parity_count(d);
    // The prefactor q^{-p/4} makes every exponent (sum I_l^2 - p)/4 + n an
    // integer, so degrees n <= qmax4 / 4 are retained.
    const int n_max = detail::floor_div(qmax4, 4);
    ColumnAccumulator acc(n_max);
    if (n_max < 0)
        return acc.finish(qmax4);
    const int square_budget = 4 * n_max + p;
    const int radius = detail::isqrt(square_budget) + 1;

    // I_l = 2 i_l, I_l = 2 alpha_l (mod 2), I_{l+1} >= I_l - d_{l+1}.
    std::vector<int> big_i(static_cast<std::size_t>(k), 0);
    std::vector<int> fact(static_cast<std::size_t>(k > 0 ? k - 1 : 0), 0);
    auto rec = [&](auto&& self, int l, int squares, int z2) -> void {
        if (l == k) {
            // sum I_l^2 = p (mod 4), so the base degree is integral.
            const int base = (squares - p) / 4;
            for (int m = 0; m + 1 < k; ++m) {
                fact[static_cast<std::size_t>(m)] =
                    (big_i[static_cast<std::size_t>(m) + 1] - big_i[static_cast<std::size_t>(m)] +
                     d.d(m + 2)) / 2;
            }
            acc.add(z2, base, fact);
            return;
        }
        int lo = -radius;
        if (l > 0)
            lo = std::max(lo, big_i[static_cast<std::size_t>(l) - 1] - d.d(l + 1));
        const int parity = a2[static_cast<std::size_t>(l)] % 2;
        if (((lo % 2) + 2) % 2 != parity)
            ++lo;
        for (int x = lo; x <= radius; x += 2) {
            if (squares + x * x > square_budget)
                continue;
            big_i[static_cast<std::size_t>(l)] = x;
            self(self, l + 1, squares + x * x, z2 + x);
        }
    };
    rec(rec, 0, 0, 0);
    return acc.finish(qmax4);
}

BiSeries irrep_character(const HighestWeightLabel& label, int qmax4)
{
    const int k = label.k;
    const int j = label.j;
    if (k < 1 || j < 0 || j > k)
        throw UsageError("irrep_character: need 0 <= j <= k and k >= 1");
    const int n_max = detail::floor_div(qmax4, 4);
    ColumnAccumulator acc(n_max);
    if (n_max < 0)
        return acc.finish(qmax4);
    const int radius = detail::isqrt(n_max) + 1;

    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    std::vector<int> fact(static_cast<std::size_t>(k - 1), 0);
    // Each coordinate contributes i^2 (+ i when l <= j), which is >= 0.
    auto rec = [&](auto&& self, int l, int weight, int sum) -> void {
        if (l == k) {
            for (int m = 0; m + 1 < k; ++m)
                fact[static_cast<std::size_t>(m)] =
                    idx[static_cast<std::size_t>(m) + 1] - idx[static_cast<std::size_t>(m)];
            acc.add(j + 2 * sum, weight, fact);
            return;
        }
        const int lo = l == 0 ? -radius : idx[static_cast<std::size_t>(l) - 1];
        for (int x = lo; x <= radius; ++x) {
            const int w = x * x + (l < j ? x : 0);
            if (weight + w > n_max)
                continue;
            idx[static_cast<std::size_t>(l)] = x;
            self(self, l + 1, weight + w, sum + x);
        }
    };
    rec(rec, 0, 0, 0);
    return acc.finish(qmax4);
}

namespace {

}  // namespace

StabilizationResult stabilization_check(const CompositionD& d, int qmax4, int s_cap)
{
    const CompositionD base = d.stripped();
    const int k = base.k();
    if (base.d(k + 1) > 1)
        throw UsageError("stabilization_check: requires d_{k+1} <= 1");
    if (s_cap < 0)
        s_cap = std::max(qmax4, 1);
    const BiSeries target = ld_character(base, qmax4);

    StabilizationResult result;
    std::optional<BiSeries> previous;
    int first_equal = -1;
    for (int s = 0; s <= s_cap + 1; ++s) {
        const BiSeries current = m_character(base.with_top(2 + 2 * s), qmax4);
        ++result.steps_checked;
        std::string where;
        if (previous && !coefficientwise_le(*previous, current, &where)) {
            throw InvariantError("stabilization_check: ch M^{A_s} decreased between s=" +
                                 std::to_string(s - 1) + " and s=" + std::to_string(s) +
                                 " for D=" + to_string(base) + " at " + where);
        }
        if (!coefficientwise_le(current, target, &where)) {
            throw InvariantError("stabilization_check: ch M^{A_s} exceeds ch L^D at s=" +
                                 std::to_string(s) + " for D=" + to_string(base) + " at " + where);
        }
        if (current == target) {
            if (first_equal >= 0) {
                result.s_min = first_equal;
                return result;
            }
            first_equal = s;
        } else if (first_equal >= 0) {
            throw InvariantError("stabilization_check: ch M^{A_s} left ch L^D after s=" +
                                 std::to_string(first_equal));
        }
        previous = current;
    }
    throw InvariantError("stabilization_check: no convergence to ch L^D within s <= " +
                         std::to_string(s_cap) + " for D=" + to_string(base));
}

}  // namespace fusion
