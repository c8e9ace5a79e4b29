#include "fusion/fusion_char.hpp"

#include <functional>

#include "fusion/affine_char.hpp"
#include "fusion/errors.hpp"
#include "internal.hpp"

namespace fusion {

Integer fusion_dimension(const AVector& a)
{
    Integer r = 1;
    for (int x : a.entries())
        r *= x;
    return r;
}

namespace {

void require_no_ones(const CompositionD& d, const char* who)
{
    if (d.d(1) != 0)
        throw UsageError(std::string(who) +
                         ": one-dimensional factors present (d_1 != 0); strip them first");
}

// Visits every tuple (j_1, ..., j_k) with j_k in [0, d_{k+1}] and
// j_l in [0, d_{l+1} + j_{l+1}], passing the product of the q-binomials
// [d_{l+1} + j_{l+1} choose j_l] (with j_{k+1} = 0). `prune(l, j)` may cut a
// branch once the partial weight of levels l..k is already too large.
void for_each_binomial_tuple(
    const CompositionD& d,
    const std::function<bool(const std::vector<int>&, int)>& prune,
    const std::function<void(const std::vector<int>&)>& visit)
{
    const int k = d.k();
    std::vector<int> j(static_cast<std::size_t>(k) + 2, 0);
    auto rec = [&](auto&& self, int l) -> void {
        if (l == 0) {
            visit(j);
            return;
        }
        const int up = d.d(l + 1) + (l == k ? 0 : j[static_cast<std::size_t>(l) + 1]);
        for (int x = 0; x <= up; ++x) {
            j[static_cast<std::size_t>(l)] = x;
            if (prune(j, l))
                continue;
            self(self, l - 1);
        }
        j[static_cast<std::size_t>(l)] = 0;
    };
    rec(rec, k);
}

std::vector<Integer> binomial_product(const CompositionD& d, const std::vector<int>& j,
                                      int max_degree)
{
    const int k = d.k();
    std::vector<Integer> poly{1};
    for (int l = 1; l <= k; ++l) {
        const int up = d.d(l + 1) + (l == k ? 0 : j[static_cast<std::size_t>(l) + 1]);
        poly = univariate::multiply(poly, univariate::q_binomial(up, j[static_cast<std::size_t>(l)]),
                                    max_degree);
    }
    return poly;
}

// Degree of that product: sum of j_l (up_l - j_l).
int binomial_degree(const CompositionD& d, const std::vector<int>& j)
{
    const int k = d.k();
    int deg = 0;
    for (int l = 1; l <= k; ++l) {
        const int up = d.d(l + 1) + (l == k ? 0 : j[static_cast<std::size_t>(l) + 1]);
        deg += j[static_cast<std::size_t>(l)] * (up - j[static_cast<std::size_t>(l)]);
    }
    return deg;
}

}  // namespace

BiSeries fusion_character(const AVector& a, int qmax4)
{
    const CompositionD d = dvector_of(a);
    require_no_ones(d, "fusion_character");
    const int k = d.k();
    const int n_max = detail::floor_div(qmax4, 4);
    BiSeries out(qmax4);

    // Integer q-weight of level l: j_l (d_2 + ... + d_l + j_l) - j_l, which is
    // the displayed exponent after z -> z/q.
    std::vector<int> partial_d(static_cast<std::size_t>(k) + 1, 0);
    for (int l = 2; l <= k; ++l)
        partial_d[static_cast<std::size_t>(l)] = partial_d[static_cast<std::size_t>(l) - 1] + d.d(l);
    auto weight_from = [&](const std::vector<int>& j, int from) {
        int w = 0;
        for (int l = from; l <= k; ++l) {
            const int x = j[static_cast<std::size_t>(l)];
            w += x * (partial_d[static_cast<std::size_t>(l)] + x - 1);
        }
        return w;
    };
    bool pruned = false;
    for_each_binomial_tuple(
        d,
        [&](const std::vector<int>& j, int l) {
            if (weight_from(j, l) > n_max) {
                pruned = true;
                return true;
            }
            return false;
        },
        [&](const std::vector<int>& j) {
            const int w = weight_from(j, 1);
            int z = 0;
            for (int l = 1; l <= k; ++l)
                z += j[static_cast<std::size_t>(l)];
            if (binomial_degree(d, j) > n_max - w)
                out.mark_infinite();
            out.add_univariate({4 * w, 2 * z}, binomial_product(d, j, n_max - w));
        });
    if (pruned)
        out.mark_infinite();
    return out;
}

BiSeries m_character(const CompositionD& d, int qmax4)
{
    require_no_ones(d, "m_character");
    const int k = d.k();
    const auto a2 = alpha_vector(d);
    const int p = parity_count(d);
    BiSeries out(qmax4);

    auto shifted = [&](const std::vector<int>& j, int l) {
        return 2 * j[static_cast<std::size_t>(l)] - a2[static_cast<std::size_t>(l) - 1];
    };
    auto squares_from = [&](const std::vector<int>& j, int from) {
        int s = 0;
        for (int l = from; l <= k; ++l)
            s += shifted(j, l) * shifted(j, l);
        return s;
    };
    bool pruned = false;
    for_each_binomial_tuple(
        d,
        [&](const std::vector<int>& j, int l) {
            if (squares_from(j, l) - p > qmax4) {
                pruned = true;
                return true;
            }
            return false;
        },
        [&](const std::vector<int>& j) {
            // sum I_l^2 = p (mod 4): odd squares are 1 mod 8, even ones 0 mod 4.
            const int q4 = squares_from(j, 1) - p;
            int z2 = 0;
            for (int l = 1; l <= k; ++l)
                z2 += shifted(j, l);
            const int budget = detail::floor_div(qmax4 - q4, 4);
            if (binomial_degree(d, j) > budget)
                out.mark_infinite();
            out.add_univariate({q4, z2}, binomial_product(d, j, budget));
        });
    if (pruned)
        out.mark_infinite();
    return out;
}

BiSeries w_infinity_character(const CompositionD& d, int qmax4)
{
    const int k = d.k();
    const int n_max = detail::floor_div(qmax4, 4);
    BiSeries out(qmax4);
    out.mark_infinite();
    if (n_max < 0)
        return out;

    std::vector<int> i(static_cast<std::size_t>(k) + 1, 0);
    auto exponent = [&]() {
        int e = 0;
        for (int s = 1; s <= k; ++s) {
            for (int t = 1; t <= k; ++t)
                e += std::min(s, t) * i[static_cast<std::size_t>(s)] * i[static_cast<std::size_t>(t)];
        }
        for (int l = 1; l <= k; ++l) {
            for (int a = l; a <= k; ++a)
                e += d.d(l) * (a - l + 1) * i[static_cast<std::size_t>(a)];
            e -= l * i[static_cast<std::size_t>(l)];
        }
        return e;
    };
    // The exponent is coordinatewise nondecreasing on nonnegative tuples, so
    // a partial tuple (remaining entries 0) bounds every completion from below.
    auto rec = [&](auto&& self, int l) -> void {
        if (l > k) {
            const int e = exponent();
            std::vector<Integer> s(static_cast<std::size_t>(n_max - e) + 1);
            s[0] = 1;
            int z = 0;
            for (int a = 1; a <= k; ++a) {
                univariate::divide_by_q_factorial(s, i[static_cast<std::size_t>(a)]);
                z += a * i[static_cast<std::size_t>(a)];
            }
            out.add_univariate({4 * e, 2 * z}, s);
            return;
        }
        for (int x = 0;; ++x) {
            i[static_cast<std::size_t>(l)] = x;
            if (exponent() > n_max)
                break;
            self(self, l + 1);
        }
        i[static_cast<std::size_t>(l)] = 0;
    };
    rec(rec, 1);
    return out;
}

}  // namespace fusion
