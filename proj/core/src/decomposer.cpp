#include "fusion/decomposer.hpp"

#include <limits>

#include "fusion/affine_char.hpp"
#include "fusion/errors.hpp"
#include "fusion/verlinde.hpp"

namespace fusion {

void GradedMultiplicity::add(int q4, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(q4, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void GradedMultiplicity::add_shifted(const GradedMultiplicity& other, int shift_q4)
{
    for (const auto& [e, c] : other.terms_)
        add(e + shift_q4, c);
}

Integer GradedMultiplicity::at_one() const
{
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

std::string to_string(const GradedMultiplicity& k)
{
    if (k.empty())
        return "0";
    BiSeries s(k.terms().rbegin()->first);
    for (const auto& [e, c] : k.terms())
        s.add_term({e, 0}, c);
    return to_string(s);
}

std::string to_string(StepCase c)
{
    switch (c) {
    case StepCase::a:
        return "a";
    case StepCase::b1:
        return "b1";
    case StepCase::b2:
        return "b2";
    }
    return "?";
}

namespace {

void require_step_input(const CompositionD& d)
{
    const int k = d.k();
    if (d.d(1) != 0)
        throw UsageError("decompose_step: d_1 != 0; strip one-dimensional factors first");
    if (d.d(k + 1) > 1)
        throw UsageError("decompose_step: requires d_{k+1} <= 1, got " + to_string(d));
    if (d.nontrivial() < 2)
        throw UsageError("decompose_step: requires d_2 + ... + d_{k+1} >= 2, got " + to_string(d));
}

CompositionD wrap_top(CompositionD d)
{
    d.d(d.k() + 1) %= 2;
    return d;
}

Integer measure(const CompositionD& d)
{
    Integer m = 1;
    for (int i = 2; i <= d.k() + 1; ++i) {
        for (int c = 0; c < d.d(i); ++c)
            m *= i;
    }
    return m;
}

}  // namespace

DecompositionStep decompose_step(const CompositionD& d)
{
    require_step_input(d);
    const int k = d.k();
    DecompositionStep step;
    int l = 2;
    while (d.d(l) == 0)
        ++l;
    step.l = l;
    const int p = parity_count(d);

    if (d.d(l) >= 2) {
        step.case_tag = StepCase::a;
        CompositionD dp = d;
        dp.d(l) -= 2;
        CompositionD dpp = d;
        dpp.d(l - 1) += 1;
        dpp.d(l) -= 2;
        dpp.d(l + 1) += 1;
        dpp = wrap_top(dpp);
        step.shift_q4 = parity_count(dpp) - p + 2 * (d.d(l) - 1);
        step.d_prime = dp.stripped();
        step.d_doubleprime = dpp.stripped();
    } else {
        int l1 = l + 1;
        while (d.d(l1) == 0)
            ++l1;
        step.l1 = l1;
        // Updates applied in order to one copy, so index collisions compose.
        CompositionD dp = d;
        dp.d(l) -= 1;
        dp.d(l1) -= 1;
        dp.d(l1 - l + 1) += 1;
        step.d_prime = dp.stripped();
        if (l1 <= k) {
            step.case_tag = StepCase::b1;
            CompositionD dpp = d;
            dpp.d(l - 1) += 1;
            dpp.d(l) = 0;
            dpp.d(l1) -= 1;
            dpp.d(l1 + 1) += 1;
            dpp = wrap_top(dpp);
            step.shift_q4 = parity_count(dpp) - p + 2 * d.d(l1);
            step.d_doubleprime = dpp.stripped();
        } else {
            step.case_tag = StepCase::b2;
        }
    }
    if (step.shift_q4 && *step.shift_q4 < 0) {
        throw InvariantError("decompose_step: negative q-shift " + std::to_string(*step.shift_q4) +
                             " for D=" + to_string(d));
    }
    return step;
}

namespace {

void decompose_into(const CompositionD& d, int shift_q4, std::vector<GradedMultiplicity>& out)
{
    if (d.nontrivial() <= 1) {
        int j = 0;
        for (int i = 2; i <= d.k() + 1; ++i) {
            if (d.d(i) == 1)
                j = i - 1;
        }
        out[static_cast<std::size_t>(j)].add(shift_q4, 1);
        return;
    }
    const auto step = decompose_step(d);
    const Integer m = measure(d);
    if (!(measure(step.d_prime) < m) ||
        (step.d_doubleprime && !(measure(*step.d_doubleprime) < m))) {
        throw InvariantError("decompose_full: termination measure did not decrease at D=" +
                             to_string(d));
    }
    decompose_into(step.d_prime, shift_q4, out);
    if (step.d_doubleprime)
        decompose_into(*step.d_doubleprime, shift_q4 + *step.shift_q4, out);
}

}  // namespace

std::vector<GradedMultiplicity> decompose_full(const CompositionD& d)
{
    const int k = d.k();
    if (d.d(1) != 0)
        throw UsageError("decompose_full: d_1 != 0; strip one-dimensional factors first");
    if (d.d(k + 1) > 1)
        throw UsageError("decompose_full: requires d_{k+1} <= 1, got " + to_string(d));
    std::vector<GradedMultiplicity> out(static_cast<std::size_t>(k) + 1);
    decompose_into(d, 0, out);
    return out;
}

bool kostka_verlinde_check(const CompositionD& d)
{
    const auto ks = decompose_full(d);
    const auto c = verlinde_coefficients(d);
    for (std::size_t j = 0; j < ks.size(); ++j) {
        if (ks[j].at_one() != c[j])
            return false;
    }
    return true;
}

namespace {

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

IdentityReport decch_identity_check(const CompositionD& d_base, int s, int qmax4)
{
    const int k = d_base.k();
    if (s < 2 || s > k)
        throw UsageError("decch_identity_check: need 2 <= s <= k");
    CompositionD d = d_base;
    d.d(s) += 2;
    if (d.d(k + 1) > 1)
        throw UsageError("decch_identity_check: D = D_base + 2e_s must have d_{k+1} <= 1");
    CompositionD dpp = d_base;
    dpp.d(s - 1) += 1;
    dpp.d(s + 1) += 1;
    dpp = wrap_top(dpp);
    const int shift = parity_count(dpp) - parity_count(d) + 2 * (d_base.d(s) + 1);
    const BiSeries lhs = ld_character(d.stripped(), qmax4);
    BiSeries rhs = ld_character(d_base.stripped(), qmax4);
    rhs += monomial_shift(ld_character(dpp.stripped(), qmax4), shift, 0);
    return compare(lhs, rhs,
                   "D=" + to_string(d) + " D'=" + to_string(d_base) + " D''=" + to_string(dpp));
}

IdentityReport decfun_identity_check(const CompositionD& d, int qmax4)
{
    const auto step = decompose_step(d);
    const BiSeries lhs = ld_character(d, qmax4);
    BiSeries rhs = ld_character(step.d_prime, qmax4);
    if (step.d_doubleprime)
        rhs += monomial_shift(ld_character(*step.d_doubleprime, qmax4), *step.shift_q4, 0);
    return compare(lhs, rhs, "case " + to_string(step.case_tag) + " D=" + to_string(d));
}

IdentityReport reconstruction_check(const CompositionD& d, int qmax4)
{
    const auto ks = decompose_full(d);
    const int k = d.k();
    BiSeries rhs(qmax4);
    for (int j = 0; j <= k; ++j) {
        const auto& kj = ks[static_cast<std::size_t>(j)];
        if (kj.empty())
            continue;
        const BiSeries irrep = irrep_character({j, k}, qmax4);
        for (const auto& [e, c] : kj.terms())
            rhs += series_scale(monomial_shift(irrep, e, 0), c);
    }
    return compare(ld_character(d, qmax4), rhs, "D=" + to_string(d));
}

}  // namespace fusion
