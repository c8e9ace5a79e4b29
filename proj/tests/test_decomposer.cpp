#include <doctest.h>

#include <fusion/affine_char.hpp>
#include <fusion/decomposer.hpp>
#include <fusion/errors.hpp>
#include <fusion/verlinde.hpp>

using namespace fusion;

namespace {

GradedMultiplicity mono(int q4)
{
    GradedMultiplicity g;
    g.add(q4, 1);
    return g;
}

std::vector<CompositionD> family()
{
    std::vector<CompositionD> out;
    for (int k = 1; k <= 3; ++k) {
        for (auto& d : compositions_up_to(k, 4, 1))
            out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

TEST_SUITE("decomposer")
{
    TEST_CASE("case a")
    {
        const auto step = decompose_step(CompositionD({0, 2, 0}));
        CHECK(step.case_tag == StepCase::a);
        CHECK(step.l == 2);
        CHECK(step.d_prime == CompositionD({0, 0, 0}));
        REQUIRE(step.d_doubleprime);
        CHECK(*step.d_doubleprime == CompositionD({0, 0, 1}));
        CHECK(step.shift_q4 == 4);
    }

    TEST_CASE("case b2")
    {
        const auto step = decompose_step(CompositionD({0, 1, 1}));
        CHECK(step.case_tag == StepCase::b2);
        CHECK(step.l == 2);
        CHECK(step.l1 == 3);
        CHECK(step.d_prime == CompositionD({0, 1, 0}));
        CHECK_FALSE(step.d_doubleprime);
        CHECK_FALSE(step.shift_q4);
    }

    TEST_CASE("case b1 with an index collision")
    {
        const auto step = decompose_step(CompositionD({0, 1, 1, 0}));
        CHECK(step.case_tag == StepCase::b1);
        CHECK(step.l == 2);
        CHECK(step.l1 == 3);
        CHECK(step.d_prime == CompositionD({0, 1, 0, 0}));
        REQUIRE(step.d_doubleprime);
        CHECK(*step.d_doubleprime == CompositionD({0, 0, 0, 1}));
        CHECK(step.shift_q4 == 4);
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(decompose_step(CompositionD({1, 2, 0})), UsageError);
        CHECK_THROWS_AS(decompose_step(CompositionD({0, 0, 2})), UsageError);
        CHECK_THROWS_AS(decompose_step(CompositionD({0, 1, 0})), UsageError);
    }

    TEST_CASE("shifts are nonnegative, and zero shifts occur")
    {
        std::vector<std::string> zero;
        for (const auto& d : family()) {
            if (d.nontrivial() < 2)
                continue;
            const auto step = decompose_step(d);
            if (step.shift_q4) {
                CHECK(*step.shift_q4 >= 0);
                if (*step.shift_q4 == 0)
                    zero.push_back(to_string(d));
            }
        }
        CHECK(std::find(zero.begin(), zero.end(), "(0,2,1)") != zero.end());
        CHECK(std::find(zero.begin(), zero.end(), "(0,1,1,1)") != zero.end());
    }

    TEST_CASE("full decomposition examples")
    {
        const auto k = decompose_full(CompositionD({0, 2, 0}));
        REQUIRE(k.size() == 3);
        CHECK(k[0] == mono(0));
        CHECK(k[1].empty());
        CHECK(k[2] == mono(4));
        CHECK(to_string(k[2]) == "q");

        const auto b2 = decompose_full(CompositionD({0, 1, 1}));
        CHECK(b2[0].empty());
        CHECK(b2[1] == mono(0));
        CHECK(b2[2].empty());

        const auto c3 = decompose_full(CompositionD({0, 3, 0}));
        CHECK(to_string(c3[1]) == "1 + q");

        for (int k2 = 1; k2 <= 4; ++k2) {
            for (int j = 0; j <= k2; ++j) {
                CompositionD d = CompositionD::zero(k2);
                if (j > 0)
                    d.d(j + 1) = 1;
                const auto base = decompose_full(d);
                for (int i = 0; i <= k2; ++i)
                    CHECK(base[static_cast<std::size_t>(i)] == (i == j ? mono(0) : GradedMultiplicity{}));
            }
        }
    }

    TEST_CASE("worked instance: ch L^(0,2,0) = ch L_{0,2} + q ch L_{2,2}")
    {
        const int qmax4 = 80;
        const auto lhs = ld_character(CompositionD({0, 2, 0}), qmax4);
        const auto rhs = irrep_character({0, 2}, qmax4) + monomial_shift(irrep_character({2, 2}, qmax4), 4, 0);
        CHECK(lhs == rhs);
    }

    TEST_CASE("step identities over the family")
    {
        for (const auto& d : family()) {
            if (d.nontrivial() < 2)
                continue;
            CAPTURE(to_string(d));
            const auto r = decfun_identity_check(d, 80);
            CHECK_MESSAGE(r.holds, r.detail);
        }
    }

    TEST_CASE("reconstruction and Verlinde coefficients over the family")
    {
        for (const auto& d : family()) {
            CAPTURE(to_string(d));
            const auto r = reconstruction_check(d, 80);
            CHECK_MESSAGE(r.holds, r.detail);
            CHECK(kostka_verlinde_check(d));
            const auto ks = decompose_full(d);
            const auto c = verlinde_coefficients(d);
            for (std::size_t j = 0; j < ks.size(); ++j) {
                CHECK(ks[j].at_one() == c[j]);
                // One isotypic component is integer spaced.
                if (!ks[j].empty()) {
                    const int r0 = ((ks[j].terms().begin()->first % 4) + 4) % 4;
                    for (const auto& [q4, coef] : ks[j].terms()) {
                        CHECK(((q4 % 4) + 4) % 4 == r0);
                        CHECK(coef > 0);
                    }
                }
            }
        }
    }

    TEST_CASE("three-term identity for doubled entries")
    {
        CHECK(decch_identity_check(CompositionD({0, 0, 0}), 2, 60).holds);
        CHECK(decch_identity_check(CompositionD({0, 1, 0, 0}), 3, 60).holds);
        CHECK(decch_identity_check(CompositionD({0, 1, 0}), 2, 60).holds);
        int checked = 0;
        for (int k = 1; k <= 3; ++k) {
            for (const auto& base : compositions_up_to(k, 3, 3)) {
                for (int d1 = 0; d1 + base.total() <= 3; ++d1) {
                    CompositionD b = base;
                    b.d(1) = d1;
                    for (int s = 2; s <= k; ++s) {
                        if (b.d(k + 1) > 1)
                            continue;
                        CAPTURE(to_string(b));
                        CAPTURE(s);
                        const auto r = decch_identity_check(b, s, 60);
                        CHECK_MESSAGE(r.holds, r.detail);
                        ++checked;
                    }
                }
            }
        }
        CHECK(checked == 76);
    }

    TEST_CASE("stripping d_1 does not change the parity count")
    {
        for (const auto& d : compositions_up_to(3, 4, 1)) {
            CompositionD with_ones = d;
            with_ones.d(1) = 3;
            CHECK(parity_count(with_ones) == parity_count(d));
        }
    }
}
