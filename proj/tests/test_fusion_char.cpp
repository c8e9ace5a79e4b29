#include <doctest.h>

#include <fusion/affine_char.hpp>
#include <fusion/errors.hpp>
#include <fusion/fusion_char.hpp>

using namespace fusion;

TEST_SUITE("fusion_char")
{
    TEST_CASE("conversions between A and D")
    {
        CHECK(dvector_of(AVector({2, 2, 3})) == CompositionD({0, 2, 1}));
        CHECK(avector_of(CompositionD({0, 2, 0}), 2) == AVector({2, 2, 3, 3}));
        for (const auto& a : avectors_up_to(60, 2))
            CHECK(avector_of(dvector_of(a)) == a);
        CHECK(AVector({3, 2}) == AVector({2, 3}));
        CHECK_THROWS_AS(AVector({0, 2}), UsageError);
    }

    TEST_CASE("dimension")
    {
        CHECK(fusion_dimension(AVector({2, 2})) == 4);
        CHECK(fusion_dimension(AVector({1, 1, 1})) == 1);
        CHECK(fusion_dimension(AVector({2, 3})) == 6);
    }

    TEST_CASE("fusion character examples")
    {
        CHECK(to_string(fusion_character(AVector({2}), 40)) == "1 + z");
        CHECK(to_string(fusion_character(AVector({2, 2}), 40)) == "1 + z + z*q + z^2*q^2");
        CHECK(specialize_q1_z1(fusion_character(AVector({2, 3}), 40)) == 6);
        CHECK_THROWS_AS(fusion_character(AVector({1, 2}), 40), UsageError);
    }

    TEST_CASE("dimension formula for every A with product at most 60")
    {
        for (const auto& a : avectors_up_to(60)) {
            CAPTURE(to_string(a));
            const auto ch = fusion_character(a, 4000);
            REQUIRE(ch.finite());
            CHECK(specialize_q1_z1(ch) == fusion_dimension(a));
        }
    }

    TEST_CASE("M^A examples")
    {
        const auto m = m_character(CompositionD({0, 2}), 40);
        CHECK(to_string(m) == "1 + z^-1*q + q + z*q");
        const auto w = wA_degrees(CompositionD({0, 2}));
        CHECK(m.coefficient(w.q4, w.z2) == 1);
        CHECK(specialize_q1_z1(m) == 4);
        CHECK(specialize_q1_z1(m_character(CompositionD({0, 0, 1}), 40)) == 3);
        CHECK_THROWS_AS(m_character(CompositionD({1, 2}), 40), UsageError);
    }

    TEST_CASE("M^A is W^A regraded")
    {
        // M^A is spanned from w_A by e_{-n+1}, ..., e_0 where W^A uses
        // e_0, ..., e_{n-1}: substitute z -> z q^{-(n-1)} and move the cyclic
        // vector to the degrees of w_A.
        for (const auto& a : avectors_up_to(60)) {
            const auto d = dvector_of(a);
            CAPTURE(to_string(a));
            const auto w = wA_degrees(d);
            const int qmax4 = 80;
            const auto fused = fusion_character(a, 20000);
            REQUIRE(fused.finite());
            const auto moved = monomial_shift(substitute_z(fused, -2 * (a.size() - 1)), w.q4, w.z2);
            CHECK(moved.truncated(qmax4) == m_character(d, qmax4));
        }
    }

    TEST_CASE("W^{A_infinity} examples")
    {
        const auto w = w_infinity_character(CompositionD::zero(1), 60);
        CHECK(w.coefficient(0, 0) == 1);
        for (int d = 0; d <= 15; ++d)
            CHECK(w.coefficient(4 * d, 2) == 1);
        CHECK(w.coefficient(8, 4) == 1);
        CHECK(w.coefficient(12, 4) == 1);
        CHECK(w.coefficient(16, 4) == 2);
        CHECK(w.coefficient(4, 4) == 0);
    }

    TEST_CASE("M^{A_s} grows with s")
    {
        for (int k = 1; k <= 3; ++k) {
            for (const auto& d : compositions_up_to(k, 3, 1)) {
                CAPTURE(to_string(d));
                std::optional<BiSeries> prev;
                for (int s = 0; s <= 6; ++s) {
                    const auto cur = m_character(d.with_top(2 + 2 * s), 32);
                    if (prev) {
                        std::string where;
                        CHECK_MESSAGE(coefficientwise_le(*prev, cur, &where), where);
                    }
                    prev = cur;
                }
            }
        }
    }

    TEST_CASE("enumeration bounds are sound")
    {
        for (const auto& d : compositions_up_to(2, 3, 3)) {
            CHECK(m_character(d, 120).truncated(40) == m_character(d, 40));
            CHECK(w_infinity_character(d, 120).truncated(40) == w_infinity_character(d, 40));
        }
        for (const auto& a : avectors_up_to(30))
            CHECK(fusion_character(a, 200).truncated(20) == fusion_character(a, 20));
    }
}
