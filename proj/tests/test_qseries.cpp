#include <doctest.h>

#include <random>

#include <fusion/errors.hpp>
#include <fusion/qseries.hpp>

using namespace fusion;

namespace {

BiSeries poly(int qmax4, std::initializer_list<std::tuple<int, int, int>> terms)
{
    BiSeries s(qmax4);
    for (const auto& [q4, z2, c] : terms)
        s.add_term({q4, z2}, c);
    return s;
}

BiSeries random_series(std::mt19937& rng, int qmax4, int min_q4, int max_q4)
{
    std::uniform_int_distribution<int> q(min_q4, max_q4);
    std::uniform_int_distribution<int> z(-6, 6);
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<int> n(0, 12);
    BiSeries s(qmax4);
    const int count = n(rng);
    for (int t = 0; t < count; ++t)
        s.add_term({q(rng), z(rng)}, c(rng));
    return s;
}

// Brute-force partition counts p(0..n).
std::vector<long> partitions(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m)
            p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
    }
    return p;
}

}  // namespace

TEST_SUITE("qseries")
{
    TEST_CASE("addition")
    {
        const auto a = poly(40, {{0, 0, 1}, {4, 0, 1}});
        const auto b = poly(40, {{4, 0, 1}});
        CHECK(a + b == poly(40, {{0, 0, 1}, {4, 0, 2}}));
        CHECK(a + BiSeries(40) == a);
        const auto top = poly(40, {{40, 0, 1}}) + poly(40, {{44, 0, 1}});
        CHECK(top == poly(40, {{40, 0, 1}}));
        CHECK_FALSE(top.finite());
    }

    TEST_CASE("zero coefficients are never stored")
    {
        auto a = poly(20, {{4, 2, 3}});
        a.add_term({4, 2}, -3);
        CHECK(a.empty());
        CHECK((poly(20, {{0, 0, 1}}) - poly(20, {{0, 0, 1}})).empty());
    }

    TEST_CASE("mismatched bounds are usage errors")
    {
        CHECK_THROWS_AS(BiSeries(4) + BiSeries(8), UsageError);
        CHECK_THROWS_AS(BiSeries(4) * BiSeries(8), UsageError);
    }

    TEST_CASE("multiplication")
    {
        const auto a = poly(40, {{0, 0, 1}, {4, 0, 1}});
        const auto b = poly(40, {{0, 0, 1}, {4, 0, -1}});
        CHECK(a * b == poly(40, {{0, 0, 1}, {8, 0, -1}}));
        CHECK(a * BiSeries::one(40) == a);
        const auto h = BiSeries::monomial(40, {1, 1});
        CHECK(h * h == BiSeries::monomial(40, {2, 2}));
    }

    TEST_CASE("inexact products are refused")
    {
        auto inf = euler_inverse(16);
        const auto neg = BiSeries::monomial(16, {-4, 0});
        CHECK_THROWS_AS(inf * neg, UsageError);
        CHECK_NOTHROW(monomial_shift(inf, 4, 0));
        CHECK_THROWS_AS(monomial_shift(inf, -4, 0), UsageError);
    }

    TEST_CASE("monomial shift")
    {
        CHECK(monomial_shift(BiSeries::one(40), -1, 0) == BiSeries::monomial(40, {-1, 0}));
        const auto a = poly(40, {{0, 0, 1}, {4, 2, 1}});
        CHECK(monomial_shift(a, 4, 1) == poly(40, {{4, 1, 1}, {8, 3, 1}}));
        CHECK(monomial_shift(a, 0, 0) == a);
    }

    TEST_CASE("q-factorial")
    {
        CHECK(q_factorial(0, 40) == BiSeries::one(40));
        CHECK(q_factorial(2, 40) == poly(40, {{0, 0, 1}, {4, 0, -1}, {8, 0, -1}, {12, 0, 1}}));
        CHECK(specialize_q1_z1(q_factorial(3, 40)) == 0);
    }

    TEST_CASE("q-binomial examples")
    {
        CHECK(q_binomial(5, 0, 40) == BiSeries::one(40));
        CHECK(q_binomial(2, 1, 40) == poly(40, {{0, 0, 1}, {4, 0, 1}}));
        CHECK(q_binomial(4, 2, 40) ==
              poly(40, {{0, 0, 1}, {4, 0, 1}, {8, 0, 2}, {12, 0, 1}, {16, 0, 1}}));
        CHECK(q_binomial(3, -1, 40).empty());
        CHECK(q_binomial(3, 4, 40).empty());
        CHECK(specialize_q1_z1(q_binomial(2, 1, 40)) == 2);
    }

    TEST_CASE("q-binomial symmetry and Pascal rule")
    {
        const int qmax4 = 200;
        for (int n = 0; n <= 10; ++n) {
            for (int k = 0; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(q_binomial(n, k, qmax4) == q_binomial(n, n - k, qmax4));
                if (n >= 1) {
                    const auto rhs = q_binomial(n - 1, k - 1, qmax4) +
                                     monomial_shift(q_binomial(n - 1, k, qmax4), 4 * k, 0);
                    CHECK(q_binomial(n, k, qmax4) == rhs);
                }
                // Exact polynomial identity (n)! = [n k] (k)! (n-k)!.
                CHECK(q_binomial(n, k, qmax4) * q_factorial(k, qmax4) * q_factorial(n - k, qmax4) ==
                      q_factorial(n, qmax4));
            }
        }
    }

    TEST_CASE("Euler inverse is the partition generating function")
    {
        const int n = 40;
        const auto e = euler_inverse(4 * n);
        const auto p = partitions(n);
        for (int d = 0; d <= n; ++d)
            CHECK(e.coefficient(4 * d, 0) == p[static_cast<std::size_t>(d)]);
        CHECK(e.coefficient(-4, 0) == 0);
        CHECK(e.coefficient(2, 0) == 0);
        for (int big_n : {5, 10, 40}) {
            const auto prod = e * q_factorial(big_n, 4 * n);
            for (const auto& [ex, c] : prod.terms()) {
                if (ex.q4 <= 4 * big_n)
                    CHECK(((ex.q4 == 0 && c == 1) || c == 0));
            }
        }
        CHECK_FALSE(e.finite());
    }

    TEST_CASE("inverse q-factorial")
    {
        for (int n = 0; n <= 6; ++n)
            CHECK(inverse_q_factorial(n, 80) * q_factorial(n, 80) == BiSeries::one(80));
    }

    TEST_CASE("specialization")
    {
        CHECK(specialize_q1_z1(poly(40, {{0, 0, 1}, {0, 2, 1}, {4, 2, 1}, {8, 4, 1}})) == 4);
        CHECK(specialize_q1_z1(BiSeries(40)) == 0);
        CHECK_THROWS_AS(specialize_q1_z1(euler_inverse(40)), UsageError);
    }

    TEST_CASE("ring axioms on random series")
    {
        std::mt19937 rng(20261016);
        for (int trial = 0; trial < 200; ++trial) {
            // Small enough that no product reaches the bound.
            const int qmax4 = 40;
            const auto a = random_series(rng, qmax4, -6, 12);
            const auto b = random_series(rng, qmax4, -6, 12);
            const auto c = random_series(rng, qmax4, -6, 12);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a - a == BiSeries(qmax4));
        }
    }

    TEST_CASE("truncation coherence")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_series(rng, 40, 0, 48);
            const auto b = random_series(rng, 40, 0, 48);
            const auto e = euler_inverse(40);
            for (int lower : {0, 7, 20}) {
                CHECK((a * b).truncated(lower) == a.truncated(lower) * b.truncated(lower));
                CHECK((a + b).truncated(lower) == a.truncated(lower) + b.truncated(lower));
                CHECK((a * e).truncated(lower) == a.truncated(lower) * euler_inverse(lower));
            }
        }
        for (int n = 0; n <= 6; ++n) {
            CHECK(q_binomial(8, n, 60).truncated(13) == q_binomial(8, n, 13));
            CHECK(inverse_q_factorial(n, 60).truncated(13) == inverse_q_factorial(n, 13));
        }
    }

    TEST_CASE("json round trip and ordering")
    {
        const auto a = poly(12, {{4, 1, 3}, {-1, 0, -2}, {4, -1, 1}});
        const std::string text = to_json(a);
        CHECK(text ==
              R"({"qmax4":12,"terms":[{"q4":-1,"z2":0,"c":"-2"},{"q4":4,"z2":-1,"c":"1"},{"q4":4,"z2":1,"c":"3"}]})");
        CHECK(series_from_json(text) == a);
        CHECK_THROWS_AS(series_from_json("{"), UsageError);
        Integer huge;
        huge.set_str("123456789012345678901234567890", 10);
        const auto big = BiSeries::monomial(4, {0, 0}, huge);
        CHECK(series_from_json(to_json(big)).coefficient(0, 0) == huge);
    }

    TEST_CASE("rendering")
    {
        CHECK(to_string(poly(40, {{0, 0, 1}, {0, 2, 1}, {4, 2, 1}, {8, 4, 1}})) == "1 + z + z*q + z^2*q^2");
        CHECK(to_string(BiSeries::monomial(8, {0, -1})) == "z^(-1/2)");
        CHECK(to_string(BiSeries(8)) == "0");
    }

    TEST_CASE("coefficientwise comparison")
    {
        const auto a = poly(8, {{0, 0, 1}});
        const auto b = poly(8, {{0, 0, 2}, {4, 0, 1}});
        CHECK(coefficientwise_le(a, b));
        std::string where;
        CHECK_FALSE(coefficientwise_le(b, a, &where));
        CHECK(where.find("q4=0") != std::string::npos);
        CHECK(first_difference(a, a) == "none");
    }
}
