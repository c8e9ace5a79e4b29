#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fusion {

using Integer = mpz_class;

/// Exponent of the monomial q^{q4/4} z^{z2/2}.
struct ExponentPair {
    int q4 = 0;
    int z2 = 0;

    auto operator<=>(const ExponentPair&) const = default;
};

/**
 * Truncated bivariate series in q and z with exact integer coefficients.
 *
 * Exponents are scaled integers: q-exponents in quarters, z-exponents in
 * halves. Every stored term satisfies q4 <= qmax4 and no stored coefficient
 * is zero. The truncation bound travels with the value; binary operations on
 * series with different bounds are usage errors.
 *
 * A series is "finite" when no nonzero term has ever been discarded by the
 * truncation, i.e. the term map is the whole object and not just a prefix.
 */
class BiSeries {
public:
    using TermMap = std::map<ExponentPair, Integer>;

    explicit BiSeries(int qmax4) : qmax4_(qmax4) {}

    static BiSeries one(int qmax4);
    static BiSeries monomial(int qmax4, ExponentPair e, const Integer& c = 1);

    int qmax4() const { return qmax4_; }
    bool finite() const { return finite_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coefficient(int q4, int z2) const;
    std::optional<int> min_q4() const;

    /// Accumulates c * q^{q4/4} z^{z2/2}; terms above the bound are dropped.
    void add_term(ExponentPair e, const Integer& c);

    /// Accumulates scale * sum_d coeffs[d] q^{(q4 + 4d)/4} z^{z2/2}, i.e. a
    /// z-free integer-degree series placed at a base monomial.
    void add_univariate(ExponentPair base, const std::vector<Integer>& coeffs,
                        const Integer& scale = 1);

    /// Declares that the represented object extends beyond the bound.
    void mark_infinite() { finite_ = false; }

    /// Restriction to a lower (or equal) bound.
    BiSeries truncated(int new_qmax4) const;

    BiSeries& operator+=(const BiSeries& other);
    BiSeries& operator-=(const BiSeries& other);

    friend bool operator==(const BiSeries& a, const BiSeries& b);

private:
    int qmax4_;
    bool finite_ = true;
    TermMap terms_;
};

BiSeries series_add(const BiSeries& a, const BiSeries& b);
BiSeries series_sub(const BiSeries& a, const BiSeries& b);
BiSeries series_mul(const BiSeries& a, const BiSeries& b);
BiSeries series_scale(const BiSeries& a, const Integer& c);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return series_add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return series_sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return series_mul(a, b); }

/// Multiplies by q^{dq4/4} z^{dz2/2}. Shifting a non-finite series downwards
/// would expose coefficients that were never computed and is rejected.
BiSeries monomial_shift(const BiSeries& a, int dq4, int dz2);

/// Substitution z -> z q^{dq4_per_z2 / 2}: a term at (q4, z2) moves to
/// (q4 + dq4_per_z2 * z2, z2). Same exactness rule as monomial_shift.
BiSeries substitute_z(const BiSeries& a, int dq4_per_z2);

/// prod_{i=1}^{n} (1 - q^i).
BiSeries q_factorial(int n, int qmax4);

/// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
BiSeries q_binomial(int n, int k, int qmax4);

/// 1 / prod_{i>=1} (1 - q^i) = sum_n p(n) q^n.
BiSeries euler_inverse(int qmax4);

/// 1 / (n)_q!  (infinite series for n >= 1).
BiSeries inverse_q_factorial(int n, int qmax4);

/// Sum of all coefficients. Only meaningful on a finite series.
Integer specialize_q1_z1(const BiSeries& a);

/// {"qmax4": int, "terms": [{"q4": int, "z2": int, "c": "decimal"}]}, terms
/// sorted by (q4, z2).
std::string to_json(const BiSeries& a);
BiSeries series_from_json(const std::string& text);

/// Human-readable rendering, e.g. "1 + z + z*q + z^2*q^2".
std::string to_string(const BiSeries& a);

/// First exponent (in term order) where the coefficients differ, rendered
/// as "(q4=.., z2=..): a vs b"; "none" when the term maps agree.
std::string first_difference(const BiSeries& a, const BiSeries& b);

/// True when every coefficient of a is <= the matching one of b. On failure
/// `where` (if given) receives the first offending exponent.
bool coefficientwise_le(const BiSeries& a, const BiSeries& b, std::string* where = nullptr);

/// Dense integer-degree q-series helpers used by the character sums.
namespace univariate {

/// Coefficients of [n choose k]_q (exact polynomial).
std::vector<Integer> q_binomial(int n, int k);

/// Coefficients of 1/(n)_q! for degrees 0..max_degree.
std::vector<Integer> inverse_q_factorial(int n, int max_degree);

/// In place: s <- s / (n)_q!, keeping the length of s.
void divide_by_q_factorial(std::vector<Integer>& s, int n);

/// Product of two dense series truncated at max_degree.
std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b,
                              int max_degree);

}  // namespace univariate

}  // namespace fusion
