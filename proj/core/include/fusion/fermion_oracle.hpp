#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusion/composition.hpp"
#include "fusion/decomposer.hpp"
#include "fusion/qseries.hpp"

namespace fusion {

using Rational = mpq_class;

/// One factor F of the fermionic space: a semi-infinite monomial in the
/// fermions psi(i), phi(i). Every fermion with index <= floor() is present;
/// presence above the floor is tracked in a window of `window` indices.
/// Operations that need an index at or below the floor, or above the
/// window, throw CutoffError instead of approximating.
///
/// Sign convention: fermions act by right multiplication and the canonical
/// order is index ascending with psi(i) before phi(i); bringing a fermion
/// into place costs (-1)^(number of present fermions later in that order).
class Configuration {
public:
    static constexpr int window = 128;

    /// The vacuum v(0) = ...psi(-1) phi(-1) psi(0) with tale below -depth.
    explicit Configuration(int depth);

    /// v(m): psi(<= floor(m/2)) and phi(<= floor((m-1)/2)).
    static Configuration extremal(int m, int depth);

    int floor() const { return floor_; }
    bool has_psi(int i) const;
    bool has_phi(int i) const;

    /// Largest N such that every psi(i), phi(i) with i <= N is present.
    int tale_level() const;
    /// Present fermions above the tale level.
    std::vector<int> extra_psi() const;
    std::vector<int> extra_phi() const;

    /// (q4, z2) relative to v(0): z2 is the fermion count difference, q4 is
    /// 4 times the sum of added indices minus the sum of removed ones.
    ExponentPair degrees() const;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
    friend bool operator==(const Configuration&, const Configuration&) = default;

    // Raw fermion moves; nullopt when the result vanishes.
    struct Signed;
    std::optional<Signed> psi(int i) const;       ///< create psi(i)
    std::optional<Signed> phi(int i) const;       ///< create phi(i)
    std::optional<Signed> psi_star(int i) const;  ///< remove psi(-i)
    std::optional<Signed> phi_star(int i) const;  ///< remove phi(-i)

private:
    __extension__ using Mask = unsigned __int128;

    Configuration() = default;
    int bit(int index) const { return index - floor_ - 1; }
    bool present(const Mask& m, int index) const;
    int larger_keys(int index, bool is_phi) const;
    std::optional<Signed> create(int index, bool is_phi) const;
    std::optional<Signed> remove(int index, bool is_phi) const;

    int floor_ = 0;
    Mask psi_ = 0;
    Mask phi_ = 0;
};

struct Configuration::Signed {
    Configuration config;
    int sign = 1;
};

/// Make the extremal vector v(m) (same as Configuration::extremal).
Configuration make_extremal(int m, int depth);

/// Linear combination of configurations of one factor.
using FactorVector = std::map<Configuration, Integer>;

/// e_i = sum_{a+b=i} psi(a) phi(b), f_i = sum_{a+b=i} psi*(a) phi*(b) and
/// h_i = [e_i, f_0] on a single factor.
FactorVector factor_e(int i, const Configuration& c);
FactorVector factor_f(int i, const Configuration& c);
FactorVector factor_h(int i, const Configuration& c);

/// Finite linear combination of tensor products of configurations with
/// rational coefficients. The factors commute with each other (no signs).
class FockVector {
public:
    using Key = std::vector<Configuration>;
    using TermMap = std::map<Key, Rational>;

    FockVector() = default;
    static FockVector tensor(const std::vector<int>& extremal_charges, int depth);

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    void add(const Key& key, const Rational& c);

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    TermMap terms_;
};

enum class Current { e, f, h };

/// Applies x_i (x = e, f or h) to tensor factor `factor` (1-based) of v.
FockVector apply_current(Current x, int i, int factor, const FockVector& v);
inline FockVector apply_e(int i, int factor, const FockVector& v) { return apply_current(Current::e, i, factor, v); }
inline FockVector apply_f(int i, int factor, const FockVector& v) { return apply_current(Current::f, i, factor, v); }
inline FockVector apply_h(int i, int factor, const FockVector& v) { return apply_current(Current::h, i, factor, v); }

/// Applies x_i to the whole tensor product (sum over factors).
FockVector apply_current(Current x, int i, const FockVector& v);

/// v_A = v(-1 + d_1) (x) v(-1 + d_1 + d_2) (x) ... (k factors).
FockVector make_vA(const AVector& a, int depth);
/// w_A = v(-beta_1) (x) ... (x) v(-beta_k), beta_i = d_{i+1} + ... + d_{k+1}.
FockVector make_wA(const CompositionD& d, int depth);

/// dim C[e_0, ..., e_{n-1}] v_A.
Integer span_dimension(const AVector& a, int depth);

/// Bigraded dimensions of C[e_{-n+1}, ..., e_0] w_A in F^{(x)k}.
BiSeries graded_span_character(const AVector& a, int depth, int qmax4);

/// For i = 1..i_max, the coefficients of z^0 .. z^{S-1} in e^{(n)}(z)^i v_A
/// vanish, S = sum_j (i + 1 - a_j)_+ and e^{(n)}(z) = sum_{j<n} e_j z^j.
IdentityReport ideal_annihilation_check(const AVector& a, int i_max, int depth);

/// f_{-1}^{sum(beta_i + 1)} e_0^{sum(beta_i + 2)} w_{A_1} is a nonzero
/// multiple of w_A. On success `detail` holds the constant.
IdentityReport embedding_check(const CompositionD& d, int depth);

/// The closure of v(-b_1) (x) ... (x) v(-b_k) under e_{-i}, f_{-i}, h_{-i}
/// (i >= 0) has the character of M^A for the D with d_{j+1} = b_j - b_{j+1}
/// and d_{k+1} = b_k. Requires b_1 >= ... >= b_k >= 1.
IdentityReport extremal_module_check(const std::vector<int>& b, int depth, int qmax4);

/// Bigraded character of that closure.
BiSeries extremal_module_character(const std::vector<int>& b, int depth, int qmax4);

}  // namespace fusion
