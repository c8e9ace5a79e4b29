#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusion/composition.hpp"
#include "fusion/qseries.hpp"

namespace fusion {

/// Polynomial in q with quarter-integer exponents and positive coefficients:
/// the graded multiplicity of one irreducible component.
class GradedMultiplicity {
public:
    using TermMap = std::map<int, Integer>;

    GradedMultiplicity() = default;

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Accumulates c q^{q4/4}.
    void add(int q4, const Integer& c);
    void add_shifted(const GradedMultiplicity& other, int shift_q4);

    /// Value at q = 1.
    Integer at_one() const;

    friend bool operator==(const GradedMultiplicity&, const GradedMultiplicity&) = default;

private:
    TermMap terms_;
};

/// E.g. "1", "q", "1 + q", "q^(1/2) + 2*q^(3/2)".
std::string to_string(const GradedMultiplicity& k);

enum class StepCase { a, b1, b2 };

std::string to_string(StepCase c);

/// One step of the recursive decomposition of L^D.
struct DecompositionStep {
    StepCase case_tag = StepCase::a;
    int l = 0;
    std::optional<int> l1;
    CompositionD d_prime;
    std::optional<CompositionD> d_doubleprime;
    std::optional<int> shift_q4;
};

/// Requires d_1 = 0, d_{k+1} <= 1 and d_2 + ... + d_{k+1} >= 2. With
/// l = min{m >= 2 : d_m != 0}, the result satisfies
///   ch L^D = ch L^{D'} + q^{shift/4} ch L^{D''}
/// (the second term absent in case b2). D'' always has its top entry reduced
/// mod 2. A negative shift raises InvariantError.
DecompositionStep decompose_step(const CompositionD& d);

/// K_0, ..., K_k with ch L^D = sum_j K_j(q) ch L_{j,k}.
std::vector<GradedMultiplicity> decompose_full(const CompositionD& d);

/// K_j(1) == c_{j+1,D} for all j.
bool kostka_verlinde_check(const CompositionD& d);

/// Outcome of an exact truncated identity check; `detail` names the first
/// mismatching coefficient on failure.
struct IdentityReport {
    bool holds = true;
    std::string detail;
};

/// With D = D_base + 2 e_s, D' = D_base and D'' = D_base + e_{s-1} + e_{s+1}
/// (top entry mod 2), checks
///   ch L^D = ch L^{D'} + q^{(p(D'') - p(D))/4 + (d_s + 1)/2} ch L^{D''},
/// d_s taken from D_base. Requires 2 <= s <= k and D with top entry <= 1.
IdentityReport decch_identity_check(const CompositionD& d_base, int s, int qmax4);

/// Checks the identity of decompose_step(D) on characters at qmax4.
IdentityReport decfun_identity_check(const CompositionD& d, int qmax4);

/// Checks ch L^D == sum_j K_j ch L_{j,k} at qmax4.
IdentityReport reconstruction_check(const CompositionD& d, int qmax4);

}  // namespace fusion
