#pragma once

#include <string>
#include <vector>

#include "fusion/composition.hpp"
#include "fusion/qseries.hpp"

namespace fusion {

/// Element of the Verlinde algebra V_m in the basis pi_1, ..., pi_m.
/// coeffs()[i-1] is the coefficient of pi_i.
class VerlindeElement {
public:
    explicit VerlindeElement(int m);

    static VerlindeElement basis(int m, int i);
    static VerlindeElement identity(int m) { return basis(m, 1); }

    int m() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
    Integer& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i - 1)); }

    VerlindeElement& operator+=(const VerlindeElement& other);

    friend bool operator==(const VerlindeElement&, const VerlindeElement&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Truncated sl2 Clebsch-Gordan rule: for i <= j,
/// pi_i pi_j = sum of pi_t, t = j-i+1, j-i+3, ..., min(i+j-1, 2m+1-i-j).
VerlindeElement fusion_multiply(const VerlindeElement& x, const VerlindeElement& y);

inline VerlindeElement operator*(const VerlindeElement& x, const VerlindeElement& y)
{
    return fusion_multiply(x, y);
}
VerlindeElement operator+(const VerlindeElement& x, const VerlindeElement& y);

/// pi_1^{d_1} ... pi_{k+1}^{d_{k+1}} in V_{k+1}.
VerlindeElement pi_D(const CompositionD& d);

/// (c_{1,D}, ..., c_{k+1,D}).
std::vector<Integer> verlinde_coefficients(const CompositionD& d);

/// One failed relation among the four standard identities of V_m.
struct VerlindeFailure {
    std::string identity;
    int i = 0;
    int j = 0;
};

/// Checks, in V_m, for all admissible i, j:
///   pi_m^2 = pi_1,
///   pi_i^2 = pi_1 + pi_{i-1} pi_{i+1}              (1 < i < m),
///   pi_i pi_j = pi_{j-i+1} + pi_{i-1} pi_{j+1}     (1 < i <= j < m),
///   pi_i pi_m = pi_{m-i+1}                          (1 <= i <= m).
std::vector<VerlindeFailure> verlinde_identity_failures(int m);

std::string to_string(const VerlindeElement& x);

}  // namespace fusion
