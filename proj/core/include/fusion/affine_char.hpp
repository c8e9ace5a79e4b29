#pragma once

#include <vector>

#include "fusion/composition.hpp"
#include "fusion/qseries.hpp"

namespace fusion {

/// Highest weight j of the level-k irreducible L_{j,k}.
struct HighestWeightLabel {
    int j = 0;
    int k = 1;
};

/// (2 alpha_1, ..., 2 alpha_k) with 2 alpha_i = d_{i+1} + ... + d_{k+1}.
std::vector<int> alpha_vector(const CompositionD& d);

/// p(D): the number of half-integral alpha_i.
int parity_count(const CompositionD& d);

/// Bidegree of w_A: q4 = sum (2 alpha_i)^2 - p(D), z2 = -sum 2 alpha_i.
ExponentPair wA_degrees(const CompositionD& d);

/// Character of L^D (d_{k+1} <= 1; d_1 is ignored).
BiSeries ld_character(const CompositionD& d, int qmax4);

/// Character of the irreducible L_{j,k}.
BiSeries irrep_character(const HighestWeightLabel& label, int qmax4);

struct StabilizationResult {
    int s_min = 0;            ///< first s with ch M^{A_s} equal to ch L^D
    int steps_checked = 0;    ///< number of s values evaluated
};

/// Evaluates ch M^{A_s} for s = 0, 1, ... (A_s has d_{k+1} + 2 + 2s top
/// factors), checking coefficientwise monotonicity in s and domination by
/// ch L^D, until the value equals ch L^D at two consecutive s. Throws
/// InvariantError on a monotonicity failure or when s_cap (default: qmax4)
/// is exhausted.
StabilizationResult stabilization_check(const CompositionD& d, int qmax4, int s_cap = -1);

}  // namespace fusion
