#pragma once

#include <string>

#include "fusion/composition.hpp"
#include "fusion/decomposer.hpp"
#include "fusion/qseries.hpp"

namespace fusion {

/// Lower bound on the first index i^alpha_1 of level alpha, given
/// L = l_k + ... + l_{alpha+1} and the D-dependent constant c_alpha:
///   intro:    c_alpha + alpha L (L + 1)
///   section3: c_alpha + L (L + 1)
///   linear:   c_alpha + 2 alpha L
/// Indices within a level are spaced by at least 2 alpha. Only `linear`
/// reproduces the characters for k >= 2; the other two are kept for
/// comparison.
enum class LowerBound { intro, section3, linear };

std::string to_string(LowerBound b);
LowerBound parse_lower_bound(const std::string& name);

/// Counts of the monomials e^{alpha}(i) spanning W^{A_infinity}, by
/// bidegree: q-degree sum of all indices, z-degree sum of alpha l_alpha.
/// Here c_alpha = alpha d_1 + (alpha - 1) d_2 + ... + d_alpha.
BiSeries enumerate_winf_basis(const CompositionD& d, int qmax4,
                              LowerBound bound = LowerBound::linear);

/// Compares enumerate_winf_basis with w_infinity_character.
IdentityReport winf_basis_count_check(const CompositionD& d, int qmax4,
                                      LowerBound bound = LowerBound::linear);

/// Counts of the monomials spanning C[..., e_{-1}, e_0, e_1, ...] w_{A_s}
/// in the absolute grading, A_s having d_{k+1} + 2 + 2s top factors. Here
/// c_alpha = alpha - alpha (2 alpha_alpha) - d_2 - 2 d_3 - ... - (alpha - 1) d_alpha,
/// computed for A_s.
BiSeries enumerate_ld_basis(const CompositionD& d, int s, int qmax4,
                            LowerBound bound = LowerBound::linear);

/// Runs enumerate_ld_basis for s = 0, 1, ... checking monotonicity in s and
/// domination by ch L^D, until it equals ch L^D at two consecutive s.
/// Returns the first such s; throws InvariantError otherwise.
int ld_basis_stabilization(const CompositionD& d, int qmax4, int s_cap = -1,
                           LowerBound bound = LowerBound::linear);

}  // namespace fusion
