#pragma once

#include "fusion/composition.hpp"
#include "fusion/qseries.hpp"

namespace fusion {

/// prod a_i.
Integer fusion_dimension(const AVector& a);

/// Graded character of the fusion product W^A, with the cyclic vector at
/// q^0 z^0 and z counting applications of e. Requires no 1-dimensional
/// factors (strip them first).
BiSeries fusion_character(const AVector& a, int qmax4);

/// Character of M^A = C[e_{-n+1}, ..., e_0] w_A in the absolute grading of
/// F^{(x)k}. Requires d_1 = 0.
BiSeries m_character(const CompositionD& d, int qmax4);

/// Character of W^{A_infinity}:
///   sum_{i_1..i_k >= 0} (z/q)^{sum l i_l}
///     q^{sum_{s,t} min(s,t) i_s i_t + sum_l d_l (i_l + 2 i_{l+1} + ... + (k-l+1) i_k)}
///     / prod (i_l)_q!
BiSeries w_infinity_character(const CompositionD& d, int qmax4);

}  // namespace fusion
