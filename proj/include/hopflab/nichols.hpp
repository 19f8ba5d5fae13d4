#pragma once

#include "hopflab/braided.hpp"

namespace hopflab {

/// Nichols algebra B(V) built degree by degree up to max_degree.
///
/// B^n is spanned by the products b x_j with b running over a basis of
/// B^{n-1}; an element of positive degree vanishes iff all its skew
/// derivations do, so candidates are compared through their derivation
/// vectors. The braided coproduct, action and coaction are extended
/// multiplicatively. `truncated` is set when B^{max_degree + 1} != 0.
BraidedHopf nichols_algebra(const YDModuleData& v, int max_degree);

/// Ranks of the quantum symmetrizers on V^{(x)n}, n = 0, 1, ..., stopping
/// after the first zero or at max_degree. Independent of nichols_algebra.
std::vector<Index> symmetrizer_dims(const SparseMat& c, Index dim, int max_degree);

}  // namespace hopflab

namespace hopflab {

/// Product of generators along a word, as an element of R.
SparseVec word_element(const BraidedHopf& r, const std::vector<int>& word);

/// B(V) for V of Cartan type A2 at q = -1 (braiding [[-1, 1], [-1, -1]])
/// on the basis x2^a x12^b x1^c, index 4a + 2b + c, x12 = x1 x2 - x2 x1.
/// Throws std::invalid_argument for any other braiding matrix.
BraidedHopf a2_nichols(const YDModuleData& v);

}  // namespace hopflab
