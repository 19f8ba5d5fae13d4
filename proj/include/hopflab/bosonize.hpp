#pragma once

#include "hopflab/braided.hpp"

namespace hopflab {

/// R # H for R braided in YD over H = *r.yd.base, basis r # h at index
/// r * dim(H) + h:
///   (r # h)(r' # h') = r (h_(1) . r') # h_(2) h'
///   Delta(r # h) = r^(1) # r^(2)_(-1) h_(1) (x) r^(2)_(0) # h_(2)
/// Graded by the degree of r when R is graded. Throws std::logic_error if
/// the result fails verify_hopf (inconsistent YD data).
HopfData bosonize(const BraidedHopf& r);

/// Index of r # h.
inline Index smash_index(const BraidedHopf& r, Index ri, Index hi) { return ri * r.yd.base->dim + hi; }

/// pi: R # H -> H, r # h -> eps(r) h.
SparseMat bosonization_projection(const BraidedHopf& r);
/// iota: H -> R # H, h -> 1 # h.
SparseMat bosonization_inclusion(const BraidedHopf& r);
/// vartheta(x) = x_(1) iota pi S(x_(2)), a projection of R # H onto R # 1.
SparseMat bosonization_vartheta(const BraidedHopf& r, const HopfData& a);
/// r -> r # 1 as a matrix R -> R # H.
SparseMat smash_embedding(const BraidedHopf& r);

/// Checks of the bosonization: verify_hopf, pi and iota are Hopf maps with
/// pi iota = id, vartheta(r # 1) = r # 1, R # 1 is the space of right
/// H-coinvariants, and Delta_R(r) = (vartheta (x) id) Delta(r # 1).
Report verify_bosonization(const BraidedHopf& r, const HopfData& a);

}  // namespace hopflab
