#pragma once

#include <array>

#include "hopflab/twist.hpp"

namespace hopflab {

/// A right A-comodule algebra E with a colinear section gamma: A -> E.
/// E shares its basis size with A; only the algebra fields of `algebra`
/// (mult, unit, labels) are meaningful.
struct CleftData {
  HopfPtr base;       // A
  BraidedPtr nichols; // R with A = R # H
  HopfData algebra;   // E
  std::vector<SparseVec> coaction;  // [e] = rho(e) in E (x) A, index e * dim + a
  SparseMat section;                // A -> E
  SparseMat section_inverse;        // convolution inverse of section
  std::array<CycScalar, 3> lambda;  // lambda_1, lambda_2, lambda_12
};

/// E(lambda) # kGamma for the A2 Nichols algebra at q = -1, where
/// E(lambda) = k<y1, y2 | y1^2 - l1, y2^2 - l2, y12^2 - l12>, y12 = y1 y2 - y2 y1.
/// Basis y2^a y12^b y1^c # h at index (4a + 2b + c) |Gamma| + h, matching
/// bosonize(a2_nichols(v)). rho(y_i) = y_i (x) 1 + g_i (x) x_i, rho(h) = h (x) h,
/// and gamma is the identity on these bases. Throws std::invalid_argument
/// if the relations are not stable under Gamma.
CleftData cleft_A2(const std::array<CycScalar, 3>& lambda, const YDModuleData& v);

/// rho of an arbitrary element of E.
SparseVec cleft_coact(const CleftData& c, const SparseVec& e);
/// p(e) = e_(0) gamma^-1(iota pi(e_(1))), a projection onto E^{co H}.
SparseMat cleft_projection(const CleftData& c);

/// algebra, coaction-algebra-map, coaction-coassociative, coaction-counital,
/// section-unital, section-colinear, section-invertible, coinvariants
/// (E^{co A} = k1), p-gamma (p gamma = gamma vartheta), varrho-lands-in-R,
/// varrho-coassociative, section-R-colinear.
Report verify_cleft(const CleftData& c);

/// sigma(x, y) 1 = gamma(x1) gamma(y1) gamma^-1(x2 y2). Throws
/// std::logic_error if some value is not a multiple of 1.
CocycleData cocycle_from_section(const CleftData& c);

}  // namespace hopflab
