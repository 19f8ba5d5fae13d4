#pragma once

#include "hopflab/bosonize.hpp"

namespace hopflab {

// --- Twists and cocycles on ordinary Hopf algebras ---

/// J in H (x) H (index i * dim + j) together with its inverse.
struct TwistData {
  HopfPtr base;
  SparseVec element;
  SparseVec inverse;
};

/// Computes the inverse in H (x) H; throws std::invalid_argument if J is
/// not invertible.
TwistData make_twist(HopfPtr h, SparseVec j);
/// Uses a known inverse; throws std::invalid_argument unless J J^-1 = J^-1 J = 1.
TwistData make_twist(HopfPtr h, SparseVec j, SparseVec inverse);
TwistData trivial_twist(HopfPtr h);

/// invertible, twist-equation (1 (x) J)(id (x) Delta)(J) = (J (x) 1)(Delta (x) id)(J),
/// counit-normalization.
Report verify_twist(const TwistData& t);
/// H^J: same algebra, Delta^J = J Delta J^-1, antipode U S U^-1 with
/// U = J^1 S(J^2). The result carries no grading.
HopfData apply_twist(const TwistData& t);
/// J^-1 as a twist for `twisted` = apply_twist(t).
TwistData inverse_twist(const TwistData& t, HopfPtr twisted);

/// sigma: H (x) H -> k as a vector over the index x * dim + y.
struct CocycleData {
  HopfPtr base;
  SparseVec values;
  SparseVec inverse;  // convolution inverse
};

CocycleData make_cocycle(HopfPtr h, SparseVec values);
CocycleData make_cocycle(HopfPtr h, SparseVec values, SparseVec inverse);
CocycleData trivial_cocycle(HopfPtr h);
inline CycScalar cocycle_value(const CocycleData& s, Index x, Index y) {
  return s.values.get(x * s.base->dim + y);
}
/// sigma(a, b) for arbitrary a, b in H.
CycScalar evaluate_form(const SparseVec& form, Index dim, const SparseVec& a, const SparseVec& b);

/// invertible, cocycle-identity on all basis triples, normalization.
Report verify_cocycle(const CocycleData& s);
/// H_sigma: same coalgebra, m_sigma = sigma * m * sigma^-1. No grading on
/// the result; the antipode is solved using the grading of H when present.
HopfData apply_cocycle(const CocycleData& s);
/// sigma^-1 as a cocycle for `deformed` = apply_cocycle(s).
CocycleData inverse_cocycle(const CocycleData& s, HopfPtr deformed);

/// <J, x* (x) y*> = sigma(x, y) on the dual basis of dual_base = dual_hopf(H).
TwistData twist_from_cocycle_dual(const CocycleData& s, HopfPtr dual_base);
CocycleData cocycle_from_twist_dual(const TwistData& t, HopfPtr dual_base);

// --- Braided twists and cocycles ---

using BraidedPtr = std::shared_ptr<const BraidedHopf>;

struct BraidedTwistData {
  BraidedPtr base;
  SparseVec element;
  SparseVec inverse;  // in the braided tensor square
};

struct BraidedCocycleData {
  BraidedPtr base;
  SparseVec values;
  SparseVec inverse;  // convolution inverse over the braided tensor square
};

/// Inverse computed in the braided tensor square; throws std::invalid_argument
/// if none exists.
BraidedTwistData make_braided_twist(BraidedPtr r, SparseVec j);
BraidedCocycleData make_braided_cocycle(BraidedPtr r, SparseVec values);

/// invertible, coinvariant (delta(J) = 1 (x) J), invariant (h . J = eps(h) J),
/// twist-equation, counit-normalization.
Report verify_braided_twist(const BraidedTwistData& t);
/// invertible, colinear, invariant, normalization, cocycle-identity. Each is
/// reported on its own.
Report verify_braided_cocycle(const BraidedCocycleData& s);

/// R^J with Delta^J(r) = J Delta(r) J^-1 in the braided tensor square.
BraidedHopf apply_braided_twist(const BraidedTwistData& t);

/// J # 1 = J^1 # J^2(-1) (x) J^2(0) # 1 on A = bosonize(R), or F (J # 1)
/// when a twist F of H is given (F is mapped into A along h -> 1 # h).
/// The inverse is built the same way from J^-1 and F^-1.
TwistData bosonize_twist(const BraidedTwistData& t, HopfPtr a,
                         const std::optional<TwistData>& f = std::nullopt);
/// J^1 # J^2(-1) (x) J^2(0) # 1 for any J in R (x) R.
SparseVec smash_tensor(const BraidedHopf& r, const SparseVec& j);
/// Image of an element of H (x) H in A (x) A along h -> 1 # h.
SparseVec embed_base_tensor(const BraidedHopf& r, const SparseVec& x);

/// sigma(x # g, y # h) = sigma(x, g . y) eps(h) on A = bosonize(R).
CocycleData bosonize_cocycle(const BraidedCocycleData& s, HopfPtr a);
/// sigma_R(x, y) = s(x # 1, y # 1). Throws std::invalid_argument unless s
/// restricted to H (x) H is eps (x) eps.
SparseVec restrict_cocycle(const CocycleData& s, const BraidedHopf& r);
/// s(x # t, y # 1) = s(x # 1, t . y # 1) on all basis elements.
bool is_base_balanced(const CocycleData& s, const BraidedHopf& r, std::string* witness = nullptr);

/// The element J(sigma) of R* (x) R* with <J(sigma), x (x) y> = sigma_R(x, y)
/// (R* = braided_dual(R)), the report on it, and the twist J(sigma) of the
/// dual of A.
struct TwistFromSigma {
  SparseVec element;
  Report report;  // coinvariant, twist-equation, counit-normalization, trivial-action,
                  // dual-transpose (J(sigma) = twist_from_cocycle_dual(s)),
                  // bosonized (J(sigma) = element # 1)
  TwistData twist;
};
/// `dual_r` must be braided_dual(r, dual_base), `dual_a` = dual_hopf(A).
TwistFromSigma twist_from_sigma(const CocycleData& s, const BraidedHopf& r, BraidedPtr dual_r,
                                HopfPtr dual_a);

}  // namespace hopflab
