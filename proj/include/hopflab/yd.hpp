#pragma once

#include <memory>

#include "hopflab/algebras.hpp"

namespace hopflab {

using HopfPtr = std::shared_ptr<const HopfData>;

/// Yetter-Drinfeld module V over a Hopf algebra H.
struct YDModuleData {
  HopfPtr base;
  Index dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> action;    // [h * dim + v] = e_h . v_v, in V
  std::vector<SparseVec> coaction;  // [v] = delta(v_v) in H (x) V, index h * dim + w

  const SparseVec& act_basis(Index h, Index v) const { return action[h * dim + v]; }
};

YDModuleData empty_yd(HopfPtr base, Index dim);

/// h . v for h in H and v in V.
SparseVec yd_act(const YDModuleData& m, const SparseVec& h, const SparseVec& v);
SparseVec yd_coact(const YDModuleData& m, const SparseVec& v);

Report verify_yd(const YDModuleData& m);

/// c(x (x) y) = x_(-1) . y (x) x_(0) on V (x) V (index x * dim + y).
/// Throws std::logic_error if the braid equation fails.
SparseMat braiding(const YDModuleData& m);
bool satisfies_braid_equation(const SparseMat& c, Index dim);

/// V* over the same H, on the dual basis.
YDModuleData yd_dual(const YDModuleData& m);
/// V* over dual_hopf(H); `dual_base` must be dual_hopf(*m.base).
YDModuleData yd_dual_over_dual(const YDModuleData& m, HopfPtr dual_base);
/// V itself over dual_hopf(H).
YDModuleData yd_over_dual(const YDModuleData& m, HopfPtr dual_base);

/// Rank-theta braided vector space of diagonal type realized over an
/// abelian group: chi_i(g_j) = q_{ji}.
struct DiagonalRealization {
  int theta = 0;
  std::vector<std::vector<CycScalar>> qmatrix;
  GroupTable group;
  std::vector<int> gs;
  std::vector<std::vector<CycScalar>> chis;  // chis[i][gamma]

  /// Throws std::invalid_argument when a chi is not a character or the
  /// q-matrix does not match.
  void validate() const;
};

/// Realization over an abelian group built from elements and characters;
/// the q-matrix is read off.
DiagonalRealization make_realization(const GroupTable& g, const std::vector<int>& gs,
                                     const std::vector<std::vector<CycScalar>>& chis);
/// Characters of a cyclic group C_n: gamma^k -> z^k for z = root.
std::vector<CycScalar> cyclic_character(int n, const CycScalar& root);
/// The module V = span{x_i} over kGamma with gamma . x_i = chi_i(gamma) x_i,
/// x_i -> g_i (x) x_i. `base` must be group_algebra(r.group).
YDModuleData realization_module(const DiagonalRealization& r, HopfPtr base);

/// The transposition module of S_n over k^{S_n}:
/// d_t . y_e = [t = e] y_e,  y_e -> sum_w sign(w) d_w (x) y_{w^-1 e w}.
/// `base` must be function_algebra(S_n); basis ordered as transpositions().
YDModuleData transposition_module(const GroupTable& sn, HopfPtr base, bool with_sign = true);
/// The same module over k^G # kF for a matched pair acting by conjugation:
/// f . y_e = y_{e <| f^{-1}}, coaction through k^G.
YDModuleData transposition_module_extended(const GroupTable& sn, const GroupTable& f,
                                           const RightAction& act, HopfPtr base);

}  // namespace hopflab
