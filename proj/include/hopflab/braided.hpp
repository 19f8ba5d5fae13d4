#pragma once

#include "hopflab/yd.hpp"

namespace hopflab {

/// Braided Hopf algebra R in the YD category over H: structure constants
/// of R (comult is the braided coproduct into R (x) R) plus its YD
/// structure over H.
struct BraidedHopf {
  HopfData alg;
  YDModuleData yd;
  /// Indices of the degree-one generators, in the order of V's basis.
  std::vector<Index> generators;
  /// words[b] lists generator positions whose product is basis element b
  /// (empty for elements not known to be monomials).
  std::vector<std::vector<int>> words;
  std::vector<Index> graded_dims;
  bool truncated = false;
};

// --- YD structure on tensor powers of a module ---

/// delta(v_{i1} (x) ... (x) v_{ik}) = v_{i1}(-1) ... v_{ik}(-1) (x) v_{i1}(0) (x) ...
/// as an element of H (x) V^{(x)k}, index h * d^k + rest.
SparseVec tensor_coaction(const YDModuleData& m, Index basis_tensor, int k);
/// h . X for X in V^{(x)k}, via the iterated coproduct of h.
SparseVec tensor_action(const YDModuleData& m, Index h, const SparseVec& x, int k);

/// Product of R^{(x)k} as an algebra in the YD category:
/// (r (x) S)(r' (x) S') = r (S_(-1) . r') (x) S_(0) S'.
SparseVec braided_tensor_multiply(const BraidedHopf& r, int k, const SparseVec& a,
                                  const SparseVec& b);

/// R^{(x)k} with the braided product, as an Algebra for inversion.
class BraidedTensorAlgebra : public Algebra {
 public:
  BraidedTensorAlgebra(const BraidedHopf& r, int k);
  Index dim() const override { return dim_; }
  void product_acc(Index i, Index j, const CycScalar& c, SparseVec& out) const override;
  SparseVec unit() const override;
  std::optional<int> degree(Index i) const override;

 private:
  const BraidedHopf& r_;
  int k_;
  Index dim_;
};

/// Braided flip c on R (x) R as a matrix.
SparseMat braiding_of(const BraidedHopf& r);

/// Algebra, coalgebra, braided compatibility, YD-module axioms, and that
/// m, Delta, unit, counit are YD morphisms.
Report verify_braided_hopf(const BraidedHopf& r);

/// Rewrites R in a new basis given by coordinate vectors in the old one.
BraidedHopf rebase(const BraidedHopf& r, const std::vector<SparseVec>& new_basis,
                   const std::vector<std::string>& labels);

/// The braided dual R* in YD over dual_hopf(H): multiplication is the
/// transpose of Delta_R, comultiplication the transpose of m_R, YD
/// structure as for dual modules.
BraidedHopf braided_dual(const BraidedHopf& r, HopfPtr dual_base);

/// R with the same structure constants viewed in YD over dual_hopf(H) via
/// alpha -> v = <alpha, S(v_(-1))> v_(0),  <v_[-1], h> v_[0] = S^{-1}(h) . v.
BraidedHopf braided_over_dual(const BraidedHopf& r, HopfPtr dual_base);

}  // namespace hopflab

namespace hopflab {

/// R (x) R with the braided coproduct (id (x) c (x) id)(Delta (x) Delta):
/// Delta(r (x) s) = r1 (x) r2(-1) . s1 (x) r2(0) (x) s2, split as
/// (R (x) R) (x) (R (x) R). Graded by total degree when R is graded.
class BraidedSquareCoalgebra : public Coalgebra {
 public:
  explicit BraidedSquareCoalgebra(const BraidedHopf& r) : r_(r) {}
  Index dim() const override { return r_.alg.dim * r_.alg.dim; }
  SparseVec comult(Index i) const override;
  CycScalar counit(Index i) const override;
  std::optional<int> degree(Index i) const override;

 private:
  const BraidedHopf& r_;
};

}  // namespace hopflab
