#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/linalg.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

enum class GeneratorKind {
  GroupLikeFamily,   // basis elements forming a group under multiplication
  IdempotentFamily,  // complete orthogonal family of idempotents
  Nilpotent,
};

struct GeneratorSet {
  std::vector<Index> indices;
  GeneratorKind kind;
};

/// Finite-dimensional Hopf algebra given by structure constants on a basis.
///
/// Tensors over the basis are SparseVecs on flattened indices: the basis
/// element e_i (x) e_j of H (x) H has index i * dim + j, and so on.
struct HopfData {
  Index dim = 0;
  int scalar_order = 1;
  std::vector<std::string> labels;
  std::vector<SparseVec> mult;    // [i * dim + j] = e_i e_j
  std::vector<SparseVec> comult;  // [i] = Delta(e_i), a 2-tensor
  SparseVec unit;
  std::vector<CycScalar> counit;
  std::optional<SparseMat> antipode;
  std::optional<std::vector<int>> grading;
  std::vector<GeneratorSet> generators;

  const SparseVec& product(Index i, Index j) const { return mult[i * dim + j]; }
  Index index_of(const std::string& label) const;
};

// Flattened multi-index helpers.
Index tensor_dim(Index dim, int k);
SparseVec tensor(const SparseVec& a, const SparseVec& b);

/// Structure constants of an empty algebra of the given dimension, with
/// generic labels e0, e1, ...
HopfData empty_hopf(Index dim);

// --- algebra and coalgebra evaluation on H and its tensor powers ---
SparseVec multiply(const HopfData& h, const SparseVec& a, const SparseVec& b);
/// Product in the k-fold tensor power algebra.
SparseVec tensor_multiply(const HopfData& h, int k, const SparseVec& a, const SparseVec& b);
SparseVec one_tensor(const HopfData& h, int k);
SparseVec comultiply(const HopfData& h, const SparseVec& a);
/// Applies Delta at slot pos of a k-tensor, giving a (k+1)-tensor.
SparseVec comultiply_at(const HopfData& h, const SparseVec& x, int k, int pos);
/// Applies the counit at slot pos of a k-tensor, giving a (k-1)-tensor.
SparseVec counit_at(const HopfData& h, const SparseVec& x, int k, int pos);
/// Applies the linear map m at slot pos of a k-tensor.
SparseVec map_at(const SparseMat& m, Index dim, const SparseVec& x, int k, int pos);
CycScalar counit_of(const HopfData& h, const SparseVec& a);
/// Swaps the two factors of a 2-tensor over dim.
SparseVec flip(const SparseVec& x, Index dim);
/// Iterated coproduct Delta^(n-1)(e_i) as an n-tensor, n >= 2.
SparseVec iterated_comult(const HopfData& h, Index i, int n);

/// Checks associativity, coassociativity, unit, counit and compatibility.
Report verify_bialgebra(const HopfData& h);
/// verify_bialgebra plus the antipode identities (computing the antipode
/// if none is attached).
Report verify_hopf(const HopfData& h);

/// Convolution inverse of the identity; throws std::runtime_error when it
/// does not exist or is not bijective.
SparseMat compute_antipode(const HopfData& h);
/// Copy of h with the antipode attached.
HopfData with_antipode(HopfData h);
/// S * id = id * S = u epsilon, checked on every basis element.
bool check_antipode(const HopfData& h, const SparseMat& s, std::string* witness = nullptr);
const SparseMat& antipode_of(const HopfData& h);
SparseMat antipode_inverse(const HopfData& h);

/// H* on the dual basis under the pairing <fg, x> = f(x1) g(x2).
HopfData dual_hopf(const HopfData& h);
bool is_cocommutative(const HopfData& h);
/// Basis elements b with Delta(b) = b (x) b.
std::vector<Index> grouplikes_in_basis(const HopfData& h);

/// Equality of structure constants (mult, comult, unit, counit).
bool same_structure(const HopfData& a, const HopfData& b, std::string* witness = nullptr);
/// Structure-constant equality after relabelling b's basis: basis element i
/// of a corresponds to perm[i] of b.
bool same_structure_under(const HopfData& a, const HopfData& b, const std::vector<Index>& perm,
                          std::string* witness = nullptr);

// --- generic convolution machinery ---

class Algebra {
 public:
  virtual ~Algebra() = default;
  virtual Index dim() const = 0;
  /// out += c * (e_i e_j)
  virtual void product_acc(Index i, Index j, const CycScalar& c, SparseVec& out) const = 0;
  virtual SparseVec unit() const = 0;
  virtual std::optional<int> degree(Index) const { return std::nullopt; }
  bool graded() const { return dim() == 0 || degree(0).has_value(); }
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
};

class Coalgebra {
 public:
  virtual ~Coalgebra() = default;
  virtual Index dim() const = 0;
  /// Delta(e_i) over the flattened index a * dim() + b.
  virtual SparseVec comult(Index i) const = 0;
  virtual CycScalar counit(Index i) const = 0;
  virtual std::optional<int> degree(Index) const { return std::nullopt; }
  bool graded() const { return dim() == 0 || degree(0).has_value(); }
};

/// The ground field as a one-dimensional algebra.
class FieldAlgebra : public Algebra {
 public:
  Index dim() const override { return 1; }
  void product_acc(Index, Index, const CycScalar& c, SparseVec& out) const override;
  SparseVec unit() const override;
  std::optional<int> degree(Index) const override { return 0; }
};

/// k-fold tensor power of H as an algebra (componentwise product).
class TensorAlgebra : public Algebra {
 public:
  TensorAlgebra(const HopfData& h, int k, bool use_grading = true);
  Index dim() const override { return dim_; }
  void product_acc(Index i, Index j, const CycScalar& c, SparseVec& out) const override;
  SparseVec unit() const override;
  std::optional<int> degree(Index i) const override;

 private:
  const HopfData& h_;
  int k_;
  Index dim_;
  bool graded_;
};

/// k-fold tensor power of H as a coalgebra.
class TensorCoalgebra : public Coalgebra {
 public:
  TensorCoalgebra(const HopfData& h, int k, bool use_grading = true);
  Index dim() const override { return dim_; }
  SparseVec comult(Index i) const override;
  CycScalar counit(Index i) const override;
  std::optional<int> degree(Index i) const override;

 private:
  const HopfData& h_;
  int k_;
  Index dim_;
  bool graded_;
};

/// (f * g)(c) = m (f (x) g) Delta(c); maps are matrices with columns indexed
/// by the coalgebra basis.
SparseMat convolution_product(const SparseMat& f, const SparseMat& g, const Coalgebra& c,
                              const Algebra& a);
SparseMat convolution_unit(const Coalgebra& c, const Algebra& a);
/// Two-sided convolution inverse, or nullopt. Uses the degree-zero solve and
/// a terminating Neumann series when the coalgebra is graded, a dense
/// linear solve otherwise.
std::optional<SparseMat> convolution_inverse(const SparseMat& f, const Coalgebra& c,
                                             const Algebra& a);

/// Two-sided inverse of an element, or nullopt.
std::optional<SparseVec> algebra_invert(const SparseVec& x, const Algebra& a);

}  // namespace hopflab
