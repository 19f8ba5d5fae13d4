#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/cyclo.hpp"

namespace hopflab {

using Index = std::int64_t;

/// Sparse vector over CycScalar. Zero entries are never stored.
class SparseVec {
 public:
  using Map = std::map<Index, CycScalar>;

  SparseVec() = default;
  explicit SparseVec(Index dim) : dim_(dim) {}

  static SparseVec unit(Index dim, Index i, const CycScalar& c = CycScalar(1L));

  Index dim() const { return dim_; }
  void set_dim(Index d) { dim_ = d; }
  const Map& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  CycScalar get(Index i) const;
  void set(Index i, const CycScalar& c);
  /// entries[i] += c
  void add(Index i, const CycScalar& c);
  /// entries[i] += a * b
  void add_product(Index i, const CycScalar& a, const CycScalar& b);
  /// this += c * v
  void axpy(const CycScalar& c, const SparseVec& v);

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec& operator*=(const CycScalar& c);
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const CycScalar& c, SparseVec v) { return v *= c; }
  SparseVec operator-() const;
  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::string to_string() const;

 private:
  Index dim_ = 0;
  Map entries_;
};

/// Sparse matrix stored by columns: column j is the image of basis vector j.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(Index rows, Index cols);

  static SparseMat identity(Index n);
  /// Matrix whose columns are the given vectors (all of dimension rows).
  static SparseMat from_columns(Index rows, std::vector<SparseVec> cols);

  Index rows() const { return rows_; }
  Index cols() const { return static_cast<Index>(cols_.size()); }

  const SparseVec& col(Index j) const { return cols_[j]; }
  SparseVec& col_mut(Index j) { return cols_[j]; }
  const std::vector<SparseVec>& columns() const { return cols_; }
  CycScalar get(Index i, Index j) const { return cols_[j].get(i); }
  void set(Index i, Index j, const CycScalar& c) { cols_[j].set(i, c); }
  void add(Index i, Index j, const CycScalar& c) { cols_[j].add(i, c); }

  SparseVec apply(const SparseVec& v) const;
  SparseMat operator*(const SparseMat& o) const;
  SparseMat transpose() const;
  bool is_zero() const;
  std::size_t nnz() const;
  friend bool operator==(const SparseMat& a, const SparseMat& b);
  friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

 private:
  Index rows_ = 0;
  std::vector<SparseVec> cols_;
};

/// Returns x with A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
std::optional<SparseVec> solve_linear(const SparseMat& a, const SparseVec& b);

/// Row echelon reduction of the columns of A; returns the rank.
Index rank(const SparseMat& a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<SparseMat> invert_matrix(const SparseMat& a);

/// Incremental basis builder over a fixed ambient dimension.
///
/// Vectors are offered one at a time; independent ones are accepted and
/// numbered 0, 1, ...; dependent ones are expressed in the accepted vectors.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Index ambient_dim) : ambient_(ambient_dim) {}

  struct Result {
    bool accepted;
    /// Index of the new basis vector when accepted; otherwise the
    /// coordinates of the offered vector in the accepted vectors.
    Index new_index = -1;
    SparseVec coords;
  };

  Result offer(const SparseVec& v);
  /// Coordinates of v in the accepted vectors, or nullopt if v is outside
  /// their span.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  Index size() const { return count_; }

 private:
  struct Row {
    Index pivot;
    SparseVec vec;     // reduced, pivot entry 1
    SparseVec combo;   // vec = sum combo[k] * accepted[k]
  };
  void reduce(SparseVec& v, SparseVec& combo) const;

  Index ambient_;
  Index count_ = 0;
  std::map<Index, Row> rows_;  // keyed by pivot
};

}  // namespace hopflab
