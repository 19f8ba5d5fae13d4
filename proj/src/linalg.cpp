#include "hopflab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopflab {

SparseVec SparseVec::unit(Index dim, Index i, const CycScalar& c) {
  SparseVec v(dim);
  v.set(i, c);
  return v;
}

CycScalar SparseVec::get(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? CycScalar() : it->second;
}

void SparseVec::set(Index i, const CycScalar& c) {
  if (c.is_zero()) {
    entries_.erase(i);
  } else {
    entries_[i] = c;
  }
}

void SparseVec::add(Index i, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseVec::add_product(Index i, const CycScalar& a, const CycScalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  auto it = entries_.find(i);
  if (it == entries_.end()) {
    entries_.emplace(i, a * b);
  } else {
    it->second.add_product(a, b);
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseVec::axpy(const CycScalar& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v.entries_) add_product(i, c, x);
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  for (const auto& [i, x] : o.entries_) add(i, x);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  for (const auto& [i, x] : o.entries_) add(i, -x);
  return *this;
}

SparseVec& SparseVec::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, x] : entries_) x *= c;
  return *this;
}

SparseVec SparseVec::operator-() const {
  SparseVec r(*this);
  for (auto& [i, x] : r.entries_) x = -x;
  return r;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  for (; ia != a.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

std::string SparseVec::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, x] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << i << ": " << x;
  }
  os << "}";
  return os.str();
}

SparseMat::SparseMat(Index rows, Index cols) : rows_(rows), cols_(cols, SparseVec(rows)) {}

SparseMat SparseMat::identity(Index n) {
  SparseMat m(n, n);
  for (Index i = 0; i < n; ++i) m.set(i, i, CycScalar(1L));
  return m;
}

SparseMat SparseMat::from_columns(Index rows, std::vector<SparseVec> cols) {
  SparseMat m;
  m.rows_ = rows;
  for (auto& c : cols) c.set_dim(rows);
  m.cols_ = std::move(cols);
  return m;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  if (v.dim() != cols()) throw std::invalid_argument("SparseMat::apply: dimension mismatch");
  SparseVec out(rows_);
  for (const auto& [j, x] : v) out.axpy(x, cols_[j]);
  return out;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("SparseMat product: dimension mismatch");
  SparseMat out(rows_, o.cols());
  for (Index j = 0; j < o.cols(); ++j) out.cols_[j] = apply(o.cols_[j]);
  return out;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols(), rows_);
  for (Index j = 0; j < cols(); ++j) {
    for (const auto& [i, x] : cols_[j]) t.cols_[i].set(j, x);
  }
  return t;
}

bool SparseMat::is_zero() const {
  for (const auto& c : cols_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.nnz();
  return n;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

namespace {

struct EchelonRow {
  SparseVec lhs;  // leading entry (smallest index) is 1
  SparseVec rhs;
};

// Leading-entry echelon form with exact field arithmetic. Returns false if
// some row reduces to 0 = nonzero.
bool echelon(const SparseMat& a, const SparseMat& b, std::map<Index, EchelonRow>& pivots) {
  std::vector<SparseVec> lhs_rows(a.rows(), SparseVec(a.cols()));
  std::vector<SparseVec> rhs_rows(a.rows(), SparseVec(b.cols()));
  for (Index j = 0; j < a.cols(); ++j) {
    for (const auto& [i, x] : a.col(j)) lhs_rows[i].set(j, x);
  }
  for (Index j = 0; j < b.cols(); ++j) {
    for (const auto& [i, x] : b.col(j)) rhs_rows[i].set(j, x);
  }
  // Sparser rows first keeps fill-in down.
  std::vector<Index> order(a.rows());
  for (Index i = 0; i < a.rows(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return lhs_rows[x].nnz() < lhs_rows[y].nnz();
  });
  for (Index r : order) {
    SparseVec row = std::move(lhs_rows[r]);
    SparseVec rhs = std::move(rhs_rows[r]);
    Index from = -1;
    while (!row.is_zero()) {
      auto it = row.entries().upper_bound(from);
      if (it == row.entries().end()) break;
      Index lead = it->first;
      auto pit = pivots.find(lead);
      if (pit == pivots.end()) {
        CycScalar inv = it->second.inverse();
        row *= inv;
        rhs *= inv;
        pivots.emplace(lead, EchelonRow{std::move(row), std::move(rhs)});
        row = SparseVec();
        rhs = SparseVec();
        break;
      }
      CycScalar f = -it->second;
      row.axpy(f, pit->second.lhs);
      rhs.axpy(f, pit->second.rhs);
      from = lead;
    }
    if (row.is_zero() && !rhs.is_zero()) return false;
  }
  return true;
}

std::optional<SparseMat> solve_many(const SparseMat& a, const SparseMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  std::map<Index, EchelonRow> pivots;
  if (!echelon(a, b, pivots)) return std::nullopt;
  // Back substitution, pivots in decreasing order; x rows stored per variable.
  std::map<Index, SparseVec> xrows;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const Index p = it->first;
    SparseVec val = it->second.rhs;
    for (const auto& [c, coef] : it->second.lhs) {
      if (c == p) continue;
      auto xit = xrows.find(c);
      if (xit != xrows.end()) val.axpy(-coef, xit->second);
    }
    xrows.emplace(p, std::move(val));
  }
  SparseMat x(a.cols(), b.cols());
  for (const auto& [var, row] : xrows) {
    for (const auto& [k, v] : row) x.set(var, k, v);
  }
  return x;
}

}  // namespace

std::optional<SparseVec> solve_linear(const SparseMat& a, const SparseVec& b) {
  if (a.rows() != b.dim()) throw std::invalid_argument("solve_linear: A.rows != b.dim");
  SparseMat rhs = SparseMat::from_columns(b.dim(), {b});
  auto x = solve_many(a, rhs);
  if (!x) return std::nullopt;
  SparseVec out = x->col(0);
  out.set_dim(a.cols());
  if (a.apply(out) != b) throw std::logic_error("solve_linear: re-substitution check failed");
  return out;
}

Index rank(const SparseMat& a) {
  IncrementalBasis basis(a.rows());
  for (Index j = 0; j < a.cols(); ++j) basis.offer(a.col(j));
  return basis.size();
}

std::optional<SparseMat> invert_matrix(const SparseMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert_matrix: not square");
  auto x = solve_many(a, SparseMat::identity(a.rows()));
  if (!x) return std::nullopt;
  if (a * *x != SparseMat::identity(a.rows())) return std::nullopt;
  return x;
}

void IncrementalBasis::reduce(SparseVec& v, SparseVec& combo) const {
  Index from = -1;
  while (!v.is_zero()) {
    auto it = v.entries().upper_bound(from);
    if (it == v.entries().end()) break;
    Index lead = it->first;
    auto pit = rows_.find(lead);
    if (pit == rows_.end()) {
      from = lead;
      continue;
    }
    CycScalar f = -it->second;
    v.axpy(f, pit->second.vec);
    combo.axpy(f, pit->second.combo);
    from = lead;
  }
}

IncrementalBasis::Result IncrementalBasis::offer(const SparseVec& v) {
  SparseVec work = v;
  SparseVec combo;
  reduce(work, combo);
  if (work.is_zero()) {
    // v + combo.accepted = 0  ->  v = -combo
    SparseVec coords = -combo;
    coords.set_dim(count_);
    return Result{false, -1, std::move(coords)};
  }
  // work = v + combo; store normalized with combo including the new vector.
  const Index idx = count_++;
  combo.add(idx, CycScalar(1L));
  auto lead = work.entries().begin();
  const Index pivot = lead->first;
  CycScalar inv = lead->second.inverse();
  work *= inv;
  combo *= inv;
  rows_.emplace(pivot, Row{pivot, std::move(work), std::move(combo)});
  return Result{true, idx, SparseVec()};
}

std::optional<SparseVec> IncrementalBasis::coordinates(const SparseVec& v) const {
  SparseVec work = v;
  SparseVec combo;
  reduce(work, combo);
  if (!work.is_zero()) return std::nullopt;
  SparseVec coords = -combo;
  coords.set_dim(count_);
  return coords;
}

}  // namespace hopflab
