#include "hopflab/hopf.hpp"

#include <sstream>
#include <stdexcept>

namespace hopflab {

namespace {

Index ipow(Index n, int k) {
  Index r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

std::vector<Index> digits(Index idx, Index n, int k) {
  std::vector<Index> d(k);
  for (int s = k - 1; s >= 0; --s) {
    d[s] = idx % n;
    idx /= n;
  }
  return d;
}

std::string label_tuple(const HopfData& h, std::initializer_list<Index> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (Index i : idx) {
    if (!first) os << ", ";
    first = false;
    os << (i < static_cast<Index>(h.labels.size()) ? h.labels[i] : std::to_string(i));
  }
  os << ")";
  return os.str();
}

// out += c * (e_{a_0} e_{b_0}) (x) ... (x) (e_{a_{k-1}} e_{b_{k-1}})
void basis_tensor_product(const HopfData& h, int k, Index ia, Index ib, const CycScalar& c,
                          SparseVec& out) {
  if (k == 1) {
    out.axpy(c, h.product(ia, ib));
    return;
  }
  const auto da = digits(ia, h.dim, k);
  const auto db = digits(ib, h.dim, k);
  std::vector<std::pair<Index, CycScalar>> cur{{0, c}}, next;
  for (int s = 0; s < k; ++s) {
    const SparseVec& p = h.product(da[s], db[s]);
    if (p.is_zero()) return;
    next.clear();
    for (const auto& [idx, coef] : cur) {
      for (const auto& [r, v] : p) next.emplace_back(idx * h.dim + r, coef * v);
    }
    cur.swap(next);
  }
  for (const auto& [idx, coef] : cur) out.add(idx, coef);
}

}  // namespace

Index HopfData::index_of(const std::string& label) const {
  for (Index i = 0; i < static_cast<Index>(labels.size()); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::out_of_range("no basis element labelled " + label);
}

Index tensor_dim(Index dim, int k) { return ipow(dim, k); }

SparseVec tensor(const SparseVec& a, const SparseVec& b) {
  SparseVec out(a.dim() * b.dim());
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out.add_product(i * b.dim() + j, x, y);
  }
  return out;
}

HopfData empty_hopf(Index dim) {
  HopfData h;
  h.dim = dim;
  for (Index i = 0; i < dim; ++i) h.labels.push_back("e" + std::to_string(i));
  h.mult.assign(dim * dim, SparseVec(dim));
  h.comult.assign(dim, SparseVec(dim * dim));
  h.unit = SparseVec(dim);
  h.counit.assign(dim, CycScalar());
  return h;
}

SparseVec multiply(const HopfData& h, const SparseVec& a, const SparseVec& b) {
  SparseVec out(h.dim);
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out.axpy(x * y, h.product(i, j));
  }
  return out;
}

SparseVec tensor_multiply(const HopfData& h, int k, const SparseVec& a, const SparseVec& b) {
  SparseVec out(ipow(h.dim, k));
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) basis_tensor_product(h, k, i, j, x * y, out);
  }
  return out;
}

SparseVec one_tensor(const HopfData& h, int k) {
  SparseVec out = h.unit;
  for (int s = 1; s < k; ++s) out = tensor(out, h.unit);
  return out;
}

SparseVec comultiply(const HopfData& h, const SparseVec& a) {
  SparseVec out(h.dim * h.dim);
  for (const auto& [i, x] : a) out.axpy(x, h.comult[i]);
  return out;
}

SparseVec comultiply_at(const HopfData& h, const SparseVec& x, int k, int pos) {
  const Index n = h.dim;
  const Index tail = ipow(n, k - pos - 1);
  SparseVec out(ipow(n, k + 1));
  for (const auto& [idx, c] : x) {
    const Index suffix = idx % tail;
    const Index d = (idx / tail) % n;
    const Index prefix = idx / tail / n;
    for (const auto& [pair, v] : h.comult[d]) {
      out.add_product((prefix * n * n + pair) * tail + suffix, c, v);
    }
  }
  return out;
}

SparseVec counit_at(const HopfData& h, const SparseVec& x, int k, int pos) {
  const Index n = h.dim;
  const Index tail = ipow(n, k - pos - 1);
  SparseVec out(ipow(n, k - 1));
  for (const auto& [idx, c] : x) {
    const Index suffix = idx % tail;
    const Index d = (idx / tail) % n;
    const Index prefix = idx / tail / n;
    out.add_product(prefix * tail + suffix, c, h.counit[d]);
  }
  return out;
}

SparseVec map_at(const SparseMat& m, Index n, const SparseVec& x, int k, int pos) {
  const Index tail = ipow(n, k - pos - 1);
  const Index rows = m.rows();
  Index out_dim = ipow(n, k - 1) * rows;
  SparseVec out(out_dim);
  for (const auto& [idx, c] : x) {
    const Index suffix = idx % tail;
    const Index d = (idx / tail) % n;
    const Index prefix = idx / tail / n;
    for (const auto& [r, v] : m.col(d)) out.add_product((prefix * rows + r) * tail + suffix, c, v);
  }
  return out;
}

CycScalar counit_of(const HopfData& h, const SparseVec& a) {
  CycScalar s;
  for (const auto& [i, x] : a) s.add_product(x, h.counit[i]);
  return s;
}

SparseVec flip(const SparseVec& x, Index dim) {
  SparseVec out(x.dim());
  for (const auto& [idx, c] : x) out.set((idx % dim) * dim + idx / dim, c);
  return out;
}

SparseVec iterated_comult(const HopfData& h, Index i, int n) {
  SparseVec out = h.comult[i];
  for (int k = 2; k < n; ++k) out = comultiply_at(h, out, k, 0);
  return out;
}

Report verify_bialgebra(const HopfData& h) {
  Report rep;
  const Index n = h.dim;
  bool shape = static_cast<Index>(h.mult.size()) == n * n &&
               static_cast<Index>(h.comult.size()) == n &&
               static_cast<Index>(h.counit.size()) == n;
  rep.add("shape", shape, shape ? "" : "structure tensor sizes do not match dim");
  if (!shape) return rep;

  // unit
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < n && ok; ++i) {
      SparseVec e = SparseVec::unit(n, i);
      if (multiply(h, h.unit, e) != e || multiply(h, e, h.unit) != e) {
        ok = false;
        w = "1 * e != e at " + label_tuple(h, {i});
      }
    }
    rep.add("unit", ok, w);
  }

  // associativity
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < n && ok; ++i) {
      for (Index j = 0; j < n && ok; ++j) {
        const SparseVec& ij = h.product(i, j);
        for (Index l = 0; l < n; ++l) {
          SparseVec left(n), right(n);
          for (const auto& [k, c] : ij) left.axpy(c, h.product(k, l));
          for (const auto& [k, c] : h.product(j, l)) right.axpy(c, h.product(i, k));
          if (left != right) {
            ok = false;
            w = "(ab)c != a(bc) at " + label_tuple(h, {i, j, l});
            break;
          }
        }
      }
    }
    rep.add("associativity", ok, w);
  }

  // coassociativity and counit
  {
    bool ok = true, cu = true;
    std::string w, wc;
    for (Index i = 0; i < n; ++i) {
      if (ok && comultiply_at(h, h.comult[i], 2, 0) != comultiply_at(h, h.comult[i], 2, 1)) {
        ok = false;
        w = "(D x id)D != (id x D)D at " + label_tuple(h, {i});
      }
      SparseVec e = SparseVec::unit(n, i);
      if (cu && (counit_at(h, h.comult[i], 2, 0) != e || counit_at(h, h.comult[i], 2, 1) != e)) {
        cu = false;
        wc = "counit law fails at " + label_tuple(h, {i});
      }
    }
    rep.add("coassociativity", ok, w);
    rep.add("counit", cu, wc);
  }

  // compatibility
  {
    bool ok = true;
    std::string w;
    if (comultiply(h, h.unit) != one_tensor(h, 2)) {
      ok = false;
      w = "Delta(1) != 1 x 1";
    }
    if (ok && !counit_of(h, h.unit).is_one()) {
      ok = false;
      w = "epsilon(1) != 1";
    }
    for (Index i = 0; i < n && ok; ++i) {
      for (Index j = 0; j < n; ++j) {
        const SparseVec& ij = h.product(i, j);
        if (counit_of(h, ij) != h.counit[i] * h.counit[j]) {
          ok = false;
          w = "epsilon(ab) != epsilon(a)epsilon(b) at " + label_tuple(h, {i, j});
          break;
        }
        if (comultiply(h, ij) != tensor_multiply(h, 2, h.comult[i], h.comult[j])) {
          ok = false;
          w = "Delta(ab) != Delta(a)Delta(b) at " + label_tuple(h, {i, j});
          break;
        }
      }
    }
    rep.add("compatibility", ok, w);
  }
  return rep;
}

bool check_antipode(const HopfData& h, const SparseMat& s, std::string* witness) {
  const Index n = h.dim;
  for (Index i = 0; i < n; ++i) {
    SparseVec left(n), right(n);
    for (const auto& [idx, c] : h.comult[i]) {
      const Index a = idx / n, b = idx % n;
      for (const auto& [r, v] : s.col(a)) left.axpy(c * v, h.product(r, b));
      for (const auto& [r, v] : s.col(b)) right.axpy(c * v, h.product(a, r));
    }
    SparseVec target = h.counit[i] * h.unit;
    if (left != target || right != target) {
      if (witness) *witness = "S * id != u epsilon at " + label_tuple(h, {i});
      return false;
    }
  }
  return true;
}

Report verify_hopf(const HopfData& h) {
  Report rep = verify_bialgebra(h);
  if (!rep.ok()) {
    rep.add("antipode", false, "bialgebra axioms fail");
    return rep;
  }
  std::string w;
  bool ok = false;
  try {
    SparseMat s = h.antipode ? *h.antipode : compute_antipode(h);
    ok = check_antipode(h, s, &w);
  } catch (const std::exception& e) {
    w = e.what();
  }
  rep.add("antipode", ok, w);
  return rep;
}

SparseMat compute_antipode(const HopfData& h) {
  TensorCoalgebra c(h, 1);
  TensorAlgebra a(h, 1);
  auto s = convolution_inverse(SparseMat::identity(h.dim), c, a);
  if (!s) throw std::runtime_error("identity is not convolution invertible: not a Hopf algebra");
  if (!invert_matrix(*s)) throw std::runtime_error("antipode is not bijective");
  return *s;
}

HopfData with_antipode(HopfData h) {
  if (!h.antipode) h.antipode = compute_antipode(h);
  return h;
}

const SparseMat& antipode_of(const HopfData& h) {
  if (!h.antipode) throw std::logic_error("antipode not attached");
  return *h.antipode;
}

SparseMat antipode_inverse(const HopfData& h) {
  auto inv = invert_matrix(antipode_of(h));
  if (!inv) throw std::runtime_error("antipode is not bijective");
  return *inv;
}

HopfData dual_hopf(const HopfData& h) {
  const Index n = h.dim;
  HopfData d = empty_hopf(n);
  d.scalar_order = h.scalar_order;
  for (Index i = 0; i < n; ++i) d.labels[i] = h.labels[i] + "*";
  for (Index k = 0; k < n; ++k) {
    for (const auto& [idx, c] : h.comult[k]) d.mult[idx].add(k, c);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& [k, c] : h.product(i, j)) d.comult[k].add(i * n + j, c);
    }
  }
  for (Index k = 0; k < n; ++k) {
    d.unit.set(k, h.counit[k]);
    d.counit[k] = h.unit.get(k);
  }
  if (h.antipode) d.antipode = h.antipode->transpose();
  d.grading = h.grading;
  return d;
}

bool is_cocommutative(const HopfData& h) {
  for (Index i = 0; i < h.dim; ++i) {
    if (flip(h.comult[i], h.dim) != h.comult[i]) return false;
  }
  return true;
}

std::vector<Index> grouplikes_in_basis(const HopfData& h) {
  std::vector<Index> out;
  for (Index i = 0; i < h.dim; ++i) {
    SparseVec e = SparseVec::unit(h.dim, i);
    if (h.comult[i] == tensor(e, e)) out.push_back(i);
  }
  return out;
}

bool same_structure(const HopfData& a, const HopfData& b, std::string* witness) {
  std::vector<Index> id(a.dim);
  for (Index i = 0; i < a.dim; ++i) id[i] = i;
  return same_structure_under(a, b, id, witness);
}

bool same_structure_under(const HopfData& a, const HopfData& b, const std::vector<Index>& perm,
                          std::string* witness) {
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (a.dim != b.dim) return fail("dimensions differ");
  const Index n = a.dim;
  auto mapv = [&](const SparseVec& v, int k) {
    SparseVec out(v.dim());
    for (const auto& [idx, c] : v) {
      auto dg = digits(idx, n, k);
      Index r = 0;
      for (Index x : dg) r = r * n + perm[x];
      out.set(r, c);
    }
    return out;
  };
  if (mapv(a.unit, 1) != b.unit) return fail("units differ");
  for (Index i = 0; i < n; ++i) {
    if (a.counit[i] != b.counit[perm[i]]) return fail("counits differ at " + a.labels[i]);
    if (mapv(a.comult[i], 2) != b.comult[perm[i]]) return fail("comult differs at " + a.labels[i]);
    for (Index j = 0; j < n; ++j) {
      if (mapv(a.product(i, j), 1) != b.product(perm[i], perm[j])) {
        return fail("mult differs at (" + a.labels[i] + ", " + a.labels[j] + ")");
      }
    }
  }
  return true;
}

SparseVec Algebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseVec out(dim());
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) product_acc(i, j, x * y, out);
  }
  return out;
}

void FieldAlgebra::product_acc(Index, Index, const CycScalar& c, SparseVec& out) const {
  out.add(0, c);
}

SparseVec FieldAlgebra::unit() const { return SparseVec::unit(1, 0); }

TensorAlgebra::TensorAlgebra(const HopfData& h, int k, bool use_grading)
    : h_(h), k_(k), dim_(ipow(h.dim, k)), graded_(use_grading && h.grading.has_value()) {}

void TensorAlgebra::product_acc(Index i, Index j, const CycScalar& c, SparseVec& out) const {
  basis_tensor_product(h_, k_, i, j, c, out);
}

SparseVec TensorAlgebra::unit() const { return one_tensor(h_, k_); }

std::optional<int> TensorAlgebra::degree(Index i) const {
  if (!graded_) return std::nullopt;
  int d = 0;
  for (Index x : digits(i, h_.dim, k_)) d += (*h_.grading)[x];
  return d;
}

TensorCoalgebra::TensorCoalgebra(const HopfData& h, int k, bool use_grading)
    : h_(h), k_(k), dim_(ipow(h.dim, k)), graded_(use_grading && h.grading.has_value()) {}

SparseVec TensorCoalgebra::comult(Index i) const {
  if (k_ == 1) return h_.comult[i];
  const auto d = digits(i, h_.dim, k_);
  struct Term {
    Index a, b;
    CycScalar c;
  };
  std::vector<Term> cur{{0, 0, CycScalar(1L)}}, next;
  for (int s = 0; s < k_; ++s) {
    next.clear();
    for (const auto& t : cur) {
      for (const auto& [pair, v] : h_.comult[d[s]]) {
        next.push_back({t.a * h_.dim + pair / h_.dim, t.b * h_.dim + pair % h_.dim, t.c * v});
      }
    }
    cur.swap(next);
  }
  SparseVec out(dim_ * dim_);
  for (const auto& t : cur) out.add(t.a * dim_ + t.b, t.c);
  return out;
}

CycScalar TensorCoalgebra::counit(Index i) const {
  CycScalar c(1L);
  for (Index x : digits(i, h_.dim, k_)) c *= h_.counit[x];
  return c;
}

std::optional<int> TensorCoalgebra::degree(Index i) const {
  if (!graded_) return std::nullopt;
  int d = 0;
  for (Index x : digits(i, h_.dim, k_)) d += (*h_.grading)[x];
  return d;
}

SparseMat convolution_product(const SparseMat& f, const SparseMat& g, const Coalgebra& c,
                              const Algebra& a) {
  if (f.cols() != c.dim() || g.cols() != c.dim() || f.rows() != a.dim() || g.rows() != a.dim()) {
    throw std::invalid_argument("convolution_product: dimension mismatch");
  }
  const Index nc = c.dim();
  SparseMat out(a.dim(), nc);
  for (Index x = 0; x < nc; ++x) {
    SparseVec col(a.dim());
    SparseVec dx = c.comult(x);
    for (const auto& [idx, coef] : dx) {
      const SparseVec& f1 = f.col(idx / nc);
      if (f1.is_zero()) continue;
      const SparseVec& g2 = g.col(idx % nc);
      if (g2.is_zero()) continue;
      for (const auto& [i, fi] : f1) {
        CycScalar cf = coef * fi;
        for (const auto& [j, gj] : g2) a.product_acc(i, j, cf * gj, col);
      }
    }
    out.col_mut(x) = std::move(col);
  }
  return out;
}

SparseMat convolution_unit(const Coalgebra& c, const Algebra& a) {
  SparseMat out(a.dim(), c.dim());
  SparseVec one = a.unit();
  for (Index x = 0; x < c.dim(); ++x) {
    CycScalar e = c.counit(x);
    if (!e.is_zero()) out.col_mut(x) = e * one;
  }
  return out;
}

namespace {

// Solves f * g = u epsilon on the subcoalgebra spanned by `support`, with g
// vanishing off `support`.
std::optional<SparseMat> right_inverse_on(const SparseMat& f, const Coalgebra& c, const Algebra& a,
                                          const std::vector<Index>& support) {
  const Index nc = c.dim();
  const Index na = a.dim();
  std::vector<Index> pos(nc, -1);
  for (Index p = 0; p < static_cast<Index>(support.size()); ++p) pos[support[p]] = p;
  const Index ns = static_cast<Index>(support.size());
  SparseMat m(ns * na, ns * na);
  SparseVec rhs(ns * na);
  SparseVec one = a.unit();
  for (Index p = 0; p < ns; ++p) {
    const Index x = support[p];
    for (const auto& [r, v] : one) rhs.add_product(p * na + r, c.counit(x), v);
    for (const auto& [idx, coef] : c.comult(x)) {
      const Index x1 = idx / nc, x2 = idx % nc;
      if (pos[x2] < 0) throw std::logic_error("degree-zero part is not a subcoalgebra");
      for (const auto& [i, fi] : f.col(x1)) {
        CycScalar cf = coef * fi;
        for (Index b = 0; b < na; ++b) {
          SparseVec prod(na);
          a.product_acc(i, b, cf, prod);
          SparseVec& column = m.col_mut(pos[x2] * na + b);
          for (const auto& [r, v] : prod) column.add(p * na + r, v);
        }
      }
    }
  }
  auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;
  SparseMat g(na, nc);
  for (const auto& [u, v] : *sol) g.set(u % na, support[u / na], v);
  return g;
}

}  // namespace

std::optional<SparseMat> convolution_inverse(const SparseMat& f, const Coalgebra& c,
                                             const Algebra& a) {
  const Index nc = c.dim();
  SparseMat unit = convolution_unit(c, a);
  std::optional<SparseMat> result;
  if (c.graded()) {
    std::vector<Index> zero;
    SparseMat fpos(a.dim(), nc);
    int max_degree = 0;
    for (Index x = 0; x < nc; ++x) {
      int d = *c.degree(x);
      max_degree = std::max(max_degree, d);
      if (d == 0) {
        zero.push_back(x);
      } else {
        fpos.col_mut(x) = f.col(x);
      }
    }
    auto g0 = right_inverse_on(f, c, a, zero);
    if (!g0) return std::nullopt;
    // f * g0 = u epsilon + n with n vanishing in degrees below 1.
    SparseMat n = convolution_product(fpos, *g0, c, a);
    SparseMat neg_n(a.dim(), nc);
    for (Index x = 0; x < nc; ++x) neg_n.col_mut(x) = -n.col(x);
    SparseMat sum = unit, term = unit;
    for (int k = 1; k <= max_degree + 1; ++k) {
      term = convolution_product(term, neg_n, c, a);
      if (term.is_zero()) break;
      for (Index x = 0; x < nc; ++x) sum.col_mut(x) += term.col(x);
    }
    result = convolution_product(*g0, sum, c, a);
  } else {
    std::vector<Index> all(nc);
    for (Index x = 0; x < nc; ++x) all[x] = x;
    result = right_inverse_on(f, c, a, all);
    if (!result) return std::nullopt;
  }
  if (convolution_product(f, *result, c, a) != unit) return std::nullopt;
  if (convolution_product(*result, f, c, a) != unit) return std::nullopt;
  return result;
}

std::optional<SparseVec> algebra_invert(const SparseVec& x, const Algebra& a) {
  const Index n = a.dim();
  SparseVec one = a.unit();
  std::optional<SparseVec> result;
  auto solve_on = [&](const SparseVec& y, const std::vector<Index>& support) -> std::optional<SparseVec> {
    std::vector<SparseVec> cols;
    for (Index j : support) {
      SparseVec col(n);
      for (const auto& [i, c] : y) a.product_acc(i, j, c, col);
      cols.push_back(std::move(col));
    }
    auto sol = solve_linear(SparseMat::from_columns(n, std::move(cols)), one);
    if (!sol) return std::nullopt;
    SparseVec out(n);
    for (const auto& [p, v] : *sol) out.set(support[p], v);
    return out;
  };
  if (x.is_zero()) return std::nullopt;
  if (a.graded()) {
    SparseVec x0(n);
    std::vector<Index> zero;
    int max_degree = 0;
    for (Index i = 0; i < n; ++i) {
      int d = *a.degree(i);
      max_degree = std::max(max_degree, d);
      if (d == 0) zero.push_back(i);
    }
    for (const auto& [i, c] : x) {
      if (*a.degree(i) == 0) x0.set(i, c);
    }
    auto b0 = solve_on(x0, zero);
    if (!b0) return std::nullopt;
    SparseVec nil = a.multiply(x, *b0) - one;
    SparseVec neg = -nil;
    SparseVec sum = one, term = one;
    for (int k = 1; k <= max_degree + 1; ++k) {
      term = a.multiply(term, neg);
      if (term.is_zero()) break;
      sum += term;
    }
    result = a.multiply(*b0, sum);
  } else {
    std::vector<Index> all(n);
    for (Index i = 0; i < n; ++i) all[i] = i;
    result = solve_on(x, all);
    if (!result) return std::nullopt;
  }
  if (a.multiply(x, *result) != one || a.multiply(*result, x) != one) return std::nullopt;
  return result;
}

}  // namespace hopflab
