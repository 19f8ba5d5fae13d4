#include "hopflab/braided.hpp"

#include <map>
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

void braided_basis_product(const BraidedHopf& r, int k, Index ia, Index ib, const CycScalar& c,
                           SparseVec& out) {
  const HopfData& R = r.alg;
  if (k == 1) {
    out.axpy(c, R.product(ia, ib));
    return;
  }
  const Index d = R.dim;
  const Index tail = ipow(d, k - 1);
  const Index a = ia / tail, arest = ia % tail;
  const Index b = ib / tail, brest = ib % tail;
  SparseVec co = tensor_coaction(r.yd, arest, k - 1);
  for (const auto& [idx, coef] : co) {
    const Index h = idx / tail, a0 = idx % tail;
    SparseVec first(d);
    for (const auto& [t, v] : r.yd.act_basis(h, b)) first.axpy(v, R.product(a, t));
    if (first.is_zero()) continue;
    SparseVec rest(tail);
    braided_basis_product(r, k - 1, a0, brest, CycScalar(1L), rest);
    CycScalar cc = c * coef;
    for (const auto& [i, x] : first) {
      CycScalar cx = cc * x;
      for (const auto& [j, y] : rest) out.add_product(i * tail + j, cx, y);
    }
  }
}

}  // namespace

SparseVec tensor_coaction(const YDModuleData& m, Index basis_tensor, int k) {
  const HopfData& h = *m.base;
  const Index d = m.dim;
  std::map<Index, SparseVec> cur;
  cur.emplace(0, h.unit);
  for (Index s : digits(basis_tensor, d, k)) {
    std::map<Index, SparseVec> next;
    for (const auto& [rest, hv] : cur) {
      for (const auto& [cidx, y] : m.coaction[s]) {
        const Index kk = cidx / d, w = cidx % d;
        SparseVec prod(h.dim);
        for (const auto& [i, x] : hv) prod.axpy(x * y, h.product(i, kk));
        auto [it, inserted] = next.try_emplace(rest * d + w, h.dim);
        it->second += prod;
      }
    }
    cur.swap(next);
  }
  const Index dk = ipow(d, k);
  SparseVec out(h.dim * dk);
  for (const auto& [rest, hv] : cur) {
    for (const auto& [i, x] : hv) out.add(i * dk + rest, x);
  }
  return out;
}

SparseVec tensor_action(const YDModuleData& m, Index h, const SparseVec& x, int k) {
  const HopfData& H = *m.base;
  const Index d = m.dim;
  SparseVec out(ipow(d, k));
  if (k == 1) {
    for (const auto& [j, y] : x) out.axpy(y, m.act_basis(h, j));
    return out;
  }
  SparseVec dh = iterated_comult(H, h, k);
  for (const auto& [hidx, hc] : dh) {
    const auto hs = digits(hidx, H.dim, k);
    for (const auto& [xidx, xc] : x) {
      const auto xs = digits(xidx, d, k);
      std::vector<std::pair<Index, CycScalar>> terms{{0, hc * xc}}, next;
      for (int s = 0; s < k && !terms.empty(); ++s) {
        next.clear();
        const SparseVec& img = m.act_basis(hs[s], xs[s]);
        for (const auto& [idx, c] : terms) {
          for (const auto& [w, v] : img) next.emplace_back(idx * d + w, c * v);
        }
        terms.swap(next);
      }
      for (const auto& [idx, c] : terms) out.add(idx, c);
    }
  }
  return out;
}

SparseVec braided_tensor_multiply(const BraidedHopf& r, int k, const SparseVec& a,
                                  const SparseVec& b) {
  SparseVec out(ipow(r.alg.dim, k));
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) braided_basis_product(r, k, i, j, x * y, out);
  }
  return out;
}

BraidedTensorAlgebra::BraidedTensorAlgebra(const BraidedHopf& r, int k)
    : r_(r), k_(k), dim_(ipow(r.alg.dim, k)) {}

void BraidedTensorAlgebra::product_acc(Index i, Index j, const CycScalar& c, SparseVec& out) const {
  braided_basis_product(r_, k_, i, j, c, out);
}

SparseVec BraidedTensorAlgebra::unit() const { return one_tensor(r_.alg, k_); }

std::optional<int> BraidedTensorAlgebra::degree(Index i) const {
  if (!r_.alg.grading) return std::nullopt;
  int deg = 0;
  for (Index x : digits(i, r_.alg.dim, k_)) deg += (*r_.alg.grading)[x];
  return deg;
}

SparseMat braiding_of(const BraidedHopf& r) {
  const Index d = r.alg.dim;
  const YDModuleData& m = r.yd;
  SparseMat c(d * d, d * d);
  for (Index x = 0; x < d; ++x) {
    for (const auto& [idx, coef] : m.coaction[x]) {
      const Index hh = idx / d, x0 = idx % d;
      for (Index y = 0; y < d; ++y) {
        for (const auto& [t, v] : m.act_basis(hh, y)) c.add(t * d + x0, x * d + y, coef * v);
      }
    }
  }
  return c;
}

Report verify_braided_hopf(const BraidedHopf& r) {
  Report rep;
  const HopfData& R = r.alg;
  const Index n = R.dim;
  const HopfData& H = *r.yd.base;
  const Index nh = H.dim;
  Report plain = verify_bialgebra(R);
  for (const auto& c : plain.checks()) {
    if (c.name != "compatibility") rep.add(c.name, c.pass, c.witness);
  }
  if (!rep.ok()) return rep;

  // Delta(ab) = Delta(a) Delta(b) in the braided tensor square.
  bool ok = comultiply(R, R.unit) == one_tensor(R, 2) && counit_of(R, R.unit).is_one();
  std::string w = ok ? "" : "unit is not grouplike";
  for (Index i = 0; i < n && ok; ++i) {
    for (Index j = 0; j < n; ++j) {
      const SparseVec& ij = R.product(i, j);
      if (counit_of(R, ij) != R.counit[i] * R.counit[j]) {
        ok = false;
        w = "epsilon(ab) at (" + R.labels[i] + ", " + R.labels[j] + ")";
        break;
      }
      if (comultiply(R, ij) != braided_tensor_multiply(r, 2, R.comult[i], R.comult[j])) {
        ok = false;
        w = "Delta(ab) != Delta(a)Delta(b) at (" + R.labels[i] + ", " + R.labels[j] + ")";
        break;
      }
    }
  }
  rep.add("braided-compatibility", ok, w);

  rep.merge(verify_yd(r.yd), "yd/");

  // Structure maps are YD morphisms.
  bool lin = true, colin = true;
  std::string wl, wc;
  for (Index h = 0; h < nh && lin; ++h) {
    if (tensor_action(r.yd, h, R.unit, 1) != H.counit[h] * R.unit) {
      lin = false;
      wl = "h . 1 != epsilon(h) 1";
    }
    for (Index i = 0; i < n && lin; ++i) {
      SparseVec ei = SparseVec::unit(n, i);
      if (counit_of(R, tensor_action(r.yd, h, ei, 1)) != H.counit[h] * R.counit[i]) {
        lin = false;
        wl = "counit not linear at " + R.labels[i];
        break;
      }
      if (comultiply(R, tensor_action(r.yd, h, ei, 1)) != tensor_action(r.yd, h, R.comult[i], 2)) {
        lin = false;
        wl = "Delta not linear at (" + H.labels[h] + ", " + R.labels[i] + ")";
        break;
      }
      for (Index j = 0; j < n; ++j) {
        SparseVec left = tensor_action(r.yd, h, R.product(i, j), 1);
        SparseVec right(n);
        for (const auto& [pair, c] : H.comult[h]) {
          SparseVec a = r.yd.act_basis(pair / nh, i);
          SparseVec b = r.yd.act_basis(pair % nh, j);
          right.axpy(c, multiply(R, a, b));
        }
        if (left != right) {
          lin = false;
          wl = "m not linear at (" + H.labels[h] + ", " + R.labels[i] + ", " + R.labels[j] + ")";
          break;
        }
      }
    }
  }
  rep.add("structure-linear", lin, wl);

  if (yd_coact(r.yd, R.unit) != tensor(H.unit, R.unit)) {
    colin = false;
    wc = "delta(1) != 1 (x) 1";
  }
  for (Index i = 0; i < n && colin; ++i) {
    // (id (x) Delta) delta(a) = delta_{R(x)R}(Delta a)
    SparseVec left(nh * n * n);
    for (const auto& [idx, c] : r.yd.coaction[i]) {
      const Index hh = idx / n, a0 = idx % n;
      for (const auto& [p, v] : R.comult[a0]) left.add_product(hh * n * n + p, c, v);
    }
    SparseVec right(nh * n * n);
    for (const auto& [p, v] : R.comult[i]) right.axpy(v, tensor_coaction(r.yd, p, 2));
    if (left != right) {
      colin = false;
      wc = "Delta not colinear at " + R.labels[i];
      break;
    }
    SparseVec eps(nh);
    for (const auto& [idx, c] : r.yd.coaction[i]) eps.add_product(idx / n, c, R.counit[idx % n]);
    if (eps != R.counit[i] * H.unit) {
      colin = false;
      wc = "counit not colinear at " + R.labels[i];
      break;
    }
    for (Index j = 0; j < n; ++j) {
      SparseVec l = yd_coact(r.yd, R.product(i, j));
      SparseVec rr(nh * n);
      SparseVec t = tensor_coaction(r.yd, i * n + j, 2);
      for (const auto& [idx, c] : t) {
        const Index hh = idx / (n * n), p = idx % (n * n);
        for (const auto& [q, v] : R.product(p / n, p % n)) rr.add_product(hh * n + q, c, v);
      }
      if (l != rr) {
        colin = false;
        wc = "m not colinear at (" + R.labels[i] + ", " + R.labels[j] + ")";
        break;
      }
    }
  }
  rep.add("structure-colinear", colin, wc);
  return rep;
}

BraidedHopf rebase(const BraidedHopf& r, const std::vector<SparseVec>& new_basis,
                   const std::vector<std::string>& labels) {
  const HopfData& R = r.alg;
  const Index n = R.dim;
  if (static_cast<Index>(new_basis.size()) != n) throw std::invalid_argument("rebase: basis size");
  SparseMat p = SparseMat::from_columns(n, new_basis);
  auto pinv_opt = invert_matrix(p);
  if (!pinv_opt) throw std::invalid_argument("rebase: vectors are not a basis");
  const SparseMat& pinv = *pinv_opt;
  const HopfData& H = *r.yd.base;
  const Index nh = H.dim;

  BraidedHopf out;
  out.alg = empty_hopf(n);
  out.alg.scalar_order = R.scalar_order;
  out.alg.labels = labels;
  out.yd = empty_yd(r.yd.base, n);
  out.yd.labels = labels;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      out.alg.mult[i * n + j] = pinv.apply(multiply(R, p.col(i), p.col(j)));
    }
    SparseVec dl = comultiply(R, p.col(i));
    out.alg.comult[i] = map_at(pinv, n, map_at(pinv, n, dl, 2, 0), 2, 1);
    out.alg.counit[i] = counit_of(R, p.col(i));
    for (Index h = 0; h < nh; ++h) {
      out.yd.action[h * n + i] = pinv.apply(yd_act(r.yd, SparseVec::unit(nh, h), p.col(i)));
    }
    SparseVec co(nh * n);
    for (const auto& [idx, c] : yd_coact(r.yd, p.col(i))) {
      for (const auto& [w, v] : pinv.col(idx % n)) co.add_product((idx / n) * n + w, c, v);
    }
    out.yd.coaction[i] = std::move(co);
  }
  out.alg.unit = pinv.apply(R.unit);
  if (R.grading) {
    std::vector<int> g(n);
    for (Index i = 0; i < n; ++i) {
      int d = -1;
      for (const auto& [k, c] : p.col(i)) {
        int dk = (*R.grading)[k];
        if (d >= 0 && d != dk) throw std::invalid_argument("rebase: basis vector is not homogeneous");
        d = dk;
      }
      g[i] = d < 0 ? 0 : d;
    }
    out.alg.grading = g;
  }
  for (Index gen : r.generators) {
    SparseVec e = SparseVec::unit(n, gen);
    for (Index i = 0; i < n; ++i) {
      if (p.col(i) == e) out.generators.push_back(i);
    }
  }
  out.words.assign(n, {});
  out.graded_dims = r.graded_dims;
  out.truncated = r.truncated;
  return out;
}

BraidedHopf braided_dual(const BraidedHopf& r, HopfPtr dual_base) {
  BraidedHopf out;
  out.alg = dual_hopf(r.alg);
  out.alg.antipode.reset();
  out.yd = yd_dual_over_dual(r.yd, std::move(dual_base));
  out.yd.labels = out.alg.labels;
  out.generators = r.generators;
  out.words.assign(r.alg.dim, {});
  out.graded_dims = r.graded_dims;
  out.truncated = r.truncated;
  return out;
}

BraidedHopf braided_over_dual(const BraidedHopf& r, HopfPtr dual_base) {
  BraidedHopf out = r;
  out.yd = yd_over_dual(r.yd, std::move(dual_base));
  return out;
}

}  // namespace hopflab

namespace hopflab {

SparseVec BraidedSquareCoalgebra::comult(Index i) const {
  const HopfData& R = r_.alg;
  const Index n = R.dim, n2 = n * n;
  const Index r = i / n, s = i % n;
  SparseVec out(n2 * n2);
  for (const auto& [rp, rc] : R.comult[r]) {
    const Index r1 = rp / n, r2 = rp % n;
    for (const auto& [sp, sc] : R.comult[s]) {
      const Index s1 = sp / n, s2 = sp % n;
      for (const auto& [ci, cc] : r_.yd.coaction[r2]) {
        const Index h = ci / n, r0 = ci % n;
        for (const auto& [t, tc] : r_.yd.act_basis(h, s1)) {
          out.add_product((r1 * n + t) * n2 + r0 * n + s2, rc * sc, cc * tc);
        }
      }
    }
  }
  return out;
}

CycScalar BraidedSquareCoalgebra::counit(Index i) const {
  const Index n = r_.alg.dim;
  return r_.alg.counit[i / n] * r_.alg.counit[i % n];
}

std::optional<int> BraidedSquareCoalgebra::degree(Index i) const {
  if (!r_.alg.grading) return std::nullopt;
  const Index n = r_.alg.dim;
  return (*r_.alg.grading)[i / n] + (*r_.alg.grading)[i % n];
}

}  // namespace hopflab
