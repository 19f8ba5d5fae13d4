#include "hopflab/yd.hpp"

#include <stdexcept>

namespace hopflab {

YDModuleData empty_yd(HopfPtr base, Index dim) {
  YDModuleData m;
  m.dim = dim;
  const Index nh = base->dim;
  m.base = std::move(base);
  for (Index i = 0; i < dim; ++i) m.labels.push_back("v" + std::to_string(i));
  m.action.assign(nh * dim, SparseVec(dim));
  m.coaction.assign(dim, SparseVec(nh * dim));
  return m;
}

SparseVec yd_act(const YDModuleData& m, const SparseVec& h, const SparseVec& v) {
  SparseVec out(m.dim);
  for (const auto& [i, x] : h) {
    for (const auto& [j, y] : v) out.axpy(x * y, m.act_basis(i, j));
  }
  return out;
}

SparseVec yd_coact(const YDModuleData& m, const SparseVec& v) {
  SparseVec out(m.base->dim * m.dim);
  for (const auto& [j, y] : v) out.axpy(y, m.coaction[j]);
  return out;
}

Report verify_yd(const YDModuleData& m) {
  Report rep;
  const HopfData& h = *m.base;
  const Index n = h.dim, d = m.dim;
  auto lbl = [&](Index hi, Index v) { return "(" + h.labels[hi] + ", " + m.labels[v] + ")"; };

  bool ok = true;
  std::string w;
  for (Index v = 0; v < d && ok; ++v) {
    if (yd_act(m, h.unit, SparseVec::unit(d, v)) != SparseVec::unit(d, v)) {
      ok = false;
      w = "1 . v != v at " + m.labels[v];
    }
  }
  rep.add("module-unit", ok, w);

  ok = true;
  w.clear();
  for (Index a = 0; a < n && ok; ++a) {
    for (Index b = 0; b < n && ok; ++b) {
      for (Index v = 0; v < d; ++v) {
        SparseVec left = yd_act(m, SparseVec::unit(n, a), m.act_basis(b, v));
        SparseVec right = yd_act(m, h.product(a, b), SparseVec::unit(d, v));
        if (left != right) {
          ok = false;
          w = "h.(k.v) != (hk).v at (" + h.labels[a] + ", " + h.labels[b] + ", " + m.labels[v] + ")";
          break;
        }
      }
    }
  }
  rep.add("module-assoc", ok, w);

  // Comodule axioms: treat coaction tensors as 2-slot objects (H, V).
  ok = true;
  bool cu = true;
  std::string wc;
  w.clear();
  for (Index v = 0; v < d; ++v) {
    const SparseVec& cv = m.coaction[v];
    // (Delta (x) id) delta  vs  (id (x) delta) delta, in H (x) H (x) V.
    SparseVec left(n * n * d), right(n * n * d);
    SparseVec counit_side(d);
    for (const auto& [idx, c] : cv) {
      const Index hh = idx / d, ww = idx % d;
      for (const auto& [pair, x] : h.comult[hh]) left.add_product(pair * d + ww, c, x);
      for (const auto& [idx2, y] : m.coaction[ww]) right.add_product(hh * n * d + idx2, c, y);
      counit_side.add_product(ww, c, h.counit[hh]);
    }
    if (ok && left != right) {
      ok = false;
      w = "comodule coassociativity fails at " + m.labels[v];
    }
    if (cu && counit_side != SparseVec::unit(d, v)) {
      cu = false;
      wc = "comodule counit fails at " + m.labels[v];
    }
  }
  rep.add("comodule-coassoc", ok, w);
  rep.add("comodule-counit", cu, wc);

  // delta(h . v) = h1 v(-1) S(h3) (x) h2 . v(0)
  ok = true;
  w.clear();
  std::optional<SparseMat> s;
  try {
    s = h.antipode ? *h.antipode : compute_antipode(h);
  } catch (const std::exception& e) {
    rep.add("yd-compat", false, e.what());
    return rep;
  }
  for (Index a = 0; a < n && ok; ++a) {
    SparseVec d3 = iterated_comult(h, a, 3);
    for (Index v = 0; v < d; ++v) {
      SparseVec left = yd_coact(m, m.act_basis(a, v));
      SparseVec right(n * d);
      for (const auto& [idx, c] : d3) {
        const Index h1 = idx / (n * n), h2 = (idx / n) % n, h3 = idx % n;
        for (const auto& [cidx, y] : m.coaction[v]) {
          const Index k = cidx / d, w0 = cidx % d;
          SparseVec hk = h.product(h1, k);
          SparseVec outer = multiply(h, hk, s->col(h3));
          const SparseVec& inner = m.act_basis(h2, w0);
          CycScalar cy = c * y;
          for (const auto& [p, x] : outer) {
            for (const auto& [q, z] : inner) right.add_product(p * d + q, cy * x, z);
          }
        }
      }
      if (left != right) {
        ok = false;
        w = "YD compatibility fails at " + lbl(a, v);
        break;
      }
    }
  }
  rep.add("yd-compat", ok, w);
  return rep;
}

bool satisfies_braid_equation(const SparseMat& c, Index d) {
  // Apply both sides to every basis vector of V^{(x)3}.
  auto apply_first = [&](const SparseVec& x) {  // c (x) id on index (a*d+b)*d+e
    SparseVec out(d * d * d);
    for (const auto& [idx, v] : x) {
      const Index ab = idx / d, e = idx % d;
      for (const auto& [r, y] : c.col(ab)) out.add_product(r * d + e, v, y);
    }
    return out;
  };
  auto apply_second = [&](const SparseVec& x) {  // id (x) c
    SparseVec out(d * d * d);
    for (const auto& [idx, v] : x) {
      const Index a = idx / (d * d), be = idx % (d * d);
      for (const auto& [r, y] : c.col(be)) out.add_product(a * d * d + r, v, y);
    }
    return out;
  };
  for (Index i = 0; i < d * d * d; ++i) {
    SparseVec e = SparseVec::unit(d * d * d, i);
    if (apply_first(apply_second(apply_first(e))) != apply_second(apply_first(apply_second(e)))) {
      return false;
    }
  }
  return true;
}

SparseMat braiding(const YDModuleData& m) {
  const Index d = m.dim;
  SparseMat c(d * d, d * d);
  for (Index x = 0; x < d; ++x) {
    for (const auto& [idx, coef] : m.coaction[x]) {
      const Index hh = idx / d, x0 = idx % d;
      for (Index y = 0; y < d; ++y) {
        for (const auto& [r, v] : m.act_basis(hh, y)) c.add(r * d + x0, x * d + y, coef * v);
      }
    }
  }
  if (!satisfies_braid_equation(c, d)) throw std::logic_error("braiding fails the braid equation");
  return c;
}

YDModuleData yd_dual(const YDModuleData& m) {
  const HopfData& h = *m.base;
  const Index n = h.dim, d = m.dim;
  YDModuleData out = empty_yd(m.base, d);
  for (Index i = 0; i < d; ++i) out.labels[i] = m.labels[i] + "*";
  SparseMat s = antipode_of(h);
  SparseMat sinv = antipode_inverse(h);
  // <h . f_i, v_j> = <f_i, S(h) . v_j>
  for (Index a = 0; a < n; ++a) {
    for (Index j = 0; j < d; ++j) {
      SparseVec img = yd_act(m, s.col(a), SparseVec::unit(d, j));
      for (const auto& [i, c] : img) out.action[a * d + i].add(j, c);
    }
  }
  // f_(-1) <f_(0), v> = S^{-1}(v_(-1)) <f, v_(0)>
  for (Index j = 0; j < d; ++j) {
    for (const auto& [idx, c] : m.coaction[j]) {
      const Index hh = idx / d, w = idx % d;
      for (const auto& [r, y] : sinv.col(hh)) out.coaction[w].add_product(r * d + j, c, y);
    }
  }
  return out;
}

YDModuleData yd_dual_over_dual(const YDModuleData& m, HopfPtr dual_base) {
  const HopfData& h = *m.base;
  const Index n = h.dim, d = m.dim;
  YDModuleData out = empty_yd(std::move(dual_base), d);
  for (Index i = 0; i < d; ++i) out.labels[i] = m.labels[i] + "*";
  // <f_[-1], h> <f_[0], v> = <f, h . v>
  for (Index a = 0; a < n; ++a) {
    for (Index j = 0; j < d; ++j) {
      for (const auto& [i, c] : m.act_basis(a, j)) out.coaction[i].add(a * d + j, c);
    }
  }
  // <alpha -> f, v> = <alpha, v_(-1)> <f, v_(0)>
  for (Index j = 0; j < d; ++j) {
    for (const auto& [idx, c] : m.coaction[j]) {
      const Index hh = idx / d, w = idx % d;
      out.action[hh * d + w].add(j, c);
    }
  }
  return out;
}

YDModuleData yd_over_dual(const YDModuleData& m, HopfPtr dual_base) {
  const HopfData& h = *m.base;
  const Index n = h.dim, d = m.dim;
  YDModuleData out = empty_yd(std::move(dual_base), d);
  out.labels = m.labels;
  SparseMat s = antipode_of(h);
  SparseMat sinv = antipode_inverse(h);
  // alpha -> v = <alpha, S(v_(-1))> v_(0)
  for (Index j = 0; j < d; ++j) {
    for (const auto& [idx, c] : m.coaction[j]) {
      const Index hh = idx / d, w = idx % d;
      for (const auto& [r, y] : s.col(hh)) out.action[r * d + j].add_product(w, c, y);
    }
  }
  // <v_[-1], h> v_[0] = S^{-1}(h) . v
  for (Index a = 0; a < n; ++a) {
    for (Index j = 0; j < d; ++j) {
      SparseVec img = yd_act(m, sinv.col(a), SparseVec::unit(d, j));
      for (const auto& [w, c] : img) out.coaction[j].add(a * d + w, c);
    }
  }
  return out;
}

void DiagonalRealization::validate() const {
  auto bad = [](const std::string& w) { throw std::invalid_argument("realization: " + w); };
  if (!group.is_abelian()) bad("group is not abelian");
  if (static_cast<int>(gs.size()) != theta || static_cast<int>(chis.size()) != theta) bad("rank");
  for (int i = 0; i < theta; ++i) {
    for (int a = 0; a < group.order; ++a) {
      for (int b = 0; b < group.order; ++b) {
        if (chis[i][group.mul(a, b)] != chis[i][a] * chis[i][b]) {
          bad("chi_" + std::to_string(i + 1) + " is not multiplicative");
        }
      }
    }
    for (int j = 0; j < theta; ++j) {
      if (chis[i][gs[j]] != qmatrix[j][i]) bad("chi_i(g_j) != q_ji");
    }
  }
}

DiagonalRealization make_realization(const GroupTable& g, const std::vector<int>& gs,
                                     const std::vector<std::vector<CycScalar>>& chis) {
  DiagonalRealization r;
  r.theta = static_cast<int>(gs.size());
  r.group = g;
  r.gs = gs;
  r.chis = chis;
  r.qmatrix.assign(r.theta, std::vector<CycScalar>(r.theta));
  for (int i = 0; i < r.theta; ++i) {
    for (int j = 0; j < r.theta; ++j) r.qmatrix[i][j] = chis[j][gs[i]];
  }
  r.validate();
  return r;
}

std::vector<CycScalar> cyclic_character(int n, const CycScalar& root) {
  std::vector<CycScalar> out;
  for (int k = 0; k < n; ++k) out.push_back(root.pow(k));
  return out;
}

YDModuleData realization_module(const DiagonalRealization& r, HopfPtr base) {
  const Index d = r.theta;
  YDModuleData m = empty_yd(base, d);
  for (Index i = 0; i < d; ++i) {
    m.labels[i] = "x" + std::to_string(i + 1);
    for (Index a = 0; a < base->dim; ++a) m.action[a * d + i].set(i, r.chis[i][a]);
    m.coaction[i].set(static_cast<Index>(r.gs[i]) * d + i, CycScalar(1L));
  }
  return m;
}

YDModuleData transposition_module(const GroupTable& sn, HopfPtr base, bool with_sign) {
  const auto x = transpositions(sn);
  const Index d = static_cast<Index>(x.size());
  std::vector<Index> pos(sn.order, -1);
  for (Index i = 0; i < d; ++i) pos[x[i]] = i;
  YDModuleData m = empty_yd(base, d);
  for (Index i = 0; i < d; ++i) {
    m.labels[i] = "y" + sn.labels[x[i]];
    m.action[static_cast<Index>(x[i]) * d + i].set(i, CycScalar(1L));
    for (int w = 0; w < sn.order; ++w) {
      const Index j = pos[sn.conj_by(x[i], w)];
      m.coaction[i].set(w * d + j, CycScalar(static_cast<long>(with_sign ? sign(sn, w) : 1)));
    }
  }
  return m;
}

YDModuleData transposition_module_extended(const GroupTable& sn, const GroupTable& f,
                                           const RightAction& act, HopfPtr base) {
  const auto x = transpositions(sn);
  const Index d = static_cast<Index>(x.size());
  const Index nf = f.order;
  std::vector<Index> pos(sn.order, -1);
  for (Index i = 0; i < d; ++i) pos[x[i]] = i;
  YDModuleData m = empty_yd(base, d);
  for (Index i = 0; i < d; ++i) {
    m.labels[i] = "y" + sn.labels[x[i]];
    for (int a = 0; a < f.order; ++a) {
      const int moved = act(x[i], f.inverse(a));
      m.action[(static_cast<Index>(moved) * nf + a) * d + i].set(pos[moved], CycScalar(1L));
    }
    for (int w = 0; w < sn.order; ++w) {
      const Index j = pos[sn.conj_by(x[i], w)];
      m.coaction[i].set((static_cast<Index>(w) * nf + f.identity) * d + j,
                        CycScalar(static_cast<long>(sign(sn, w))));
    }
  }
  return m;
}

}  // namespace hopflab
