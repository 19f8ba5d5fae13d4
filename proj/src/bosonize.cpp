#include "hopflab/bosonize.hpp"

#include <stdexcept>

namespace hopflab {

HopfData bosonize(const BraidedHopf& r) {
  const HopfData& R = r.alg;
  const HopfData& H = *r.yd.base;
  const Index nr = R.dim, nh = H.dim, n = nr * nh;
  HopfData a = empty_hopf(n);
  a.scalar_order = std::max(R.scalar_order, H.scalar_order);
  for (Index i = 0; i < nr; ++i) {
    for (Index h = 0; h < nh; ++h) {
      std::string l;
      if (R.labels[i] != "1") l = R.labels[i];
      if (H.labels[h] != "1" || l.empty()) l += (l.empty() ? "" : "#") + H.labels[h];
      a.labels[i * nh + h] = l;
    }
  }
  // The labels above can collide when H has a label "1" for a non-unit; fall back to r#h.
  for (Index i = 0; i < nr; ++i) {
    for (Index h = 0; h < nh; ++h) {
      if (a.index_of(a.labels[i * nh + h]) != i * nh + h) {
        for (Index x = 0; x < nr; ++x) {
          for (Index y = 0; y < nh; ++y) a.labels[x * nh + y] = R.labels[x] + "#" + H.labels[y];
        }
        i = nr;
        break;
      }
    }
  }

  // (r # h)(r' # h') = r (h1 . r') # h2 h'
  for (Index i = 0; i < nr; ++i) {
    for (Index h = 0; h < nh; ++h) {
      for (Index j = 0; j < nr; ++j) {
        // sum over h1 (x) h2 of (r (h1 . r'), h2)
        std::vector<SparseVec> by_h2(nh, SparseVec(nr));
        for (const auto& [pair, c] : H.comult[h]) {
          const SparseVec& act = r.yd.act_basis(pair / nh, j);
          if (act.is_zero()) continue;
          by_h2[pair % nh].axpy(c, multiply(R, SparseVec::unit(nr, i), act));
        }
        for (Index k = 0; k < nh; ++k) {
          SparseVec out(n);
          for (Index h2 = 0; h2 < nh; ++h2) {
            if (by_h2[h2].is_zero()) continue;
            for (const auto& [hh, hc] : H.product(h2, k)) {
              for (const auto& [rr, rc] : by_h2[h2]) out.add_product(rr * nh + hh, hc, rc);
            }
          }
          a.mult[(i * nh + h) * n + j * nh + k] = std::move(out);
        }
      }
    }
  }
  for (const auto& [rr, rc] : R.unit) {
    for (const auto& [hh, hc] : H.unit) a.unit.add_product(rr * nh + hh, rc, hc);
  }
  for (Index i = 0; i < nr; ++i) {
    for (Index h = 0; h < nh; ++h) a.counit[i * nh + h] = R.counit[i] * H.counit[h];
  }
  // Delta(r # h) = r1 # r2(-1) h1 (x) r2(0) # h2
  for (Index i = 0; i < nr; ++i) {
    for (Index h = 0; h < nh; ++h) {
      SparseVec out(n * n);
      for (const auto& [rp, rc] : R.comult[i]) {
        const Index r1 = rp / nr, r2 = rp % nr;
        for (const auto& [ci, cc] : r.yd.coaction[r2]) {
          const Index hm = ci / nr, r0 = ci % nr;
          for (const auto& [hp, hc] : H.comult[h]) {
            const Index h1 = hp / nh, h2 = hp % nh;
            for (const auto& [x, xc] : H.product(hm, h1)) {
              out.add_product((r1 * nh + x) * n + r0 * nh + h2, rc * cc, hc * xc);
            }
          }
        }
      }
      a.comult[i * nh + h] = std::move(out);
    }
  }
  if (R.grading) {
    std::vector<int> g(n);
    for (Index i = 0; i < n; ++i) g[i] = (*R.grading)[i / nh];
    a.grading = g;
  }
  // gen # h has positive degree, hence is nilpotent, for every h
  for (Index gen : r.generators) {
    GeneratorSet s{{}, GeneratorKind::Nilpotent};
    for (Index h = 0; h < nh; ++h) s.indices.push_back(smash_index(r, gen, h));
    a.generators.push_back(s);
  }
  for (const auto& gs : H.generators) {
    GeneratorSet s{{}, gs.kind};
    for (Index x : gs.indices) s.indices.push_back(smash_index(r, 0, x));
    a.generators.push_back(s);
  }
  Report rep = verify_bialgebra(a);
  if (!rep.ok()) throw std::logic_error("bosonize: not a bialgebra\n" + rep.to_string());
  // S(r # h) = (1 # S(r(-1) h)) (S_R(r(0)) # 1), S_R the braided antipode
  const bool graded = R.grading.has_value();
  auto sr = convolution_inverse(SparseMat::identity(nr), TensorCoalgebra(R, 1, graded),
                                TensorAlgebra(R, 1, graded));
  if (!sr) throw std::logic_error("bosonize: R has no antipode");
  const SparseMat& sh = antipode_of(H);
  SparseMat s(n, n);
  for (Index i = 0; i < nr; ++i) {
    for (Index h = 0; h < nh; ++h) {
      SparseVec out(n);
      for (const auto& [ci, cc] : r.yd.coaction[i]) {
        const Index hm = ci / nr, r0 = ci % nr;
        SparseVec left(n);
        for (const auto& [x, xc] : H.product(hm, h)) {
          for (const auto& [y, yc] : sh.col(x)) {
            for (const auto& [u, uc] : R.unit) left.add_product(u * nh + y, xc * yc, uc);
          }
        }
        SparseVec right(n);
        for (const auto& [y, yc] : sr->col(r0)) {
          for (const auto& [u, uc] : H.unit) right.add_product(y * nh + u, yc, uc);
        }
        out.axpy(cc, multiply(a, left, right));
      }
      s.col_mut(i * nh + h) = std::move(out);
    }
  }
  a.antipode = std::move(s);
  return a;
}

SparseMat bosonization_projection(const BraidedHopf& r) {
  const Index nr = r.alg.dim, nh = r.yd.base->dim;
  SparseMat p(nh, nr * nh);
  for (Index i = 0; i < nr; ++i) {
    if (r.alg.counit[i].is_zero()) continue;
    for (Index h = 0; h < nh; ++h) p.set(h, i * nh + h, r.alg.counit[i]);
  }
  return p;
}

SparseMat bosonization_inclusion(const BraidedHopf& r) {
  const Index nr = r.alg.dim, nh = r.yd.base->dim;
  SparseMat m(nr * nh, nh);
  for (Index h = 0; h < nh; ++h) {
    for (const auto& [u, c] : r.alg.unit) m.set(u * nh + h, h, c);
  }
  return m;
}

SparseMat smash_embedding(const BraidedHopf& r) {
  const Index nr = r.alg.dim, nh = r.yd.base->dim;
  SparseMat m(nr * nh, nr);
  for (Index i = 0; i < nr; ++i) {
    for (const auto& [u, c] : r.yd.base->unit) m.set(i * nh + u, i, c);
  }
  return m;
}

SparseMat bosonization_vartheta(const BraidedHopf& r, const HopfData& a) {
  const Index n = a.dim;
  // iota pi S as a map A -> A
  SparseMat ips = bosonization_inclusion(r) * (bosonization_projection(r) * antipode_of(a));
  SparseMat out(n, n);
  for (Index x = 0; x < n; ++x) {
    SparseVec v(n);
    for (const auto& [pair, c] : a.comult[x]) {
      const SparseVec& right = ips.col(pair % n);
      if (right.is_zero()) continue;
      v.axpy(c, multiply(a, SparseVec::unit(n, pair / n), right));
    }
    out.col_mut(x) = std::move(v);
  }
  return out;
}

Report verify_bosonization(const BraidedHopf& r, const HopfData& a) {
  Report rep = verify_hopf(a);
  const HopfData& H = *r.yd.base;
  const Index nr = r.alg.dim, nh = H.dim, n = a.dim;
  SparseMat pi = bosonization_projection(r), iota = bosonization_inclusion(r);
  {
    bool ok = pi * iota == SparseMat::identity(nh);
    rep.add("pi-iota", ok, ok ? "" : "pi iota != id");
  }
  {
    // pi and iota are algebra and coalgebra maps
    std::string w;
    for (Index x = 0; x < n && w.empty(); ++x) {
      for (Index y = 0; y < n && w.empty(); ++y) {
        if (pi.apply(a.product(x, y)) != multiply(H, pi.col(x), pi.col(y))) {
          w = "pi(" + a.labels[x] + " " + a.labels[y] + ")";
        }
      }
      SparseVec lhs(nh * nh);
      for (const auto& [pair, c] : a.comult[x]) {
        lhs.axpy(c, tensor(pi.col(pair / n), pi.col(pair % n)));
      }
      if (w.empty() && lhs != comultiply(H, pi.col(x))) w = "Delta pi(" + a.labels[x] + ")";
    }
    for (Index h = 0; h < nh && w.empty(); ++h) {
      for (Index k = 0; k < nh && w.empty(); ++k) {
        if (iota.apply(H.product(h, k)) != multiply(a, iota.col(h), iota.col(k))) {
          w = "iota(" + H.labels[h] + " " + H.labels[k] + ")";
        }
      }
      SparseVec lhs(n * n);
      for (const auto& [pair, c] : H.comult[h]) lhs.axpy(c, tensor(iota.col(pair / nh), iota.col(pair % nh)));
      if (w.empty() && lhs != comultiply(a, iota.col(h))) w = "Delta iota(" + H.labels[h] + ")";
    }
    rep.add("pi-iota-hopf-maps", w.empty(), w);
  }
  SparseMat emb = smash_embedding(r);
  SparseMat th = bosonization_vartheta(r, a);
  {
    std::string w;
    for (Index i = 0; i < nr && w.empty(); ++i) {
      if (th.apply(emb.col(i)) != emb.col(i)) w = "vartheta(" + r.alg.labels[i] + "#1)";
    }
    if (w.empty()) {
      // image of vartheta lies in R # 1
      std::vector<SparseVec> cols = emb.columns();
      for (const auto& c : th.columns()) cols.push_back(c);
      if (rank(SparseMat::from_columns(n, cols)) != nr) w = "image of vartheta is not R#1";
    }
    rep.add("vartheta-projection", w.empty(), w);
  }
  {
    // R # 1 = right coinvariants: (id (x) pi) Delta(x) = x (x) 1
    SparseMat coinv(n * nh, n);
    for (Index x = 0; x < n; ++x) {
      SparseVec v(n * nh);
      for (const auto& [pair, c] : a.comult[x]) {
        for (const auto& [h, hc] : pi.col(pair % n)) v.add_product((pair / n) * nh + h, c, hc);
      }
      v -= tensor(SparseVec::unit(n, x), H.unit);
      coinv.col_mut(x) = v;
    }
    const Index kernel = n - rank(coinv);
    std::string w;
    if (kernel != nr) w = "coinvariant dimension " + std::to_string(kernel);
    for (Index i = 0; i < nr && w.empty(); ++i) {
      if (!coinv.apply(emb.col(i)).is_zero()) w = r.alg.labels[i] + "#1 not coinvariant";
    }
    rep.add("coinvariants", w.empty(), w);
  }
  {
    // Delta_R(r) = (vartheta (x) id) Delta(r # 1)
    std::string w;
    for (Index i = 0; i < nr && w.empty(); ++i) {
      SparseVec lhs(n * n);
      for (const auto& [pair, c] : comultiply(a, emb.col(i))) {
        lhs.axpy(c, tensor(th.col(pair / n), SparseVec::unit(n, pair % n)));
      }
      SparseVec rhs(n * n);
      for (const auto& [pair, c] : r.alg.comult[i]) rhs.axpy(c, tensor(emb.col(pair / nr), emb.col(pair % nr)));
      if (lhs != rhs) w = "Delta_R(" + r.alg.labels[i] + ")";
    }
    rep.add("braided-comult-recovered", w.empty(), w);
  }
  return rep;
}

}  // namespace hopflab
