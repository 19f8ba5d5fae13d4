#include "hopflab/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopflab {

BraidedHopf nichols_algebra(const YDModuleData& v, int max_degree) {
  const Index theta = v.dim;
  const HopfData& H = *v.base;
  const Index nh = H.dim;
  SparseMat c = braiding(v);

  // Per basis element data, grown degree by degree.
  std::vector<int> degree{0};
  std::vector<Index> parent{-1};
  std::vector<int> last{-1};
  std::vector<std::vector<int>> words{{}};
  std::vector<SparseVec> deriv{SparseVec()};       // over theta * dim(B^{n-1}), local
  std::vector<Index> local{0};                      // index inside its degree
  std::vector<std::vector<Index>> by_degree{{0}};
  // rmul[k][b]: b x_k in global coordinates (dimension fixed at the end).
  std::vector<std::vector<SparseVec>> rmul(theta);

  for (Index j = 0; j < theta; ++j) {
    const Index g = static_cast<Index>(degree.size());
    degree.push_back(1);
    parent.push_back(0);
    last.push_back(static_cast<int>(j));
    words.push_back({static_cast<int>(j)});
    deriv.push_back(SparseVec::unit(theta, j));
    local.push_back(j);
    rmul[j].push_back(SparseVec::unit(0, g));
  }
  by_degree.push_back({});
  for (Index j = 0; j < theta; ++j) by_degree[1].push_back(1 + j);

  bool truncated = false;
  for (int n = 2;; ++n) {
    const auto& prev = by_degree[n - 1];
    const Index dprev = static_cast<Index>(prev.size());
    IncrementalBasis ib(theta * dprev);
    std::vector<Index> accepted;
    std::vector<Index> new_globals;
    // rmul entries for prev elements, in terms of accepted (local) indices.
    std::vector<std::vector<SparseVec>> pending(theta, std::vector<SparseVec>(dprev));
    for (Index p = 0; p < dprev; ++p) {
      const Index b = prev[p];
      for (Index j = 0; j < theta; ++j) {
        // d_l(b x_j) = [l = j] b + sum_{i,k} c^{kl}_{ij} d_i(b) x_k
        SparseVec dv(theta * dprev);
        dv.add(j * dprev + p, CycScalar(1L));
        const Index dpp = static_cast<Index>(by_degree[n - 2].size());
        for (const auto& [pos, coef] : deriv[b]) {
          const Index i = pos / dpp, u = by_degree[n - 2][pos % dpp];
          for (const auto& [kl, cv] : c.col(i * theta + j)) {
            const Index k = kl / theta, l = kl % theta;
            for (const auto& [t, rv] : rmul[k][u]) dv.add_product(l * dprev + local[t], coef * cv, rv);
          }
        }
        auto res = ib.offer(dv);
        if (res.accepted) {
          accepted.push_back(static_cast<Index>(accepted.size()));
          new_globals.push_back(-1);
          SparseVec e(0);
          e.set(res.new_index, CycScalar(1L));
          pending[j][p] = e;
          // remember parent data
          degree.push_back(n);
          parent.push_back(b);
          last.push_back(static_cast<int>(j));
          auto w = words[b];
          w.push_back(static_cast<int>(j));
          words.push_back(w);
          deriv.push_back(dv);
          local.push_back(res.new_index);
          new_globals.back() = static_cast<Index>(degree.size()) - 1;
        } else {
          pending[j][p] = res.coords;
        }
      }
    }
    if (accepted.empty()) {
      for (Index j = 0; j < theta; ++j) {
        for (Index p = 0; p < dprev; ++p) rmul[j].push_back(SparseVec(0));
      }
      break;
    }
    if (n > max_degree) {
      // Drop the degree; products into it are cut to zero.
      truncated = true;
      const std::size_t keep = degree.size() - accepted.size();
      degree.resize(keep);
      parent.resize(keep);
      last.resize(keep);
      words.resize(keep);
      deriv.resize(keep);
      local.resize(keep);
      for (Index j = 0; j < theta; ++j) {
        for (Index p = 0; p < dprev; ++p) rmul[j].push_back(SparseVec(0));
      }
      break;
    }
    by_degree.push_back(new_globals);
    for (Index j = 0; j < theta; ++j) {
      for (Index p = 0; p < dprev; ++p) {
        SparseVec g(0);
        for (const auto& [t, x] : pending[j][p]) g.set(new_globals[t], x);
        rmul[j].push_back(g);
      }
    }
  }

  const Index dim = static_cast<Index>(degree.size());
  for (auto& row : rmul) {
    row.resize(dim, SparseVec(0));
    for (auto& x : row) x.set_dim(dim);
  }
  auto right_mult = [&](const SparseVec& x, Index k) {
    SparseVec out(dim);
    for (const auto& [t, a] : x) out.axpy(a, rmul[k][t]);
    return out;
  };

  BraidedHopf r;
  HopfData& R = r.alg;
  R = empty_hopf(dim);
  R.scalar_order = H.scalar_order;
  for (Index b = 0; b < dim; ++b) {
    std::string l;
    for (int x : words[b]) l += v.labels[x];
    R.labels[b] = l.empty() ? "1" : l;
  }
  R.unit.set(0, CycScalar(1L));
  R.counit[0] = CycScalar(1L);
  R.grading = degree;
  // Products: e_a e_b = (e_a e_parent(b)) x_last(b).
  for (Index a = 0; a < dim; ++a) {
    R.mult[a * dim + 0] = SparseVec::unit(dim, a);
    for (Index b = 1; b < dim; ++b) {
      R.mult[a * dim + b] = right_mult(R.mult[a * dim + parent[b]], last[b]);
    }
  }

  r.yd = empty_yd(v.base, dim);
  r.yd.labels = R.labels;
  YDModuleData& m = r.yd;
  for (Index h = 0; h < nh; ++h) m.action[h * dim + 0] = H.counit[h] * SparseVec::unit(dim, 0);
  m.coaction[0] = tensor(H.unit, SparseVec::unit(dim, 0));
  for (Index b = 1; b < dim; ++b) {
    const Index pb = parent[b];
    const Index j = last[b];
    // h . (u x_j) = (h1 . u)(h2 . x_j)
    for (Index h = 0; h < nh; ++h) {
      SparseVec out(dim);
      for (const auto& [pair, cf] : H.comult[h]) {
        const SparseVec& hu = m.act_basis(pair / nh, pb);
        if (hu.is_zero()) continue;
        const SparseVec& hx = v.act_basis(pair % nh, j);
        for (const auto& [k, xk] : hx) out.axpy(cf * xk, right_mult(hu, k));
      }
      m.action[h * dim + b] = std::move(out);
    }
    // delta(u x_j) = u(-1) x_j(-1) (x) u(0) x_j(0)
    SparseVec co(nh * dim);
    for (const auto& [ui, uc] : m.coaction[pb]) {
      const Index hu = ui / dim, u0 = ui % dim;
      for (const auto& [xi, xc] : v.coaction[j]) {
        const Index hx = xi / theta, x0 = xi % theta;
        SparseVec rr = rmul[x0][u0];
        for (const auto& [hh, hc] : H.product(hu, hx)) {
          for (const auto& [t, tv] : rr) co.add_product(hh * dim + t, uc * xc * hc, tv);
        }
      }
    }
    m.coaction[b] = std::move(co);
  }
  // Braided coproduct: Delta(u x_j) = Delta(u)(x_j (x) 1 + 1 (x) x_j).
  R.comult[0] = SparseVec::unit(dim * dim, 0);
  for (Index b = 1; b < dim; ++b) {
    const Index pb = parent[b];
    const Index j = last[b];
    SparseVec out(dim * dim);
    for (const auto& [pair, pc] : R.comult[pb]) {
      const Index rr = pair / dim, ss = pair % dim;
      // (r (x) s)(x_j (x) 1) = r (s(-1) . x_j) (x) s(0)
      for (const auto& [si, sc] : m.coaction[ss]) {
        const Index hs = si / dim, s0 = si % dim;
        const SparseVec& hx = v.act_basis(hs, j);
        for (const auto& [k, xk] : hx) {
          for (const auto& [t, tv] : rmul[k][rr]) out.add_product(t * dim + s0, pc * sc * xk, tv);
        }
      }
      // (r (x) s)(1 (x) x_j) = r (x) s x_j
      for (const auto& [t, tv] : rmul[j][ss]) out.add_product(rr * dim + t, pc, tv);
    }
    R.comult[b] = std::move(out);
  }

  for (Index j = 0; j < theta; ++j) r.generators.push_back(1 + j);
  r.words = words;
  for (const auto& level : by_degree) r.graded_dims.push_back(static_cast<Index>(level.size()));
  r.truncated = truncated;
  return r;
}

namespace {

// Reduced word of a permutation as adjacent transpositions s_i (0-based),
// p = s_{w0} s_{w1} ... .
std::vector<int> reduced_word(std::vector<int> p) {
  std::vector<int> w;
  const int n = static_cast<int>(p.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        w.push_back(i);
        changed = true;
      }
    }
  }
  std::reverse(w.begin(), w.end());
  return w;
}

SparseVec apply_ci(const SparseMat& c, Index d, int n, int i, const SparseVec& x) {
  Index tail = 1;
  for (int s = i + 2; s < n; ++s) tail *= d;
  SparseVec out(x.dim());
  for (const auto& [idx, a] : x) {
    const Index suffix = idx % tail;
    const Index pair = (idx / tail) % (d * d);
    const Index prefix = idx / tail / (d * d);
    for (const auto& [q, v] : c.col(pair)) out.add_product((prefix * d * d + q) * tail + suffix, a, v);
  }
  return out;
}

}  // namespace

std::vector<Index> symmetrizer_dims(const SparseMat& c, Index d, int max_degree) {
  std::vector<Index> dims{1};
  if (max_degree >= 1) dims.push_back(d);
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> words;
    do {
      words.push_back(reduced_word(p));
    } while (std::next_permutation(p.begin(), p.end()));
    Index total = 1;
    for (int s = 0; s < n; ++s) total *= d;
    IncrementalBasis ib(total);
    for (Index e = 0; e < total; ++e) {
      SparseVec acc(total);
      const SparseVec base = SparseVec::unit(total, e);
      for (const auto& w : words) {
        SparseVec x = base;
        for (auto it = w.rbegin(); it != w.rend() && !x.is_zero(); ++it) x = apply_ci(c, d, n, *it, x);
        acc += x;
      }
      ib.offer(acc);
    }
    dims.push_back(ib.size());
    if (ib.size() == 0) break;
  }
  return dims;
}

}  // namespace hopflab

namespace hopflab {

SparseVec word_element(const BraidedHopf& r, const std::vector<int>& word) {
  SparseVec x = r.alg.unit;
  for (int g : word) x = multiply(r.alg, x, SparseVec::unit(r.alg.dim, r.generators.at(g)));
  return x;
}

BraidedHopf a2_nichols(const YDModuleData& v) {
  if (v.dim != 2) throw std::invalid_argument("a2_nichols: need a 2-dimensional module");
  SparseMat c = braiding(v);
  const CycScalar one(1L), minus(-1L);
  const CycScalar q[2][2] = {{minus, one}, {minus, minus}};
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      if (c.col(i * 2 + j) != SparseVec::unit(4, j * 2 + i, q[i][j])) {
        throw std::invalid_argument("a2_nichols: braiding is not of type A2 at q = -1");
      }
    }
  }
  BraidedHopf r = nichols_algebra(v, 6);
  const HopfData& R = r.alg;
  const SparseVec x1 = word_element(r, {0}), x2 = word_element(r, {1});
  const SparseVec x12 = multiply(R, x1, x2) - multiply(R, x2, x1);
  std::vector<SparseVec> basis;
  std::vector<std::string> labels;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int cc = 0; cc < 2; ++cc) {
        SparseVec e = R.unit;
        std::string l;
        if (a) e = multiply(R, e, x2), l += "x2";
        if (b) e = multiply(R, e, x12), l += "x12";
        if (cc) e = multiply(R, e, x1), l += "x1";
        basis.push_back(e);
        labels.push_back(l.empty() ? "1" : l);
      }
    }
  }
  return rebase(r, basis, labels);
}

}  // namespace hopflab
