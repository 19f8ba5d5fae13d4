#include "hopflab/algebras.hpp"

#include <stdexcept>

namespace hopflab {

HopfData group_algebra(const GroupTable& g) {
  const Index n = g.order;
  HopfData h = empty_hopf(n);
  h.labels = g.labels;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) h.mult[a * n + b].set(g.mul(a, b), CycScalar(1L));
    h.comult[a].set(a * n + a, CycScalar(1L));
    h.counit[a] = CycScalar(1L);
  }
  h.unit.set(g.identity, CycScalar(1L));
  h.antipode = SparseMat(n, n);
  for (Index a = 0; a < n; ++a) h.antipode->set(g.inverse(a), a, CycScalar(1L));
  h.grading = std::vector<int>(n, 0);
  std::vector<Index> all(n);
  for (Index a = 0; a < n; ++a) all[a] = a;
  h.generators.push_back({all, GeneratorKind::GroupLikeFamily});
  return h;
}

HopfData function_algebra(const GroupTable& g) {
  const Index n = g.order;
  HopfData h = empty_hopf(n);
  for (Index a = 0; a < n; ++a) h.labels[a] = "d[" + g.labels[a] + "]";
  for (Index a = 0; a < n; ++a) {
    h.mult[a * n + a].set(a, CycScalar(1L));
    h.unit.set(a, CycScalar(1L));
    for (Index b = 0; b < n; ++b) h.comult[g.mul(a, b)].set(a * n + b, CycScalar(1L));
  }
  h.counit[g.identity] = CycScalar(1L);
  h.antipode = SparseMat(n, n);
  for (Index a = 0; a < n; ++a) h.antipode->set(g.inverse(a), a, CycScalar(1L));
  h.grading = std::vector<int>(n, 0);
  std::vector<Index> all(n);
  for (Index a = 0; a < n; ++a) all[a] = a;
  h.generators.push_back({all, GeneratorKind::IdempotentFamily});
  return h;
}

HopfData matched_pair_extension(const GroupTable& g, const GroupTable& f, const RightAction& act) {
  const int ng = g.order, nf = f.order;
  // Validate: action by automorphisms.
  for (int e = 0; e < ng; ++e) {
    if (act(e, f.identity) != e) {
      throw std::invalid_argument("matched pair: identity of F acts nontrivially on " + g.labels[e]);
    }
    for (int a = 0; a < nf; ++a) {
      for (int b = 0; b < nf; ++b) {
        if (act(act(e, a), b) != act(e, f.mul(a, b))) {
          throw std::invalid_argument("matched pair: not a right action at (" + g.labels[e] + ", " +
                                      f.labels[a] + ", " + f.labels[b] + ")");
        }
      }
      for (int e2 = 0; e2 < ng; ++e2) {
        if (act(g.mul(e, e2), a) != g.mul(act(e, a), act(e2, a))) {
          throw std::invalid_argument("matched pair: " + f.labels[a] +
                                      " is not an automorphism at (" + g.labels[e] + ", " +
                                      g.labels[e2] + ")");
        }
      }
    }
  }
  const Index n = static_cast<Index>(ng) * nf;
  HopfData h = empty_hopf(n);
  auto idx = [nf](int e, int a) { return static_cast<Index>(e) * nf + a; };
  for (int e = 0; e < ng; ++e) {
    for (int a = 0; a < nf; ++a) {
      h.labels[idx(e, a)] = "d[" + g.labels[e] + "]#" + f.labels[a];
      h.counit[idx(e, a)] = e == g.identity ? CycScalar(1L) : CycScalar();
      for (int x = 0; x < ng; ++x) {
        int y = g.mul(g.inverse(x), e);  // x y = e
        h.comult[idx(e, a)].set(idx(x, a) * n + idx(y, a), CycScalar(1L));
      }
      // (d_e # a)(d_t # b) = [e = t <| a^{-1}] d_e # ab
      for (int b = 0; b < nf; ++b) {
        int t = act(e, a);
        h.mult[idx(e, a) * n + idx(t, b)].set(idx(e, f.mul(a, b)), CycScalar(1L));
      }
    }
    h.unit.set(idx(e, f.identity), CycScalar(1L));
  }
  h.grading = std::vector<int>(n, 0);
  h.antipode = compute_antipode(h);
  std::vector<Index> fam;
  for (int e = 0; e < ng; ++e) fam.push_back(idx(e, f.identity));
  h.generators.push_back({fam, GeneratorKind::IdempotentFamily});
  return h;
}

RightAction conjugation_action(const GroupTable& g, const std::vector<int>& f_in_g) {
  return [g, f_in_g](int eta, int f) { return g.conj_by(eta, f_in_g[f]); };
}

}  // namespace hopflab
