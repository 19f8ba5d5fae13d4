#include "hopflab/cleft.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "hopflab/bosonize.hpp"
#include "hopflab/nichols.hpp"

namespace hopflab {

namespace {

// Words in y1, y2 as strings over {'1','2'}; elements are word -> coefficient.
using Word = std::string;
using WordVec = std::map<Word, CycScalar>;

void add_to(WordVec& v, const Word& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

// Rewriting for E(lambda): y_i y_i -> l_i, y1y2y1y2 -> (l12 + 2 l1 l2) - y2y1y2y1.
// The second rule comes from expanding y12^2 = l12.
class WordReducer {
 public:
  explicit WordReducer(const std::array<CycScalar, 3>& l)
      : l1_(l[0]), l2_(l[1]), c_(l[2] + CycScalar(2L) * l[0] * l[1]) {}

  const WordVec& reduce(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    WordVec out;
    std::size_t pos;
    if ((pos = w.find("11")) != Word::npos) {
      for (const auto& [u, c] : reduce(w.substr(0, pos) + w.substr(pos + 2))) add_to(out, u, c * l1_);
    } else if ((pos = w.find("22")) != Word::npos) {
      for (const auto& [u, c] : reduce(w.substr(0, pos) + w.substr(pos + 2))) add_to(out, u, c * l2_);
    } else if ((pos = w.find("1212")) != Word::npos) {
      for (const auto& [u, c] : reduce(w.substr(0, pos) + w.substr(pos + 4))) add_to(out, u, c * c_);
      for (const auto& [u, c] : reduce(w.substr(0, pos) + "2121" + w.substr(pos + 4))) add_to(out, u, -c);
    } else {
      out.emplace(w, CycScalar(1L));
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

  WordVec multiply(const WordVec& a, const WordVec& b) {
    WordVec out;
    for (const auto& [u, cu] : a) {
      for (const auto& [v, cv] : b) {
        for (const auto& [w, cw] : reduce(u + v)) add_to(out, w, cu * cv * cw);
      }
    }
    return out;
  }

 private:
  CycScalar l1_, l2_, c_;
  std::map<Word, WordVec> memo_;
};

const std::vector<Word> kNormalWords = {"", "1", "2", "12", "21", "121", "212", "2121"};

// Product in the tensor product algebra E (x) A on 2-tensors.
SparseVec pair_multiply(const HopfData& e, const HopfData& a, const SparseVec& x, const SparseVec& y) {
  const Index da = a.dim;
  SparseVec out(e.dim * da);
  for (const auto& [i, ci] : x) {
    for (const auto& [j, cj] : y) {
      const SparseVec& pe = e.product(i / da, j / da);
      if (pe.is_zero()) continue;
      const SparseVec& pa = a.product(i % da, j % da);
      const CycScalar c = ci * cj;
      for (const auto& [u, cu] : pe) {
        for (const auto& [v, cv] : pa) out.add(u * da + v, c * cu * cv);
      }
    }
  }
  return out;
}

SparseVec apply_to_slot(const SparseMat& m, const SparseVec& x, Index d_left, Index d_right,
                        bool left) {
  SparseVec out(m.rows() * (left ? d_right : d_left));
  for (const auto& [i, c] : x) {
    const Index l = i / d_right, r = i % d_right;
    const SparseVec& img = m.col(left ? l : r);
    for (const auto& [k, ck] : img) {
      out.add(left ? k * d_right + r : l * m.rows() + k, c * ck);
    }
  }
  return out;
}

}  // namespace

CleftData cleft_A2(const std::array<CycScalar, 3>& lambda, const YDModuleData& v) {
  auto r = std::make_shared<BraidedHopf>(a2_nichols(v));
  auto a = std::make_shared<HopfData>(bosonize(*r));
  const HopfData& h = *v.base;
  const Index dh = h.dim, d = a->dim;

  // E(lambda) on the PBW basis y2^a y12^b y1^c
  WordReducer red(lambda);
  auto letter = [](char ch) { return WordVec{{Word(1, ch), CycScalar(1L)}}; };
  const WordVec one{{"", CycScalar(1L)}};
  WordVec y12 = red.multiply(letter('1'), letter('2'));
  for (const auto& [w, c] : red.multiply(letter('2'), letter('1'))) add_to(y12, w, -c);
  std::vector<WordVec> pbw(8);
  for (int i = 0; i < 8; ++i) {
    WordVec e = one;
    if (i & 4) e = red.multiply(e, letter('2'));
    if (i & 2) e = red.multiply(e, y12);
    if (i & 1) e = red.multiply(e, letter('1'));
    pbw[i] = e;
  }
  auto word_index = [](const Word& w) {
    for (Index k = 0; k < 8; ++k) {
      if (kNormalWords[k] == w) return k;
    }
    throw std::logic_error("cleft_A2: word not in normal form: " + w);
  };
  std::vector<SparseVec> cols;
  for (const auto& e : pbw) {
    SparseVec col(8);
    for (const auto& [w, c] : e) col.add(word_index(w), c);
    cols.push_back(col);
  }
  auto to_pbw = invert_matrix(SparseMat::from_columns(8, cols));
  if (!to_pbw) throw std::logic_error("cleft_A2: PBW elements are not a basis");
  auto in_pbw = [&](const WordVec& e) {
    SparseVec col(8);
    for (const auto& [w, c] : e) col.add(word_index(w), c);
    return to_pbw->apply(col);
  };
  std::vector<SparseVec> emult(64);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) emult[i * 8 + j] = in_pbw(red.multiply(pbw[i], pbw[j]));
  }

  // The PBW monomials are eigenvectors of Gamma with the same eigenvalue as in R.
  auto act = [&](Index g, Index k) { return r->yd.act_basis(g, k).get(k); };
  for (Index g = 0; g < dh; ++g) {
    for (Index i = 0; i < 8; ++i) {
      for (Index j = 0; j < 8; ++j) {
        for (const auto& [k, c] : emult[i * 8 + j]) {
          if (act(g, i) * act(g, j) != act(g, k)) {
            throw std::invalid_argument("cleft_A2: relations are not stable under the group");
          }
        }
      }
    }
  }

  CleftData out;
  out.base = a;
  out.nichols = r;
  out.lambda = lambda;
  HopfData& e = out.algebra;
  e = empty_hopf(d);
  e.scalar_order = a->scalar_order;
  for (Index k = 0; k < d; ++k) {
    std::string lab = a->labels[k];
    for (char& ch : lab) {
      if (ch == 'x') ch = 'y';
    }
    e.labels[k] = lab;
  }
  e.unit = SparseVec::unit(d, smash_index(*r, 0, h.unit.entries().begin()->first));
  if (h.unit.nnz() != 1) throw std::invalid_argument("cleft_A2: base must be a group algebra");
  for (Index i = 0; i < 8; ++i) {
    for (Index g = 0; g < dh; ++g) {
      for (Index j = 0; j < 8; ++j) {
        for (Index k = 0; k < dh; ++k) {
          // (e_i # g)(e_j # k) = e_i (g . e_j) # gk
          SparseVec p(d);
          const CycScalar chi = act(g, j);
          for (const auto& [gk, cg] : h.product(g, k)) {
            for (const auto& [m, cm] : emult[i * 8 + j]) p.add(smash_index(*r, m, gk), chi * cg * cm);
          }
          e.mult[smash_index(*r, i, g) * d + smash_index(*r, j, k)] = std::move(p);
        }
      }
    }
  }

  // rho on generators, then multiplicatively on the PBW basis
  auto tensor_basis = [&](Index ei, Index ai) { return SparseVec::unit(d * d, ei * d + ai); };
  const Index unit_h = h.unit.entries().begin()->first;
  auto gen_coaction = [&](Index pos) {
    const Index xi = r->generators[pos];
    const SparseVec& delta = r->yd.coaction[xi];
    if (delta.nnz() != 1) throw std::invalid_argument("cleft_A2: coaction is not diagonal");
    const Index gi = delta.entries().begin()->first / r->yd.dim;
    return tensor_basis(smash_index(*r, xi, unit_h), smash_index(*r, 0, unit_h)) +
           tensor_basis(smash_index(*r, 0, gi), smash_index(*r, xi, unit_h));
  };
  const SparseVec rho1 = gen_coaction(0), rho2 = gen_coaction(1);
  const SparseVec rho12 = pair_multiply(e, *a, rho1, rho2) - pair_multiply(e, *a, rho2, rho1);
  out.coaction.resize(d);
  for (Index i = 0; i < 8; ++i) {
    SparseVec base = tensor_basis(e.unit.entries().begin()->first, a->unit.entries().begin()->first);
    if (i & 4) base = pair_multiply(e, *a, base, rho2);
    if (i & 2) base = pair_multiply(e, *a, base, rho12);
    if (i & 1) base = pair_multiply(e, *a, base, rho1);
    for (Index g = 0; g < dh; ++g) {
      const Index hg = smash_index(*r, 0, g);
      out.coaction[smash_index(*r, i, g)] = pair_multiply(e, *a, base, tensor_basis(hg, hg));
    }
  }

  // The PBW map y2^a y12^b y1^c h <- x2^a x12^b x1^c h is colinear only up
  // to degree two; from degree three on, y_i y_i = l_i leaves lower order
  // terms. Correct degree by degree: gamma(x) = naive(x) + c with
  // rho(c) - c (x) 1 = (gamma (x) id)(Delta(x) - x (x) 1) - (rho - id (x) 1)(naive(x)),
  // taking the solution with no component on 1.
  const Index e_one = e.unit.entries().begin()->first;
  std::vector<SparseVec> defect_cols;
  for (Index k = 0; k < d; ++k) {
    defect_cols.push_back(out.coaction[k] - tensor(SparseVec::unit(d, k), a->unit));
  }
  std::vector<SparseVec> reduced_cols;  // drop the kernel direction 1_E
  std::vector<Index> reduced_idx;
  for (Index k = 0; k < d; ++k) {
    if (k == e_one) continue;
    reduced_cols.push_back(defect_cols[k]);
    reduced_idx.push_back(k);
  }
  const SparseMat defect = SparseMat::from_columns(d * d, reduced_cols);
  out.section = SparseMat(d, d);
  std::vector<Index> order(8);
  for (Index i = 0; i < 8; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return (*r->alg.grading)[x] < (*r->alg.grading)[y]; });
  for (Index ri : order) {
    const Index x = smash_index(*r, ri, unit_h);
    SparseVec rhs = out.coaction[x] - tensor(SparseVec::unit(d, x), a->unit);
    rhs = -rhs;
    SparseVec rest = a->comult[x];
    rest.add(x * d + a->unit.entries().begin()->first, CycScalar(-1L));
    rhs += apply_to_slot(out.section, rest, d, d, true);
    SparseVec gx = SparseVec::unit(d, x);
    if (!rhs.is_zero()) {
      auto sol = solve_linear(defect, rhs);
      if (!sol) throw std::logic_error("cleft_A2: no colinear correction at " + a->labels[x]);
      for (const auto& [k, ck] : *sol) gx.add(reduced_idx[k], ck);
    }
    for (Index g = 0; g < dh; ++g) {
      out.section.col_mut(smash_index(*r, ri, g)) = multiply(e, gx, SparseVec::unit(d, smash_index(*r, 0, g)));
    }
  }
  auto inv = convolution_inverse(out.section, TensorCoalgebra(*a, 1, true), TensorAlgebra(e, 1, false));
  if (!inv) throw std::logic_error("cleft_A2: section is not convolution invertible");
  out.section_inverse = std::move(*inv);
  return out;
}

SparseVec cleft_coact(const CleftData& c, const SparseVec& e) {
  const Index d = c.base->dim;
  SparseVec out(d * d);
  for (const auto& [i, ci] : e) out.axpy(ci, c.coaction[i]);
  return out;
}

SparseMat cleft_projection(const CleftData& c) {
  const BraidedHopf& r = *c.nichols;
  const Index d = c.base->dim;
  const SparseMat iota_pi = bosonization_inclusion(r) * bosonization_projection(r);
  const SparseMat gi = c.section_inverse * iota_pi;
  SparseMat p(d, d);
  for (Index i = 0; i < d; ++i) {
    SparseVec col(d);
    for (const auto& [t, ct] : c.coaction[i]) {
      const SparseVec right = gi.col(t % d);
      if (right.is_zero()) continue;
      col.axpy(ct, multiply(c.algebra, SparseVec::unit(d, t / d), right));
    }
    p.col_mut(i) = std::move(col);
  }
  return p;
}

Report verify_cleft(const CleftData& c) {
  Report rep;
  const HopfData& a = *c.base;
  const HopfData& e = c.algebra;
  const BraidedHopf& r = *c.nichols;
  const Index d = a.dim;

  {
    std::string w;
    bool ok = true;
    for (Index i = 0; i < d && ok; ++i) {
      for (Index j = 0; j < d && ok; ++j) {
        for (Index k = 0; k < d && ok; ++k) {
          const SparseVec ei = SparseVec::unit(d, i), ek = SparseVec::unit(d, k);
          if (multiply(e, multiply(e, ei, SparseVec::unit(d, j)), ek) !=
              multiply(e, ei, multiply(e, SparseVec::unit(d, j), ek))) {
            ok = false;
            w = e.labels[i] + "," + e.labels[j] + "," + e.labels[k];
          }
        }
      }
    }
    for (Index i = 0; i < d && ok; ++i) {
      const SparseVec ei = SparseVec::unit(d, i);
      if (multiply(e, e.unit, ei) != ei || multiply(e, ei, e.unit) != ei) {
        ok = false;
        w = "unit at " + e.labels[i];
      }
    }
    rep.add("algebra", ok, w);
  }
  {
    std::string w;
    bool ok = true;
    for (Index i = 0; i < d && ok; ++i) {
      for (Index j = 0; j < d && ok; ++j) {
        const SparseVec lhs = cleft_coact(c, e.product(i, j));
        if (lhs != pair_multiply(e, a, c.coaction[i], c.coaction[j])) {
          ok = false;
          w = e.labels[i] + "," + e.labels[j];
        }
      }
    }
    rep.add("coaction-algebra-map", ok && cleft_coact(c, e.unit) == tensor(e.unit, a.unit), w);
  }
  {
    std::string w;
    bool coass = true, counital = true;
    for (Index i = 0; i < d; ++i) {
      const SparseVec& x = c.coaction[i];
      // (rho (x) id) rho = (id (x) Delta) rho
      SparseVec lhs(d * d * d);
      for (const auto& [t, ct] : x) {
        for (const auto& [u, cu] : c.coaction[t / d]) lhs.add(u * d + t % d, ct * cu);
      }
      if (lhs != comultiply_at(a, x, 2, 1)) {
        coass = false;
        if (w.empty()) w = e.labels[i];
      }
      if (counit_at(a, x, 2, 1) != SparseVec::unit(d, i)) counital = false;
    }
    rep.add("coaction-coassociative", coass, w);
    rep.add("coaction-counital", counital);
  }
  rep.add("section-unital", c.section.apply(a.unit) == e.unit);
  {
    bool ok = true;
    std::string w;
    for (Index i = 0; i < d && ok; ++i) {
      const SparseVec lhs = cleft_coact(c, c.section.col(i));
      const SparseVec rhs = apply_to_slot(c.section, a.comult[i], d, d, true);
      if (lhs != rhs) {
        ok = false;
        w = a.labels[i];
      }
    }
    rep.add("section-colinear", ok, w);
  }
  {
    const TensorCoalgebra coal(a, 1, true);
    const TensorAlgebra alg(e, 1, false);
    const SparseMat u = convolution_unit(coal, alg);
    rep.add("section-invertible",
            convolution_product(c.section, c.section_inverse, coal, alg) == u &&
                convolution_product(c.section_inverse, c.section, coal, alg) == u);
  }
  {
    // rho(e) - e (x) 1 over the basis; its kernel is E^{co A}
    std::vector<SparseVec> cols;
    for (Index i = 0; i < d; ++i) {
      cols.push_back(c.coaction[i] - tensor(SparseVec::unit(d, i), a.unit));
    }
    const Index kernel = d - rank(SparseMat::from_columns(d * d, cols));
    rep.add("coinvariants", kernel == 1, "dim " + std::to_string(kernel));
  }
  const SparseMat p = cleft_projection(c);
  const SparseMat vartheta = bosonization_vartheta(r, a);
  rep.add("p-gamma", p * c.section == c.section * vartheta);
  {
    // varrho(x) = p(x0) (x) x1 on the image of p
    const SparseMat emb = bosonization_vartheta(r, a);
    bool lands = true, coass = true, colinear = true;
    std::string w;
    auto varrho = [&](const SparseVec& x) { return apply_to_slot(p, cleft_coact(c, x), d, d, true); };
    for (Index i = 0; i < d; ++i) {
      const SparseVec pi = p.col(i);
      if (pi.is_zero()) continue;
      const SparseVec v = varrho(pi);
      if (apply_to_slot(emb, v, d, d, false) != v) {
        lands = false;
        if (w.empty()) w = e.labels[i];
      }
      SparseVec lhs(d * d * d);
      for (const auto& [t, ct] : v) {
        for (const auto& [u, cu] : varrho(SparseVec::unit(d, t / d))) lhs.add(u * d + t % d, ct * cu);
      }
      // (id (x) Delta_R) on R # 1 is (id (x) vartheta (x) id)(id (x) Delta)
      SparseVec rhs = comultiply_at(a, v, 2, 1);
      SparseVec rr(d * d * d);
      for (const auto& [t, ct] : rhs) {
        const Index z = t % d, mid = (t / d) % d, l = t / (d * d);
        for (const auto& [m, cm] : vartheta.col(mid)) rr.add((l * d + m) * d + z, ct * cm);
      }
      if (lhs != rr) coass = false;
    }
    for (Index k = 0; k < r.alg.dim; ++k) {
      const Index rk = smash_index(r, k, a.unit.entries().begin()->first % r.yd.base->dim);
      const SparseVec gr = c.section.col(rk);
      // gamma vartheta (x^(1)) (x) x^(2) with Delta_R(x) = (vartheta (x) id) Delta(x # 1)
      SparseVec rhs = apply_to_slot(c.section * vartheta, a.comult[rk], d, d, true);
      if (varrho(gr) != rhs) colinear = false;
    }
    rep.add("varrho-lands-in-R", lands, w);
    rep.add("varrho-coassociative", coass);
    rep.add("section-R-colinear", colinear);
  }
  return rep;
}

CocycleData cocycle_from_section(const CleftData& c) {
  const HopfData& a = *c.base;
  const HopfData& e = c.algebra;
  const Index d = a.dim;
  SparseMat f(d, d * d), g(d, d * d);
  for (Index x = 0; x < d; ++x) {
    for (Index y = 0; y < d; ++y) {
      f.col_mut(x * d + y) = multiply(e, c.section.col(x), c.section.col(y));
      g.col_mut(x * d + y) = c.section_inverse.apply(a.product(x, y));
    }
  }
  const SparseMat s = convolution_product(f, g, TensorCoalgebra(a, 2, true), TensorAlgebra(e, 1, false));
  const Index one = e.unit.entries().begin()->first;
  SparseVec values(d * d);
  for (Index i = 0; i < d * d; ++i) {
    const SparseVec& col = s.col(i);
    if (col.is_zero()) continue;
    if (col.nnz() != 1 || col.entries().begin()->first != one) {
      throw std::logic_error("cocycle_from_section: value is not a scalar");
    }
    values.set(i, col.entries().begin()->second);
  }
  return make_cocycle(c.base, std::move(values));
}

}  // namespace hopflab
