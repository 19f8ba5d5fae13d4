#include "hopflab/twist.hpp"

#include <functional>
#include <stdexcept>

namespace hopflab {

namespace {

using Mult = std::function<SparseVec(const SparseVec&, const SparseVec&)>;
using BasisProduct = std::function<SparseVec(Index, Index)>;

std::string pair_label(const HopfData& h, Index idx) {
  return h.labels[idx / h.dim] + "(x)" + h.labels[idx % h.dim];
}

std::string tensor_witness(const SparseVec& lhs, const SparseVec& rhs) {
  SparseVec d = lhs - rhs;
  std::string s = "difference has " + std::to_string(d.nnz()) + " terms";
  if (!d.is_zero()) s += ", first at index " + std::to_string(d.begin()->first);
  return s;
}

// Invertibility, twist equation and normalization shared by plain and
// braided twists. `delta_at(x, pos)` applies the coproduct at slot pos of a
// 2-tensor; `eps_at(x, pos)` the counit.
void twist_checks(Report& rep, const SparseVec& j, const SparseVec& jinv, const SparseVec& unit,
                  const Mult& mult2, const Mult& mult3,
                  const std::function<SparseVec(const SparseVec&, int)>& delta_at,
                  const std::function<SparseVec(const SparseVec&, int)>& eps_at) {
  const SparseVec one2 = tensor(unit, unit);
  {
    SparseVec a = mult2(j, jinv), b = mult2(jinv, j);
    bool ok = a == one2 && b == one2;
    rep.add("invertible", ok, ok ? "" : (a != one2 ? "J J^-1 != 1(x)1" : "J^-1 J != 1(x)1"));
  }
  {
    SparseVec lhs = mult3(tensor(unit, j), delta_at(j, 1));
    SparseVec rhs = mult3(tensor(j, unit), delta_at(j, 0));
    bool ok = lhs == rhs;
    rep.add("twist-equation", ok, ok ? "" : tensor_witness(lhs, rhs));
  }
  {
    SparseVec l = eps_at(j, 0), r = eps_at(j, 1);
    bool ok = l == unit && r == unit;
    rep.add("counit-normalization", ok,
            ok ? "" : (l != unit ? "(eps(x)id)(J) = " + l.to_string() : "(id(x)eps)(J) = " + r.to_string()));
  }
}

// M(x (x) y) = sum sigma(c') m(c'') over Delta_C(x (x) y), for all pairs.
std::vector<SparseVec> cocycle_products(const SparseVec& sigma, Index n, const Coalgebra& c,
                                        const BasisProduct& prod) {
  std::vector<SparseVec> out(n * n, SparseVec(n));
  const Index n2 = n * n;
  for (Index p = 0; p < n2; ++p) {
    SparseVec acc(n);
    for (const auto& [idx, cf] : c.comult(p)) {
      const CycScalar s = sigma.get(idx / n2);
      if (s.is_zero()) continue;
      const Index q = idx % n2;
      acc.axpy(cf * s, prod(q / n, q % n));
    }
    out[p] = std::move(acc);
  }
  return out;
}

void cocycle_checks(Report& rep, const SparseVec& sigma, const SparseVec& inv, Index n,
                    const Coalgebra& c, const BasisProduct& prod, const SparseVec& unit,
                    const std::vector<CycScalar>& counit) {
  {
    FieldAlgebra k;
    SparseMat f(1, n * n), g(1, n * n);
    for (const auto& [i, v] : sigma) f.set(0, i, v);
    for (const auto& [i, v] : inv) g.set(0, i, v);
    SparseMat e = convolution_unit(c, k);
    bool a = convolution_product(f, g, c, k) == e;
    bool b = convolution_product(g, f, c, k) == e;
    rep.add("invertible", a && b, a && b ? "" : (a ? "sigma^-1 * sigma != eps" : "sigma * sigma^-1 != eps"));
  }
  {
    std::string w;
    for (Index x = 0; x < n && w.empty(); ++x) {
      CycScalar l = evaluate_form(sigma, n, SparseVec::unit(n, x), unit);
      CycScalar r = evaluate_form(sigma, n, unit, SparseVec::unit(n, x));
      if (l != counit[x] || r != counit[x]) w = "at basis element " + std::to_string(x);
    }
    rep.add("normalization", w.empty(), w);
  }
  {
    std::vector<SparseVec> m = cocycle_products(sigma, n, c, prod);
    // rows[t] = sigma(t, -) over the second argument
    std::vector<SparseVec> rows(n, SparseVec(n));
    for (const auto& [i, v] : sigma) rows[i / n].set(i % n, v);
    std::string w;
    for (Index x = 0; x < n && w.empty(); ++x) {
      for (Index y = 0; y < n && w.empty(); ++y) {
        SparseVec lhs(n);
        for (const auto& [t, v] : m[x * n + y]) lhs.axpy(v, rows[t]);
        for (Index z = 0; z < n && w.empty(); ++z) {
          CycScalar rhs;
          for (const auto& [t, v] : m[y * n + z]) rhs += v * rows[x].get(t);
          if (lhs.get(z) != rhs) {
            w = "basis triple (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
          }
        }
      }
    }
    rep.add("cocycle-identity", w.empty(), w);
  }
}

SparseVec form_inverse(const SparseVec& sigma, const Coalgebra& c) {
  FieldAlgebra k;
  SparseMat f(1, c.dim());
  for (const auto& [i, v] : sigma) f.set(0, i, v);
  auto g = convolution_inverse(f, c, k);
  if (!g) throw std::invalid_argument("cocycle is not convolution invertible");
  SparseVec out(c.dim());
  for (Index i = 0; i < c.dim(); ++i) {
    const CycScalar v = g->get(0, i);
    if (!v.is_zero()) out.set(i, v);
  }
  return out;
}

}  // namespace

CycScalar evaluate_form(const SparseVec& form, Index dim, const SparseVec& a, const SparseVec& b) {
  CycScalar out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      const CycScalar v = form.get(i * dim + j);
      if (!v.is_zero()) out += x * y * v;
    }
  }
  return out;
}

// --- plain twists ---

TwistData make_twist(HopfPtr h, SparseVec j) {
  TensorAlgebra alg(*h, 2, true);
  auto inv = algebra_invert(j, alg);
  if (!inv) throw std::invalid_argument("twist element is not invertible");
  return TwistData{std::move(h), std::move(j), std::move(*inv)};
}

TwistData make_twist(HopfPtr h, SparseVec j, SparseVec inverse) {
  const SparseVec one = one_tensor(*h, 2);
  if (tensor_multiply(*h, 2, j, inverse) != one || tensor_multiply(*h, 2, inverse, j) != one) {
    throw std::invalid_argument("supplied twist inverse is wrong");
  }
  return TwistData{std::move(h), std::move(j), std::move(inverse)};
}

TwistData trivial_twist(HopfPtr h) {
  SparseVec one = one_tensor(*h, 2);
  return TwistData{std::move(h), one, one};
}

Report verify_twist(const TwistData& t) {
  const HopfData& h = *t.base;
  Report rep;
  twist_checks(
      rep, t.element, t.inverse, h.unit,
      [&](const SparseVec& a, const SparseVec& b) { return tensor_multiply(h, 2, a, b); },
      [&](const SparseVec& a, const SparseVec& b) { return tensor_multiply(h, 3, a, b); },
      [&](const SparseVec& x, int pos) { return comultiply_at(h, x, 2, pos); },
      [&](const SparseVec& x, int pos) { return counit_at(h, x, 2, pos); });
  return rep;
}

HopfData apply_twist(const TwistData& t) {
  const HopfData& h = *t.base;
  const Index n = h.dim;
  HopfData out = h;
  out.grading.reset();
  for (Index x = 0; x < n; ++x) {
    out.comult[x] = tensor_multiply(h, 2, tensor_multiply(h, 2, t.element, h.comult[x]), t.inverse);
  }
  // S^J = U S U^-1, U = J^1 S(J^2), U^-1 = S(Jinv^1) Jinv^2
  const SparseMat& s = antipode_of(h);
  SparseVec u(n), uinv(n);
  for (const auto& [idx, c] : t.element) u.axpy(c, multiply(h, SparseVec::unit(n, idx / n), s.col(idx % n)));
  for (const auto& [idx, c] : t.inverse) uinv.axpy(c, multiply(h, s.col(idx / n), SparseVec::unit(n, idx % n)));
  if (multiply(h, u, uinv) != h.unit) throw std::logic_error("apply_twist: U U^-1 != 1");
  SparseMat st(n, n);
  for (Index x = 0; x < n; ++x) st.col_mut(x) = multiply(h, multiply(h, u, s.col(x)), uinv);
  out.antipode = st;
  return out;
}

TwistData inverse_twist(const TwistData& t, HopfPtr twisted) {
  return make_twist(std::move(twisted), t.inverse, t.element);
}

// --- plain cocycles ---

CocycleData make_cocycle(HopfPtr h, SparseVec values) {
  values.set_dim(h->dim * h->dim);
  SparseVec inv = form_inverse(values, TensorCoalgebra(*h, 2, true));
  return CocycleData{std::move(h), std::move(values), std::move(inv)};
}

CocycleData make_cocycle(HopfPtr h, SparseVec values, SparseVec inverse) {
  CocycleData s{std::move(h), std::move(values), std::move(inverse)};
  s.values.set_dim(s.base->dim * s.base->dim);
  s.inverse.set_dim(s.base->dim * s.base->dim);
  return s;
}

CocycleData trivial_cocycle(HopfPtr h) {
  const Index n = h->dim;
  SparseVec e(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const CycScalar v = h->counit[x] * h->counit[y];
      if (!v.is_zero()) e.set(x * n + y, v);
    }
  }
  return CocycleData{std::move(h), e, e};
}

Report verify_cocycle(const CocycleData& s) {
  const HopfData& h = *s.base;
  Report rep;
  TensorCoalgebra c(h, 2, false);
  cocycle_checks(rep, s.values, s.inverse, h.dim, c, [&](Index a, Index b) { return h.product(a, b); },
                 h.unit, h.counit);
  return rep;
}

HopfData apply_cocycle(const CocycleData& s) {
  const HopfData& h = *s.base;
  const Index n = h.dim;
  TensorCoalgebra c(h, 2, false);
  TensorAlgebra a(h, 1, false);
  SparseMat sig(n, n * n), m(n, n * n), siginv(n, n * n);
  for (const auto& [i, v] : s.values) sig.col_mut(i) = v * h.unit;
  for (const auto& [i, v] : s.inverse) siginv.col_mut(i) = v * h.unit;
  for (Index i = 0; i < n * n; ++i) m.col_mut(i) = h.mult[i];
  SparseMat ms = convolution_product(convolution_product(sig, m, c, a), siginv, c, a);
  HopfData out = h;
  out.grading.reset();
  out.antipode.reset();
  for (Index i = 0; i < n * n; ++i) out.mult[i] = ms.col(i);
  // antipode: convolution inverse of id over the unchanged (possibly graded) coalgebra
  TensorCoalgebra c1(h, 1, true);
  TensorAlgebra a1(out, 1, false);
  auto st = convolution_inverse(SparseMat::identity(n), c1, a1);
  if (!st) throw std::logic_error("apply_cocycle: no antipode");
  out.antipode = *st;
  return out;
}

CocycleData inverse_cocycle(const CocycleData& s, HopfPtr deformed) {
  return make_cocycle(std::move(deformed), s.inverse, s.values);
}

TwistData twist_from_cocycle_dual(const CocycleData& s, HopfPtr dual_base) {
  if (dual_base->dim != s.base->dim) throw std::invalid_argument("dual base dimension mismatch");
  SparseVec j = s.values, ji = s.inverse;
  return make_twist(std::move(dual_base), std::move(j), std::move(ji));
}

CocycleData cocycle_from_twist_dual(const TwistData& t, HopfPtr dual_base) {
  if (dual_base->dim != t.base->dim) throw std::invalid_argument("dual base dimension mismatch");
  return make_cocycle(std::move(dual_base), t.element, t.inverse);
}

// --- braided ---

BraidedTwistData make_braided_twist(BraidedPtr r, SparseVec j) {
  BraidedTensorAlgebra alg(*r, 2);
  auto inv = algebra_invert(j, alg);
  if (!inv) throw std::invalid_argument("braided twist element is not invertible");
  return BraidedTwistData{std::move(r), std::move(j), std::move(*inv)};
}

BraidedCocycleData make_braided_cocycle(BraidedPtr r, SparseVec values) {
  values.set_dim(r->alg.dim * r->alg.dim);
  SparseVec inv = form_inverse(values, BraidedSquareCoalgebra(*r));
  return BraidedCocycleData{std::move(r), std::move(values), std::move(inv)};
}

Report verify_braided_twist(const BraidedTwistData& t) {
  const BraidedHopf& r = *t.base;
  const HopfData& R = r.alg;
  const HopfData& H = *r.yd.base;
  const Index n = R.dim, n2 = n * n;
  Report rep;
  {
    SparseVec co(H.dim * n2);
    for (const auto& [idx, c] : t.element) co.axpy(c, tensor_coaction(r.yd, idx, 2));
    SparseVec expect = tensor(H.unit, t.element);
    bool ok = co == expect;
    rep.add("coinvariant", ok, ok ? "" : tensor_witness(co, expect));
  }
  {
    std::string w;
    for (Index h = 0; h < H.dim && w.empty(); ++h) {
      if (tensor_action(r.yd, h, t.element, 2) != H.counit[h] * t.element) w = "acting by " + H.labels[h];
    }
    rep.add("invariant", w.empty(), w);
  }
  twist_checks(
      rep, t.element, t.inverse, R.unit,
      [&](const SparseVec& a, const SparseVec& b) { return braided_tensor_multiply(r, 2, a, b); },
      [&](const SparseVec& a, const SparseVec& b) { return braided_tensor_multiply(r, 3, a, b); },
      [&](const SparseVec& x, int pos) { return comultiply_at(R, x, 2, pos); },
      [&](const SparseVec& x, int pos) { return counit_at(R, x, 2, pos); });
  return rep;
}

Report verify_braided_cocycle(const BraidedCocycleData& s) {
  const BraidedHopf& r = *s.base;
  const HopfData& R = r.alg;
  const HopfData& H = *r.yd.base;
  const Index n = R.dim;
  Report rep;
  {
    // r(-1) s(-1) sigma(r(0), s(0)) = sigma(r, s) 1
    std::string w;
    for (Index p = 0; p < n * n && w.empty(); ++p) {
      SparseVec lhs(H.dim);
      for (const auto& [idx, c] : tensor_coaction(r.yd, p, 2)) {
        const CycScalar v = s.values.get(idx % (n * n));
        if (!v.is_zero()) lhs.add(idx / (n * n), c * v);
      }
      if (lhs != s.values.get(p) * H.unit) w = "at " + pair_label(R, p);
    }
    rep.add("colinear", w.empty(), w);
  }
  {
    std::string w;
    for (Index h = 0; h < H.dim && w.empty(); ++h) {
      for (Index p = 0; p < n * n && w.empty(); ++p) {
        CycScalar lhs;
        for (const auto& [idx, c] : tensor_action(r.yd, h, SparseVec::unit(n * n, p), 2)) {
          lhs += c * s.values.get(idx);
        }
        if (lhs != H.counit[h] * s.values.get(p)) w = "acting by " + H.labels[h] + " at " + pair_label(R, p);
      }
    }
    rep.add("invariant", w.empty(), w);
  }
  BraidedSquareCoalgebra c(r);
  cocycle_checks(rep, s.values, s.inverse, n, c, [&](Index a, Index b) { return R.product(a, b); }, R.unit,
                 R.counit);
  return rep;
}

BraidedHopf apply_braided_twist(const BraidedTwistData& t) {
  const BraidedHopf& r = *t.base;
  BraidedHopf out = r;
  out.alg.grading.reset();
  out.alg.antipode.reset();
  for (Index x = 0; x < r.alg.dim; ++x) {
    out.alg.comult[x] = braided_tensor_multiply(
        r, 2, braided_tensor_multiply(r, 2, t.element, r.alg.comult[x]), t.inverse);
  }
  return out;
}

SparseVec smash_tensor(const BraidedHopf& r, const SparseVec& j) {
  const HopfData& H = *r.yd.base;
  const Index n = r.alg.dim, nh = H.dim, na = n * nh;
  SparseVec out(na * na);
  for (const auto& [idx, c] : j) {
    const Index a = idx / n, b = idx % n;
    for (const auto& [ci, cc] : r.yd.coaction[b]) {
      const Index h = ci / n, b0 = ci % n;
      for (const auto& [u, uc] : H.unit) out.add_product((a * nh + h) * na + b0 * nh + u, c * cc, uc);
    }
  }
  return out;
}

SparseVec embed_base_tensor(const BraidedHopf& r, const SparseVec& x) {
  const HopfData& H = *r.yd.base;
  const Index nh = H.dim, na = r.alg.dim * nh;
  SparseVec out(na * na);
  for (const auto& [idx, c] : x) {
    const Index h = idx / nh, k = idx % nh;
    for (const auto& [u, uc] : r.alg.unit) {
      for (const auto& [v, vc] : r.alg.unit) out.add_product((u * nh + h) * na + v * nh + k, c, uc * vc);
    }
  }
  return out;
}

TwistData bosonize_twist(const BraidedTwistData& t, HopfPtr a, const std::optional<TwistData>& f) {
  const BraidedHopf& r = *t.base;
  SparseVec j = smash_tensor(r, t.element), ji = smash_tensor(r, t.inverse);
  if (f) {
    j = tensor_multiply(*a, 2, embed_base_tensor(r, f->element), j);
    ji = tensor_multiply(*a, 2, ji, embed_base_tensor(r, f->inverse));
  }
  return make_twist(std::move(a), std::move(j), std::move(ji));
}

CocycleData bosonize_cocycle(const BraidedCocycleData& s, HopfPtr a) {
  const BraidedHopf& r = *s.base;
  const HopfData& H = *r.yd.base;
  const Index n = r.alg.dim, nh = H.dim, na = n * nh;
  SparseVec v(na * na);
  for (Index x = 0; x < n; ++x) {
    for (Index g = 0; g < nh; ++g) {
      for (Index y = 0; y < n; ++y) {
        const SparseVec& gy = r.yd.act_basis(g, y);
        CycScalar val = evaluate_form(s.values, n, SparseVec::unit(n, x), gy);
        if (val.is_zero()) continue;
        for (Index h = 0; h < nh; ++h) {
          if (!H.counit[h].is_zero()) v.set((x * nh + g) * na + y * nh + h, val * H.counit[h]);
        }
      }
    }
  }
  return make_cocycle(std::move(a), std::move(v));
}

SparseVec restrict_cocycle(const CocycleData& s, const BraidedHopf& r) {
  const HopfData& H = *r.yd.base;
  const Index n = r.alg.dim, nh = H.dim, na = n * nh;
  // s on 1 # H (x) 1 # H must be eps (x) eps
  auto embed_h = [&](Index h) {
    SparseVec out(na);
    for (const auto& [u, c] : r.alg.unit) out.add(u * nh + h, c);
    return out;
  };
  for (Index g = 0; g < nh; ++g) {
    for (Index h = 0; h < nh; ++h) {
      if (evaluate_form(s.values, na, embed_h(g), embed_h(h)) != H.counit[g] * H.counit[h]) {
        throw std::invalid_argument("restrict_cocycle: cocycle is not trivial on H at " + H.labels[g] + ", " +
                                    H.labels[h]);
      }
    }
  }
  auto embed_r = [&](Index x) {
    SparseVec out(na);
    for (const auto& [u, c] : H.unit) out.add(x * nh + u, c);
    return out;
  };
  SparseVec out(n * n);
  for (Index x = 0; x < n; ++x) {
    const SparseVec ex = embed_r(x);
    for (Index y = 0; y < n; ++y) {
      const CycScalar v = evaluate_form(s.values, na, ex, embed_r(y));
      if (!v.is_zero()) out.set(x * n + y, v);
    }
  }
  return out;
}

bool is_base_balanced(const CocycleData& s, const BraidedHopf& r, std::string* witness) {
  const HopfData& H = *r.yd.base;
  const Index n = r.alg.dim, nh = H.dim, na = n * nh;
  auto embed_r = [&](const SparseVec& x) {
    SparseVec out(na);
    for (const auto& [i, c] : x) {
      for (const auto& [u, uc] : H.unit) out.add_product(i * nh + u, c, uc);
    }
    return out;
  };
  for (Index x = 0; x < n; ++x) {
    for (Index t = 0; t < nh; ++t) {
      for (Index y = 0; y < n; ++y) {
        const SparseVec ey = embed_r(SparseVec::unit(n, y));
        const CycScalar lhs = evaluate_form(s.values, na, SparseVec::unit(na, x * nh + t), ey);
        const CycScalar rhs = evaluate_form(s.values, na, embed_r(SparseVec::unit(n, x)),
                                            embed_r(r.yd.act_basis(t, y)));
        if (lhs != rhs) {
          if (witness) *witness = r.alg.labels[x] + "#" + H.labels[t] + ", " + r.alg.labels[y];
          return false;
        }
      }
    }
  }
  return true;
}

TwistFromSigma twist_from_sigma(const CocycleData& s, const BraidedHopf& r, BraidedPtr dual_r,
                                HopfPtr dual_a) {
  TwistFromSigma out;
  out.element = restrict_cocycle(s, r);
  BraidedTwistData bt{dual_r, out.element, SparseVec()};
  {
    BraidedTensorAlgebra alg(*dual_r, 2);
    auto inv = algebra_invert(out.element, alg);
    if (inv) bt.inverse = *inv;
  }
  Report br = verify_braided_twist(bt);
  for (const auto& c : br.checks()) {
    if (c.name == "invertible" && bt.inverse.dim() == 0) {
      out.report.add("invertible", false, "no inverse in the braided tensor square");
    } else {
      out.report.add(c.name == "invariant" ? "trivial-action" : c.name, c.pass, c.witness);
    }
  }
  out.twist = twist_from_cocycle_dual(s, dual_a);
  {
    SparseVec b = smash_tensor(*dual_r, out.element);
    bool ok = b == out.twist.element;
    out.report.add("bosonized", ok, ok ? "" : tensor_witness(b, out.twist.element));
  }
  return out;
}

}  // namespace hopflab
