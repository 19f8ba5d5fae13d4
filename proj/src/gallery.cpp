#include "hopflab/gallery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hopflab/nichols.hpp"

namespace hopflab {

QuantumLineSetup quantum_line_setup(int N, int n) {
  if (N < 2 || n % N != 0) throw std::invalid_argument("quantum line: need N >= 2 dividing n");
  QuantumLineSetup s;
  s.N = N;
  s.n = n;
  GroupTable c = cyclic_group(n);
  s.group = std::make_shared<HopfData>(group_algebra(c));
  s.q = CycScalar::root_of_unity(n, n / N);
  YDModuleData v = realization_module(make_realization(c, {1}, {cyclic_character(n, s.q)}), s.group);
  v.labels = {"x"};
  BraidedHopf r = nichols_algebra(v, N + 1);
  for (int k = 0; k < N; ++k) {
    r.alg.labels[k] = k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k));
  }
  r.yd.labels = r.alg.labels;
  s.nichols = std::make_shared<BraidedHopf>(std::move(r));
  s.smash = std::make_shared<HopfData>(bosonize(*s.nichols));
  s.dual = std::make_shared<HopfData>(dual_hopf(*s.smash));
  return s;
}

TwistData twist_J_xi(const QuantumLineSetup& s, const CycScalar& xi) {
  const Index n = s.n, d = s.smash->dim;
  SparseVec j = one_tensor(*s.smash, 2);
  if (!xi.is_zero()) {
    for (int k = 1; k < s.N; ++k) {
      const CycScalar c = xi * (q_factorial(s.N - k, s.q) * q_factorial(k, s.q)).inverse();
      const Index left = k * n + (s.N - k) % n, right = (s.N - k) * n;
      j.add(left * d + right, c);
    }
  }
  return make_twist(s.smash, std::move(j));
}

BraidedTwistData braided_J_xi(const QuantumLineSetup& s, const CycScalar& xi) {
  const Index d = s.nichols->alg.dim;
  SparseVec j = SparseVec::unit(d * d, 0);
  if (!xi.is_zero()) {
    for (int k = 1; k < s.N; ++k) {
      j.add(k * d + (s.N - k), xi * (q_factorial(s.N - k, s.q) * q_factorial(k, s.q)).inverse());
    }
  }
  return make_braided_twist(s.nichols, std::move(j));
}

SparseVec dual_monomial(const QuantumLineSetup& s, int i, int k) {
  const Index n = s.n, d = s.dual->dim;
  SparseVec y(d), h(d);
  const CycScalar w = CycScalar::root_of_unity(n, 1);
  for (Index t = 0; t < n; ++t) {
    y.set(1 * n + t, CycScalar(1L));
    h.set(t, w.pow(t));
  }
  SparseVec out = s.dual->unit;
  for (int a = 0; a < i; ++a) out = multiply(*s.dual, out, y);
  for (int b = 0; b < k; ++b) out = multiply(*s.dual, out, h);
  return out;
}

CocycleData dual_cocycle_sigma_xi(const QuantumLineSetup& s, const CycScalar& xi) {
  const Index n = s.n, d = s.dual->dim;
  const CycScalar w = CycScalar::root_of_unity(n, 1);
  // change of basis from y^i h^k (column i * n + k) to the dual basis
  std::vector<SparseVec> cols;
  for (int i = 0; i < s.N; ++i) {
    for (int k = 0; k < s.n; ++k) cols.push_back(dual_monomial(s, i, k));
  }
  auto pinv = invert_matrix(SparseMat::from_columns(d, cols));
  if (!pinv) throw std::logic_error("y^i h^k do not form a basis of the dual");
  // values on monomial pairs
  auto value = [&](Index a, Index b) {
    const int i = static_cast<int>(a / n), k = static_cast<int>(a % n);
    const int j = static_cast<int>(b / n);
    CycScalar v;
    if (i + j == 0) v += CycScalar(1L);
    if (i + j == s.N) v += xi * w.pow(static_cast<long>(j) * k);
    return v;
  };
  // S(e_u, e_v) = sum_{a,b} Pinv[a][u] Pinv[b][v] sigma(a, b)
  const SparseMat& pt = *pinv;  // column u: e_u in monomial coordinates
  SparseVec vals(d * d);
  for (Index u = 0; u < d; ++u) {
    for (Index v = 0; v < d; ++v) {
      CycScalar acc;
      for (const auto& [a, pa] : pt.col(u)) {
        for (const auto& [b, pb] : pt.col(v)) {
          const CycScalar x = value(a, b);
          if (!x.is_zero()) acc += pa * pb * x;
        }
      }
      if (!acc.is_zero()) vals.set(u * d + v, acc);
    }
  }
  return make_cocycle(s.dual, std::move(vals));
}

CocycleData cocycle_sigma_xi(const QuantumLineSetup& s, const CycScalar& xi) {
  const Index n = s.n, d = s.smash->dim;
  SparseVec vals(d * d);
  for (Index a = 0; a < d; ++a) {
    const Index i = a / n, k = a % n;
    for (Index b = 0; b < d; ++b) {
      const Index j = b / n;
      CycScalar v;
      if (i + j == 0) v += CycScalar(1L);
      if (i + j == static_cast<Index>(s.N)) v += xi * s.q.pow(static_cast<long>(j * k));
      if (!v.is_zero()) vals.set(a * d + b, v);
    }
  }
  return make_cocycle(s.smash, std::move(vals));
}

QLSSetup qls_setup(const QLSDatum& d) {
  const DiagonalRealization& r = d.realization;
  r.validate();
  const int theta = r.theta;
  if (static_cast<int>(d.xis.size()) != theta) throw std::invalid_argument("qls: one xi per generator");
  QLSSetup s;
  s.datum = d;
  for (int i = 0; i < theta; ++i) {
    const int n = root_order(r.qmatrix[i][i]);
    if (n < 2) throw std::invalid_argument("qls: q_ii must be a root of unity other than 1");
    s.orders.push_back(n);
    for (int j = 0; j < theta; ++j) {
      if (i != j && !(r.qmatrix[i][j] * r.qmatrix[j][i]).is_one()) {
        throw std::invalid_argument("qls: q_ij q_ji != 1 for i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  }
  for (const auto& [ij, a] : d.as) {
    if (ij.first == ij.second || ij.first < 0 || ij.second < 0 || ij.first >= theta || ij.second >= theta) {
      throw std::invalid_argument("qls: linking scalar needs i != j in range");
    }
  }
  s.group = std::make_shared<HopfData>(group_algebra(r.group));
  YDModuleData v = realization_module(r, s.group);
  int top = 1;
  for (int n : s.orders) top += n - 1;
  s.nichols = std::make_shared<BraidedHopf>(nichols_algebra(v, top + 1));
  s.smash = std::make_shared<HopfData>(bosonize(*s.nichols));
  return s;
}

SparseVec qls_monomial(const QLSSetup& s, int i, int k) {
  const HopfData& b = s.nichols->alg;
  SparseVec out = b.unit;
  const SparseVec x = SparseVec::unit(b.dim, s.nichols->generators.at(i));
  for (int t = 0; t < k; ++t) out = multiply(b, out, x);
  return out;
}

BraidedTwistData braided_J_D(const QLSSetup& s) {
  const BraidedHopf& r = *s.nichols;
  const Index d = r.alg.dim;
  const auto& qm = s.datum.realization.qmatrix;
  SparseVec j = SparseVec::unit(d * d, 0);
  for (int i = 0; i < s.datum.realization.theta; ++i) {
    const CycScalar& xi = s.datum.xis[i];
    if (xi.is_zero()) continue;
    const int n = s.orders[i];
    const CycScalar& q = qm[i][i];
    SparseVec f = SparseVec::unit(d * d, 0);
    for (int k = 1; k < n; ++k) {
      const CycScalar c = xi * (q_factorial(n - k, q) * q_factorial(k, q)).inverse();
      f += c * tensor(qls_monomial(s, i, k), qls_monomial(s, i, n - k));
    }
    j = braided_tensor_multiply(r, 2, j, f);
  }
  for (const auto& [ij, a] : s.datum.as) {
    if (a.is_zero()) continue;
    const auto [i, k] = ij;
    const CycScalar& q = qm[k][i];
    const SparseVec x = tensor(qls_monomial(s, i, 1), qls_monomial(s, k, 1));
    SparseVec e = SparseVec::unit(d * d, 0), power = e;
    const int top = std::min(s.orders[i], s.orders[k]);
    for (int n = 1; n < top; ++n) {
      power = braided_tensor_multiply(r, 2, power, x);
      if (power.is_zero()) break;
      e += (a.pow(n) * q_factorial(n, q).inverse()) * power;
    }
    j = braided_tensor_multiply(r, 2, j, e);
  }
  return make_braided_twist(s.nichols, std::move(j));
}

TwistData twist_J_D(const QLSSetup& s, const std::optional<TwistData>& f) {
  return bosonize_twist(braided_J_D(s), s.smash, f);
}

QLSDatum quantum_plane_datum(const CycScalar& xi1, const CycScalar& xi2, const CycScalar& a12,
                             const CycScalar& a21, bool klein) {
  QLSDatum d;
  if (klein) {
    std::vector<CycScalar> chi(4);
    for (int x = 0; x < 4; ++x) chi[x] = CycScalar((x / 2 + x % 2) % 2 ? -1L : 1L);
    d.realization = make_realization(klein_four(), {2, 2}, {chi, chi});
  } else {
    const auto sign = cyclic_character(2, CycScalar(-1L));
    d.realization = make_realization(cyclic_group(2), {1, 1}, {sign, sign});
  }
  d.xis = {xi1, xi2};
  d.as[{0, 1}] = a12;
  d.as[{1, 0}] = a21;
  return d;
}

SparseVec qls_dual_generator(const QLSSetup& s, int i) {
  SparseVec y(s.smash->dim);
  for (Index h = 0; h < s.group->dim; ++h) {
    y.set(smash_index(*s.nichols, s.nichols->generators.at(i), h), CycScalar(1L));
  }
  return y;
}

FKSetup fk_setup(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("fk_setup: n must be 3 or 4");
  FKSetup s;
  s.n = n;
  s.group = symmetric_group(n);
  s.base = std::make_shared<HopfData>(function_algebra(s.group));
  s.transpositions = transpositions(s.group);
  YDModuleData v = transposition_module(s.group, s.base);
  s.nichols = std::make_shared<BraidedHopf>(nichols_algebra(v, n == 3 ? 5 : 13));
  s.smash = std::make_shared<HopfData>(bosonize(*s.nichols));
  return s;
}

BraidedTwistData braided_J_n(const FKSetup& s) {
  const Index d = s.nichols->alg.dim;
  SparseVec j = SparseVec::unit(d * d, 0);
  for (Index a : s.nichols->generators) {
    for (Index b : s.nichols->generators) j.add(a * d + b, CycScalar(1L));
  }
  return make_braided_twist(s.nichols, std::move(j));
}

namespace {

// 1 (x) 1 + sum_w sign(w) sum_{eta, tau} y_eta delta_w (x) y_{w^-1 tau w} # 1, with
// delta_w sitting in the base at embed(w).
SparseVec j_n_element(const BraidedHopf& r, const HopfData& a, const GroupTable& sn,
                      const std::vector<int>& transp, const std::function<Index(int)>& embed) {
  const Index d = a.dim;
  const HopfData& h = *r.yd.base;
  std::vector<int> pos_of(sn.order, -1);
  for (std::size_t k = 0; k < transp.size(); ++k) pos_of[transp[k]] = static_cast<int>(k);
  SparseVec j = one_tensor(a, 2);
  for (int w = 0; w < sn.order; ++w) {
    const CycScalar sg(static_cast<long>(sign(sn, w)));
    for (int eta : transp) {
      const Index left = smash_index(r, r.generators[pos_of[eta]], embed(w));
      for (int tau : transp) {
        const Index y = r.generators[pos_of[sn.conj_by(tau, w)]];
        for (const auto& [u, cu] : h.unit) j.add(left * d + smash_index(r, y, u), sg * cu);
      }
    }
  }
  return j;
}

}  // namespace

TwistData twist_J_n(const FKSetup& s) {
  return make_twist(s.smash, j_n_element(*s.nichols, *s.smash, s.group, s.transpositions,
                                         [](int w) { return static_cast<Index>(w); }));
}

FKExtension fk3_extension(int m) {
  if (m < 1 || m > 3) throw std::invalid_argument("fk3_extension: m must be 1, 2 or 3");
  FKExtension e;
  e.m = m;
  e.group = symmetric_group(3);
  e.transpositions = transpositions(e.group);
  std::vector<int> gens;
  if (m == 2) gens.push_back(e.group.find_perm({1, 0, 2}));
  if (m == 3) gens.push_back(e.group.find_perm({1, 2, 0}));
  std::vector<int> f_in_g;
  e.f = generated_subgroup(e.group, gens, &f_in_g);
  const RightAction act = conjugation_action(e.group, f_in_g);
  e.base = std::make_shared<HopfData>(matched_pair_extension(e.group, e.f, act));
  YDModuleData v = transposition_module_extended(e.group, e.f, act, e.base);
  e.nichols = std::make_shared<BraidedHopf>(nichols_algebra(v, 5));
  e.smash = std::make_shared<HopfData>(bosonize(*e.nichols));
  return e;
}

TwistData extend_J3_matched_pair(const FKExtension& e) {
  const Index nf = e.f.order;
  const Index fid = e.f.identity;
  return make_twist(e.smash, j_n_element(*e.nichols, *e.smash, e.group, e.transpositions,
                                         [&](int w) { return static_cast<Index>(w) * nf + fid; }));
}

CocycleData cocycle_GM(const FKSetup& s, HopfPtr dual_smash) {
  const BraidedHopf& r = *s.nichols;
  const HopfData& a = *s.smash;
  const HopfData& ad = *dual_smash;
  const Index d = a.dim, g = s.group.order;
  const std::vector<int>& deg = *a.grading;
  SparseVec vals(d * d);
  // degree zero: the dual basis element of 1 # delta_w is the group-like w
  for (Index w = 0; w < g; ++w) {
    for (Index w2 = 0; w2 < g; ++w2) vals.set(smash_index(r, 0, w) * d + smash_index(r, 0, w2), CycScalar(1L));
  }
  // degree one: coordinates of the dual basis in the monomials x_tau w
  std::vector<Index> deg1;
  for (Index k = 0; k < d; ++k) {
    if (deg[k] == 1) deg1.push_back(k);
  }
  std::vector<SparseVec> cols;
  std::vector<CycScalar> signs;
  for (Index gen : r.generators) {
    const SparseVec x = SparseVec::unit(d, smash_index(r, gen, s.group.identity));
    for (Index w = 0; w < g; ++w) {
      const SparseVec m = multiply(ad, x, SparseVec::unit(d, smash_index(r, 0, w)));
      SparseVec col(deg1.size());
      for (const auto& [k, c] : m) {
        auto it = std::lower_bound(deg1.begin(), deg1.end(), k);
        if (it == deg1.end() || *it != k) throw std::logic_error("cocycle_GM: x_tau w is not of degree one");
        col.set(it - deg1.begin(), c);
      }
      cols.push_back(col);
      signs.push_back(CycScalar(static_cast<long>(sign(s.group, static_cast<int>(w)))));
    }
  }
  auto inv = invert_matrix(SparseMat::from_columns(deg1.size(), cols));
  if (!inv) throw std::logic_error("cocycle_GM: x_tau w do not span degree one");
  // sigma(e_a, e_b) = f(a) u(b): f weighs the monomials x_tau w by sign(w), u by 1
  std::vector<CycScalar> f(deg1.size()), u(deg1.size());
  for (std::size_t k = 0; k < deg1.size(); ++k) {
    for (const auto& [m, c] : inv->col(k)) {
      f[k] += c * signs[m];
      u[k] += c;
    }
  }
  for (std::size_t k = 0; k < deg1.size(); ++k) {
    for (std::size_t l = 0; l < deg1.size(); ++l) {
      const CycScalar v = f[k] * u[l];
      if (!v.is_zero()) vals.set(deg1[k] * d + deg1[l], v);
    }
  }
  return make_cocycle(dual_smash, std::move(vals));
}

namespace {

// Homomorphisms from the group formed by the basis elements `family` (under
// the product of h) to roots of unity, as value vectors aligned with `family`.
std::vector<std::vector<CycScalar>> group_family_characters(const HopfData& h,
                                                            const std::vector<Index>& family) {
  const std::size_t m = family.size();
  std::map<Index, std::size_t> pos;
  for (std::size_t k = 0; k < m; ++k) pos[family[k]] = k;
  auto mul = [&](std::size_t a, std::size_t b) -> std::size_t {
    const SparseVec& p = h.product(family[a], family[b]);
    if (p.nnz() != 1 || !(p.entries().begin()->second == CycScalar(1L)) || !pos.count(p.entries().begin()->first)) {
      throw std::invalid_argument("character_convolution_group: group-like family is not closed");
    }
    return pos[p.entries().begin()->first];
  };
  std::size_t id = m;
  for (std::size_t k = 0; k < m; ++k) {
    if (h.unit == SparseVec::unit(h.dim, family[k])) id = k;
  }
  if (id == m) throw std::invalid_argument("character_convolution_group: family lacks the unit");
  auto order_of = [&](std::size_t a) {
    int o = 1;
    for (std::size_t x = a; x != id; x = mul(x, a)) ++o;
    return o;
  };
  // greedy generating set
  std::vector<std::size_t> gens;
  std::vector<bool> reached(m, false);
  reached[id] = true;
  auto close = [&](std::vector<bool>& seen) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < m; ++a) {
        if (!seen[a]) continue;
        for (std::size_t g : gens) {
          const std::size_t b = mul(a, g);
          if (!seen[b]) seen[b] = grew = true;
        }
      }
    }
  };
  for (std::size_t a = 0; a < m; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    close(reached);
  }
  std::vector<std::vector<CycScalar>> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<CycScalar> val(m);
    std::vector<bool> set(m, false);
    val[id] = CycScalar(1L);
    set[id] = true;
    bool ok = true;
    std::vector<std::size_t> frontier{id};
    while (!frontier.empty() && ok) {
      std::vector<std::size_t> next;
      for (std::size_t a : frontier) {
        for (std::size_t k = 0; k < gens.size() && ok; ++k) {
          const std::size_t b = mul(a, gens[k]);
          const CycScalar v = val[a] * CycScalar::root_of_unity(order_of(gens[k]), choice[k]);
          if (!set[b]) {
            val[b] = v;
            set[b] = true;
            next.push_back(b);
          } else if (!(val[b] == v)) {
            ok = false;
          }
        }
      }
      frontier = std::move(next);
    }
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = 0; b < m && ok; ++b) ok = val[mul(a, b)] == val[a] * val[b];
    }
    if (ok) out.push_back(val);
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == order_of(gens[k])) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  return out;
}

}  // namespace

CharacterGroup character_convolution_group(const HopfData& h) {
  const Index d = h.dim;
  // monomials in the generator basis elements that span H
  std::vector<Index> gens;
  for (const auto& gs : h.generators) gens.insert(gens.end(), gs.indices.begin(), gs.indices.end());
  IncrementalBasis span(d);
  std::vector<std::vector<Index>> words;
  std::vector<SparseVec> frontier{h.unit};
  std::vector<std::vector<Index>> frontier_words{{}};
  span.offer(h.unit);
  words.push_back({});
  while (!frontier.empty() && span.size() < d) {
    std::vector<SparseVec> next;
    std::vector<std::vector<Index>> next_words;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (Index g : gens) {
        SparseVec v = multiply(h, frontier[f], SparseVec::unit(d, g));
        if (v.is_zero()) continue;
        if (span.offer(v).accepted) {
          std::vector<Index> w = frontier_words[f];
          w.push_back(g);
          words.push_back(w);
          next.push_back(std::move(v));
          next_words.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
    frontier_words = std::move(next_words);
  }
  if (span.size() < d) throw std::invalid_argument("character_convolution_group: generators do not span");
  std::vector<SparseVec> coords(d);
  for (Index b = 0; b < d; ++b) coords[b] = *span.coordinates(SparseVec::unit(d, b));

  // candidate values on the generators, family by family
  std::vector<std::map<Index, CycScalar>> candidates{{}};
  for (const auto& gs : h.generators) {
    std::vector<std::map<Index, CycScalar>> next;
    std::vector<std::vector<CycScalar>> options;
    if (gs.kind == GeneratorKind::Nilpotent) {
      options.push_back(std::vector<CycScalar>(gs.indices.size()));
    } else if (gs.kind == GeneratorKind::IdempotentFamily) {
      for (std::size_t k = 0; k < gs.indices.size(); ++k) {
        std::vector<CycScalar> o(gs.indices.size());
        o[k] = CycScalar(1L);
        options.push_back(o);
      }
    } else {
      options = group_family_characters(h, gs.indices);
    }
    for (const auto& c : candidates) {
      for (const auto& o : options) {
        auto m = c;
        for (std::size_t k = 0; k < o.size(); ++k) m[gs.indices[k]] = o[k];
        next.push_back(std::move(m));
      }
    }
    candidates = std::move(next);
  }

  CharacterGroup out;
  for (const auto& cand : candidates) {
    std::vector<CycScalar> on_words(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
      CycScalar v(1L);
      for (Index g : words[w]) v *= cand.at(g);
      on_words[w] = v;
    }
    SparseVec chi(d);
    for (Index b = 0; b < d; ++b) {
      CycScalar v;
      for (const auto& [w, c] : coords[b]) v += c * on_words[w];
      chi.set(b, v);
    }
    auto eval = [&](const SparseVec& x) {
      CycScalar v;
      for (const auto& [i, c] : x) v += c * chi.get(i);
      return v;
    };
    bool ok = eval(h.unit) == CycScalar(1L);
    for (Index i = 0; i < d && ok; ++i) {
      for (Index j = 0; j < d && ok; ++j) ok = eval(h.product(i, j)) == chi.get(i) * chi.get(j);
    }
    if (ok) out.characters.push_back(std::move(chi));
  }
  const int n = static_cast<int>(out.characters.size());
  GroupTable& t = out.table;
  t.order = n;
  t.table.assign(n, std::vector<int>(n, -1));
  t.inv.assign(n, -1);
  SparseVec counit(d);
  for (Index i = 0; i < d; ++i) counit.set(i, h.counit[i]);
  for (int a = 0; a < n; ++a) {
    t.labels.push_back("chi" + std::to_string(a));
    if (out.characters[a] == counit) t.identity = a;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      SparseVec conv(d);
      for (Index i = 0; i < d; ++i) {
        CycScalar v;
        for (const auto& [k, c] : h.comult[i]) v += c * out.characters[a].get(k / d) * out.characters[b].get(k % d);
        conv.set(i, v);
      }
      for (int c = 0; c < n; ++c) {
        if (out.characters[c] == conv) t.table[a][b] = c;
      }
      if (t.table[a][b] < 0) throw std::logic_error("character_convolution_group: product is not a character");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t.table[a][b] == t.identity) t.inv[a] = b;
    }
  }
  t.validate();
  return out;
}

TwistData twist_abelian(const GroupTable& gamma, const std::vector<std::vector<CycScalar>>& chars,
                        const std::vector<std::vector<CycScalar>>& alpha) {
  const int n = gamma.order;
  const int k = static_cast<int>(chars.size());
  if (k != n) throw std::invalid_argument("twist_abelian: need one character per element");
  std::vector<std::vector<int>> prod(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        bool same = true;
        for (int g = 0; g < n && same; ++g) same = chars[a][g] * chars[b][g] == chars[c][g];
        if (same) prod[a][b] = c;
      }
      if (prod[a][b] < 0) throw std::invalid_argument("twist_abelian: characters not closed");
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        if (!(alpha[a][b] * alpha[prod[a][b]][c] == alpha[b][c] * alpha[a][prod[b][c]])) {
          throw std::invalid_argument("twist_abelian: alpha is not a 2-cocycle at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  auto h = std::make_shared<HopfData>(group_algebra(gamma));
  const CycScalar scale = CycScalar(static_cast<long>(n)).inverse();
  std::vector<SparseVec> idem(k);
  for (int a = 0; a < k; ++a) {
    idem[a] = SparseVec(n);
    for (int g = 0; g < n; ++g) idem[a].add(g, scale * chars[a][gamma.inverse(g)]);
  }
  SparseVec j(static_cast<Index>(n) * n);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!alpha[a][b].is_zero()) j.axpy(alpha[a][b], tensor(idem[a], idem[b]));
    }
  }
  return make_twist(h, std::move(j));
}

TwistData lift_twist(const TwistData& t, const GroupTable& g, const std::vector<int>& embedding) {
  auto h = std::make_shared<HopfData>(group_algebra(g));
  const Index m = t.base->dim, n = g.order;
  SparseVec j(n * n);
  for (const auto& [i, c] : t.element) j.add(static_cast<Index>(embedding[i / m]) * n + embedding[i % m], c);
  return make_twist(h, std::move(j));
}

TwistData twist_klein_alpha() {
  GroupTable k4 = klein_four();
  std::vector<std::vector<CycScalar>> chars(4, std::vector<CycScalar>(4)), alpha = chars;
  for (int a = 0; a < 4; ++a) {
    for (int x = 0; x < 4; ++x) {
      chars[a][x] = CycScalar(((a / 2) * (x / 2) + (a % 2) * (x % 2)) % 2 ? -1L : 1L);
    }
    for (int b = 0; b < 4; ++b) alpha[a][b] = CycScalar(((a % 2) * (b / 2)) % 2 ? -1L : 1L);
  }
  return twist_abelian(k4, chars, alpha);
}

TwistData twist_s4_from_klein() {
  GroupTable s4 = symmetric_group(4);
  GroupTable k4 = klein_four();
  // (x, y) -> a^x b^y with a = (12)(34), b = (13)(24)
  const int a = s4.find_perm({1, 0, 3, 2}), b = s4.find_perm({2, 3, 0, 1});
  std::vector<int> emb(4);
  for (int x = 0; x < 4; ++x) {
    int e = s4.identity;
    if (x / 2) e = s4.mul(e, a);
    if (x % 2) e = s4.mul(e, b);
    emb[x] = e;
  }
  return lift_twist(twist_klein_alpha(), s4, emb);
}

YDModuleData a2_module() {
  GroupTable k4 = klein_four();
  auto h = std::make_shared<HopfData>(group_algebra(k4));
  // element index 2a + b stands for (a, b)
  auto character = [](int sa, int sb) {
    std::vector<CycScalar> v(4);
    for (int x = 0; x < 4; ++x) v[x] = CycScalar(((x / 2) * sa + (x % 2) * sb) % 2 ? -1L : 1L);
    return v;
  };
  YDModuleData v = realization_module(make_realization(k4, {2, 1}, {character(1, 1), character(0, 1)}), h);
  v.labels = {"x1", "x2"};
  return v;
}

}  // namespace hopflab
