#include <algorithm>

#include "doctest.h"
#include "hopflab/yd.hpp"

using namespace hopflab;

namespace {

bool same_module(const YDModuleData& a, const YDModuleData& b) {
  return a.dim == b.dim && a.action == b.action && a.coaction == b.coaction;
}

}  // namespace

TEST_CASE("one-dimensional modules k_g^chi") {
  for (int n : {2, 3, 4}) {
    GroupTable c = cyclic_group(n);
    auto kc = std::make_shared<HopfData>(group_algebra(c));
    for (int k = 0; k < n; ++k) {
      CycScalar root = CycScalar::root_of_unity(n, k);
      DiagonalRealization r = make_realization(c, {1}, {cyclic_character(n, root)});
      YDModuleData v = realization_module(r, kc);
      CHECK(verify_yd(v).ok());
      SparseMat b = braiding(v);
      CHECK(b.get(0, 0) == root);  // chi(g)
      // dual is k_{g^-1}^{chi^-1}
      YDModuleData d = yd_dual(v);
      CHECK(verify_yd(d).ok());
      DiagonalRealization rinv =
          make_realization(c, {c.inverse(1)}, {cyclic_character(n, root.inverse())});
      CHECK(same_module(d, realization_module(rinv, kc)));
      CHECK(same_module(yd_dual(d), v));
    }
  }
}

TEST_CASE("diagonal realizations") {
  GroupTable k4 = klein_four();
  auto h = std::make_shared<HopfData>(group_algebra(k4));
  // chi_i(g_j) = q_ji with q = [[-1, 1], [-1, -1]] (Cartan A2 at q = -1).
  // g1 = (g,1) index 2, g2 = (1,g) index 1; chi1 = (-1, -1), chi2 = (1, -1) on generators.
  auto chi = [&](int a, int b) {
    std::vector<CycScalar> v(4);
    for (int x = 0; x < 4; ++x) v[x] = CycScalar(static_cast<long>(((x / 2) * a + (x % 2) * b) % 2 ? -1 : 1));
    return v;
  };
  DiagonalRealization r = make_realization(k4, {2, 1}, {chi(1, 1), chi(0, 1)});
  CHECK(r.qmatrix[0][0] == CycScalar(-1L));
  CHECK(r.qmatrix[0][1] == CycScalar(1L));
  CHECK(r.qmatrix[1][0] == CycScalar(-1L));
  CHECK(r.qmatrix[1][1] == CycScalar(-1L));
  YDModuleData v = realization_module(r, h);
  CHECK(verify_yd(v).ok());
  SparseMat c = braiding(v);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      SparseVec expect = SparseVec::unit(4, j * 2 + i, r.qmatrix[i][j]);
      CHECK(c.col(i * 2 + j) == expect);
    }
  }
  // Over the dual group algebra, V* has the transposed braiding matrix.
  auto hd = std::make_shared<HopfData>(dual_hopf(*h));
  YDModuleData w = yd_dual_over_dual(v, hd);
  CHECK(verify_yd(w).ok());
  SparseMat cw = braiding(w);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(cw.col(i * 2 + j) == SparseVec::unit(4, j * 2 + i, r.qmatrix[j][i]));
    }
  }
  YDModuleData u = yd_over_dual(v, hd);
  CHECK(verify_yd(u).ok());
  CHECK_THROWS(make_realization(k4, {2, 1}, {chi(1, 1), {CycScalar(1L), CycScalar(2L), CycScalar(1L), CycScalar(1L)}}));
}

TEST_CASE("S3 transposition module") {
  GroupTable s3 = symmetric_group(3);
  auto fs3 = std::make_shared<HopfData>(function_algebra(s3));
  YDModuleData v = transposition_module(s3, fs3);
  CHECK(v.dim == 3);
  CHECK(verify_yd(v).ok());
  // Without the sign the coaction is still a YD structure (a different
  // braiding), so the verifier accepts it.
  YDModuleData unsigned_v = transposition_module(s3, fs3, false);
  CHECK(verify_yd(unsigned_v).ok());
  // Breaking the grading of the action breaks compatibility.
  YDModuleData bad = v;
  for (auto& a : bad.action) a = SparseVec(3);
  for (int i = 0; i < 3; ++i) bad.action[transpositions(s3)[(i + 1) % 3] * 3 + i] = SparseVec::unit(3, i);
  Report rb = verify_yd(bad);
  CHECK(rb.passed("module-assoc"));
  CHECK_FALSE(rb.passed("yd-compat"));
  // A sign dropped at a single group element breaks the comodule axiom.
  YDModuleData half = v;
  half.coaction[0] = SparseVec(18);
  for (const auto& [idx, c] : v.coaction[0]) half.coaction[0].set(idx, idx / 3 == 1 ? -c : c);
  CHECK_FALSE(verify_yd(half).passed("comodule-coassoc"));

  SparseMat c = braiding(v);
  auto x = transpositions(s3);
  auto pos = [&](int g) { return std::find(x.begin(), x.end(), g) - x.begin(); };
  // c(y_e (x) y_t) = sum_w sign(w) d_w . y_t (x) y_{w^-1 e w} = -y_t (x) y_{t e t}
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int e = x[i], t = x[j];
      Index k = pos(s3.mul(t, s3.mul(e, t)));
      CHECK(c.col(i * 3 + j) == SparseVec::unit(9, j * 3 + k, CycScalar(-1L)));
    }
  }

  // Dual over kS3: t . x_e = sign(t) x_{t e t^-1}, x_e -> e (x) x_e.
  auto ks3 = std::make_shared<HopfData>(dual_hopf(*fs3));
  CHECK(same_structure(*ks3, group_algebra(s3)));
  YDModuleData w = yd_dual_over_dual(v, ks3);
  CHECK(verify_yd(w).ok());
  for (int t = 0; t < 6; ++t) {
    for (int i = 0; i < 3; ++i) {
      Index k = pos(s3.mul(t, s3.mul(x[i], s3.inverse(t))));
      CHECK(w.act_basis(t, i) == SparseVec::unit(3, k, CycScalar(static_cast<long>(sign(s3, t)))));
    }
  }
  for (int i = 0; i < 3; ++i) CHECK(w.coaction[i] == SparseVec::unit(18, x[i] * 3 + i));

  YDModuleData d = yd_dual(v);
  CHECK(verify_yd(d).ok());
  CHECK(same_module(yd_dual(d), v));
  CHECK(verify_yd(yd_over_dual(v, ks3)).ok());
}

TEST_CASE("matched pair transposition module") {
  GroupTable s3 = symmetric_group(3);
  for (const char* gen : {"(12)", "(123)"}) {
    std::vector<int> emb;
    GroupTable f = generated_subgroup(s3, {s3.index_of(gen)}, &emb);
    RightAction act = conjugation_action(s3, emb);
    auto h = std::make_shared<HopfData>(matched_pair_extension(s3, f, act));
    YDModuleData v = transposition_module_extended(s3, f, act, h);
    CAPTURE(gen);
    CHECK(verify_yd(v).ok());
  }
}
