#include "doctest.h"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

std::vector<CycScalar> sign_character(int order, int a, int b) {
  // character of C2 x C2 (index = 2x + y) with values (-1)^a, (-1)^b on the generators
  std::vector<CycScalar> v(order);
  for (int x = 0; x < order; ++x) v[x] = CycScalar(static_cast<long>(((x / 2) * a + (x % 2) * b) % 2 ? -1 : 1));
  return v;
}

Index total(const std::vector<Index>& d) {
  Index t = 0;
  for (Index x : d) t += x;
  return t;
}

// Drops the trailing zero that marks where the symmetrizer vanished.
std::vector<Index> nonzero_prefix(std::vector<Index> d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

}  // namespace

TEST_CASE("quantum lines") {
  for (int n : {2, 3, 4, 5}) {
    GroupTable c = cyclic_group(n);
    auto kc = std::make_shared<HopfData>(group_algebra(c));
    const CycScalar q = CycScalar::root_of_unity(n, 1);
    YDModuleData v = realization_module(make_realization(c, {1}, {cyclic_character(n, q)}), kc);
    BraidedHopf r = nichols_algebra(v, 10);
    CAPTURE(n);
    CHECK_FALSE(r.truncated);
    CHECK(r.alg.dim == n);
    CHECK(r.graded_dims == std::vector<Index>(n, 1));
    CHECK(nonzero_prefix(symmetrizer_dims(braiding(v), 1, n + 1)) == r.graded_dims);
    Report rep = verify_braided_hopf(r);
    CHECK_MESSAGE(rep.ok(), rep.to_string());
    // Delta(x^m) = sum_k binom(m, k)_q x^k (x) x^{m-k}
    for (int m = 0; m < n; ++m) {
      SparseVec expect(n * n);
      for (int k = 0; k <= m; ++k) expect.add(k * n + (m - k), q_binomial(m, k, q));
      CHECK(r.alg.comult[m] == expect);
    }
    // x^{n-1} x = 0
    CHECK(r.alg.product(n - 1, 1).is_zero());
  }
}

TEST_CASE("truncation flag") {
  GroupTable c = cyclic_group(4);
  auto kc = std::make_shared<HopfData>(group_algebra(c));
  YDModuleData v =
      realization_module(make_realization(c, {1}, {cyclic_character(4, CycScalar::root_of_unity(4, 1))}), kc);
  BraidedHopf r = nichols_algebra(v, 2);
  CHECK(r.truncated);
  CHECK(r.graded_dims == std::vector<Index>{1, 1, 1});
  CHECK(nichols_algebra(v, 3).truncated == false);
}

TEST_CASE("quantum linear spaces") {
  // over C2 x C2: q_11 = q_22 = -1, q_12 = q_21 = 1
  GroupTable k4 = klein_four();
  auto h = std::make_shared<HopfData>(group_algebra(k4));
  YDModuleData v =
      realization_module(make_realization(k4, {2, 1}, {sign_character(4, 1, 0), sign_character(4, 0, 1)}), h);
  BraidedHopf r = nichols_algebra(v, 6);
  CHECK(r.graded_dims == std::vector<Index>{1, 2, 1});
  CHECK(verify_braided_hopf(r).ok());
  // over C3 x C3 with q_ii = w, q_12 q_21 = 1
  GroupTable c3 = cyclic_group(3);
  GroupTable g = direct_product(c3, c3);
  auto kg = std::make_shared<HopfData>(group_algebra(g));
  const CycScalar w = CycScalar::root_of_unity(3, 1);
  auto chi = [&](int a, int b) {
    std::vector<CycScalar> out(9);
    for (int x = 0; x < 9; ++x) out[x] = w.pow((x / 3) * a + (x % 3) * b);
    return out;
  };
  // g1 = (g, 1), g2 = (1, g); chi1 = (w, 1), chi2 = (w^2, w): q_12 = chi2(g1) = w^2, q_21 = chi1(g2) = 1
  // so take chi2 = (1, w) and chi1 = (w, 1) for q_12 q_21 = 1.
  YDModuleData v3 = realization_module(make_realization(g, {3, 1}, {chi(1, 0), chi(0, 1)}), kg);
  BraidedHopf r3 = nichols_algebra(v3, 8);
  CHECK(r3.alg.dim == 9);
  CHECK(r3.graded_dims == std::vector<Index>{1, 2, 3, 2, 1});
  CHECK(nonzero_prefix(symmetrizer_dims(braiding(v3), 2, 6)) == r3.graded_dims);
  CHECK(verify_braided_hopf(r3).ok());
}

TEST_CASE("Cartan type A2 at q = -1") {
  GroupTable k4 = klein_four();
  auto h = std::make_shared<HopfData>(group_algebra(k4));
  YDModuleData v =
      realization_module(make_realization(k4, {2, 1}, {sign_character(4, 1, 1), sign_character(4, 0, 1)}), h);
  BraidedHopf r = nichols_algebra(v, 8);
  CHECK(r.graded_dims == std::vector<Index>{1, 2, 2, 2, 1});
  CHECK(nonzero_prefix(symmetrizer_dims(braiding(v), 2, 6)) == r.graded_dims);
  Report rep = verify_braided_hopf(r);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
}

TEST_CASE("Fomin-Kirillov algebra of S3") {
  GroupTable s3 = symmetric_group(3);
  auto h = std::make_shared<HopfData>(function_algebra(s3));
  YDModuleData v = transposition_module(s3, h);
  BraidedHopf r = nichols_algebra(v, 8);
  CHECK_FALSE(r.truncated);
  CHECK(r.graded_dims == std::vector<Index>{1, 3, 4, 3, 1});
  CHECK(total(r.graded_dims) == 12);
  CHECK(symmetrizer_dims(braiding(v), 3, 6) == std::vector<Index>{1, 3, 4, 3, 1, 0});
  Report rep = verify_braided_hopf(r);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  // relations: y_t^2 = 0
  for (Index g : r.generators) CHECK(r.alg.product(g, g).is_zero());
}

TEST_CASE("A2 at q = -1 on the PBW basis") {
  GroupTable k4 = klein_four();
  auto h = std::make_shared<HopfData>(group_algebra(k4));
  YDModuleData v =
      realization_module(make_realization(k4, {2, 1}, {sign_character(4, 1, 1), sign_character(4, 0, 1)}), h);
  BraidedHopf r = a2_nichols(v);
  const HopfData& R = r.alg;
  REQUIRE(R.dim == 8);
  CHECK(R.labels == std::vector<std::string>{"1", "x1", "x12", "x12x1", "x2", "x2x1", "x2x12", "x2x12x1"});
  CHECK(r.generators == std::vector<Index>{1, 4});
  CHECK(*R.grading == std::vector<int>{0, 1, 2, 3, 1, 2, 3, 4});
  Report rep = verify_braided_hopf(r);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  const Index x1 = 1, x12 = 2, x12x1 = 3, x2 = 4, x2x1 = 5, x2x12 = 6;
  // defining relations
  CHECK(R.product(x1, x1).is_zero());
  CHECK(R.product(x2, x2).is_zero());
  CHECK(R.product(x12, x12).is_zero());
  // derived commutation rules
  CHECK(R.product(x1, x2) == SparseVec::unit(8, x12) + SparseVec::unit(8, x2x1));
  CHECK(R.product(x1, x12) == SparseVec::unit(8, x12x1, CycScalar(-1L)));
  CHECK(R.product(x12, x2) == SparseVec::unit(8, x2x12, CycScalar(-1L)));
  // Delta(x12) = x12 (x) 1 + 2 x1 (x) x2 + 1 (x) x12
  SparseVec d(64);
  d.add(x12 * 8, CycScalar(1L));
  d.add(x1 * 8 + x2, CycScalar(2L));
  d.add(x12, CycScalar(1L));
  CHECK(R.comult[x12] == d);
  // other braidings are rejected
  YDModuleData qls =
      realization_module(make_realization(k4, {2, 1}, {sign_character(4, 1, 0), sign_character(4, 0, 1)}), h);
  CHECK_THROWS_AS(a2_nichols(qls), std::invalid_argument);
}
