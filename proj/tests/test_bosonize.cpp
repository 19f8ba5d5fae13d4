#include <algorithm>
#include <chrono>

#include "doctest.h"
#include "hopflab/bosonize.hpp"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

BraidedHopf quantum_line(int n, int order_q, HopfPtr& base) {
  GroupTable c = cyclic_group(n);
  base = std::make_shared<HopfData>(group_algebra(c));
  // chi(g) = q of order order_q, which must divide n
  const CycScalar q = CycScalar::root_of_unity(order_q, 1);
  std::vector<CycScalar> chi(n);
  for (int k = 0; k < n; ++k) chi[k] = q.pow(k);
  return nichols_algebra(realization_module(make_realization(c, {1}, {chi}), base), 16);
}

}  // namespace

TEST_CASE("Sweedler algebra") {
  HopfPtr base;
  BraidedHopf r = quantum_line(2, 2, base);
  HopfData a = bosonize(r);
  REQUIRE(a.dim == 4);
  Report rep = verify_bosonization(r, a);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  const Index one = smash_index(r, 0, 0), g = smash_index(r, 0, 1), x = smash_index(r, 1, 0),
              xg = smash_index(r, 1, 1);
  CHECK(a.labels[one] == "1");
  CHECK(a.labels[g] == "g");
  CHECK(a.labels[x] == "x1");
  CHECK(a.labels[xg] == "x1#g");
  // g x = -x g, x^2 = 0, g^2 = 1
  CHECK(a.product(g, x) == SparseVec::unit(4, xg, CycScalar(-1L)));
  CHECK(a.product(x, g) == SparseVec::unit(4, xg));
  CHECK(a.product(x, x).is_zero());
  CHECK(a.product(g, g) == SparseVec::unit(4, one));
  // Delta x = x (x) 1 + g (x) x
  SparseVec d(16);
  d.add(x * 4 + one, CycScalar(1L));
  d.add(g * 4 + x, CycScalar(1L));
  CHECK(a.comult[x] == d);
  // S(x) = -g^{-1} x = -g x = x g
  CHECK(antipode_of(a).col(x) == SparseVec::unit(4, xg));
  CHECK_FALSE(is_cocommutative(a));
  CHECK(grouplikes_in_basis(a) == std::vector<Index>{one, g});
}

TEST_CASE("quantum line bosonizations") {
  for (auto [n, N] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 3}, {4, 4}, {6, 2}, {6, 3}}) {
    CAPTURE(n);
    CAPTURE(N);
    HopfPtr base;
    BraidedHopf r = quantum_line(n, N, base);
    HopfData a = bosonize(r);
    CHECK(a.dim == n * N);
    Report rep = verify_bosonization(r, a);
    CHECK_MESSAGE(rep.ok(), rep.to_string());
    // basis-supported group-likes are exactly 1 # Gamma
    std::vector<Index> expect;
    for (int k = 0; k < n; ++k) expect.push_back(smash_index(r, 0, k));
    CHECK(grouplikes_in_basis(a) == expect);
  }
}

TEST_CASE("A2 bosonization") {
  GroupTable k4 = klein_four();
  HopfPtr h = std::make_shared<HopfData>(group_algebra(k4));
  auto chi = [](int a, int b) {
    std::vector<CycScalar> v(4);
    for (int x = 0; x < 4; ++x) v[x] = CycScalar(static_cast<long>(((x / 2) * a + (x % 2) * b) % 2 ? -1 : 1));
    return v;
  };
  BraidedHopf r = a2_nichols(realization_module(make_realization(k4, {2, 1}, {chi(1, 1), chi(0, 1)}), h));
  HopfData a = bosonize(r);
  CHECK(a.dim == 32);
  Report rep = verify_bosonization(r, a);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  CHECK(grouplikes_in_basis(a).size() == 4);
}

TEST_CASE("FK3 bosonization") {
  GroupTable s3 = symmetric_group(3);
  HopfPtr h = std::make_shared<HopfData>(function_algebra(s3));
  BraidedHopf r = nichols_algebra(transposition_module(s3, h), 8);
  HopfData a = bosonize(r);
  CHECK(a.dim == 72);
  Report rep = verify_bosonization(r, a);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  CHECK_FALSE(is_cocommutative(a));
}
