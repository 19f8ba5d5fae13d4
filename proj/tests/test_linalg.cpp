#include <random>

#include "doctest.h"
#include "hopflab/linalg.hpp"

using namespace hopflab;

namespace {

// Fraction-free (Bareiss) determinant over integers; independent oracle for
// invertibility.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("sparse vectors keep normal form") {
  SparseVec v(4);
  v.add(1, CycScalar(2L));
  v.add(1, CycScalar(-2L));
  CHECK(v.is_zero());
  v.set(3, CycScalar(5L));
  v.set(3, CycScalar());
  CHECK(v.nnz() == 0);
  SparseVec a = SparseVec::unit(4, 0) + SparseVec::unit(4, 2, CycScalar(3L));
  SparseVec b = a;
  b.axpy(CycScalar(-1L), a);
  CHECK(b.is_zero());
}

TEST_CASE("solve_linear") {
  SparseVec b(3);
  b.set(0, CycScalar(4L));
  b.set(2, CycScalar::root_of_unity(3, 1));
  auto x = solve_linear(SparseMat::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);

  SparseMat a(2, 2);
  a.set(0, 0, CycScalar(1L));
  a.set(0, 1, CycScalar(1L));
  CHECK_FALSE(solve_linear(a, SparseVec::unit(2, 1)));

  // Left multiplication by 1 + zeta_3 on Q(zeta_3) in the basis {1, zeta}:
  // (1+z)*1 = 1 + z, (1+z)*z = z + z^2 = -1.
  SparseMat m(2, 2);
  m.set(0, 0, CycScalar(1L));
  m.set(1, 0, CycScalar(1L));
  m.set(0, 1, CycScalar(-1L));
  auto y = solve_linear(m, SparseVec::unit(2, 0));
  REQUIRE(y);
  // 1 + z^2 = -z
  CHECK(y->get(0).is_zero());
  CHECK(y->get(1) == CycScalar(-1L));
}

TEST_CASE("random systems agree with the Bareiss oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3), z(0, 2);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 5;
    std::vector<std::vector<mpz_class>> ints(n, std::vector<mpz_class>(n));
    SparseMat a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int v = z(rng) == 0 ? 0 : d(rng);
        ints[i][j] = v;
        a.set(i, j, CycScalar(static_cast<long>(v)));
      }
    }
    const bool invertible = bareiss_det(ints) != 0;
    auto inv = invert_matrix(a);
    CHECK(inv.has_value() == invertible);
    CHECK((rank(a) == n) == invertible);
    if (inv) {
      CHECK(a * *inv == SparseMat::identity(n));
      CHECK(*inv * a == SparseMat::identity(n));
    }
    SparseVec b(n);
    for (int i = 0; i < n; ++i) b.set(i, CycScalar(static_cast<long>(d(rng))));
    auto x = solve_linear(a, b);
    if (x) CHECK(a.apply(*x) == b);
    if (invertible) CHECK(x.has_value());
  }
}

TEST_CASE("incremental basis") {
  IncrementalBasis basis(3);
  SparseVec u = SparseVec::unit(3, 0) + SparseVec::unit(3, 1);
  SparseVec w = SparseVec::unit(3, 1) + SparseVec::unit(3, 2);
  CHECK(basis.offer(u).accepted);
  CHECK(basis.offer(w).accepted);
  SparseVec s = u;
  s.axpy(CycScalar(-2L), w);
  auto r = basis.offer(s);
  CHECK_FALSE(r.accepted);
  CHECK(r.coords.get(0) == CycScalar(1L));
  CHECK(r.coords.get(1) == CycScalar(-2L));
  CHECK_FALSE(basis.coordinates(SparseVec::unit(3, 0)).has_value());
  CHECK(basis.size() == 2);
}

TEST_CASE("transpose and products") {
  SparseMat a(2, 3);
  a.set(0, 2, CycScalar(7L));
  a.set(1, 0, CycScalar(-1L));
  SparseMat t = a.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.get(2, 0) == CycScalar(7L));
  CHECK(t.transpose() == a);
  CHECK((a * t).get(0, 0) == CycScalar(49L));
}
