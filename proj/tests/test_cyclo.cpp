#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hopflab/cyclo.hpp"

using namespace hopflab;
using cplx = std::complex<double>;

namespace {

// Floating evaluation at exp(2 pi i / L); an independent oracle for the
// exact normal-form arithmetic.
cplx evaluate(const CycScalar& s) {
  const double t = 2.0 * std::numbers::pi / s.order();
  cplx z(std::cos(t), std::sin(t)), p(1.0, 0.0), acc(0.0, 0.0);
  for (const auto& c : s.coeffs()) {
    acc += c.get_d() * p;
    p *= z;
  }
  return acc;
}

bool close(cplx a, cplx b) { return std::abs(a - b) < 1e-9; }

CycScalar random_scalar(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<mpq_class> c(order);
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return CycScalar::from_powers(order, c);
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycScalar::root_of_unity(1, 0).is_one());
  CycScalar i = CycScalar::root_of_unity(4, 1);
  CHECK(i * i == CycScalar(-1L));
  CycScalar z = CycScalar::root_of_unity(3, 1);
  CHECK(z + CycScalar::root_of_unity(3, 2) == CycScalar(-1L));
  CHECK(z.pow(3).is_one());
  CHECK(CycScalar::root_of_unity(6, 9) == CycScalar(-1L));
  CHECK(CycScalar::root_of_unity(5, -1) * CycScalar::root_of_unity(5, 1) == CycScalar(1L));
  CHECK(root_order(CycScalar::root_of_unity(12, 4)) == 3);
  CHECK(root_order(CycScalar(-1L)) == 2);
  CHECK(root_order(CycScalar(2L)) == 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(9).size() == 7);
}

TEST_CASE("embed") {
  CHECK(CycScalar(-1L).embed(4) == CycScalar::root_of_unity(4, 2));
  CycScalar e = CycScalar::root_of_unity(3, 1).embed(6);
  CHECK(e.order() == 6);
  CHECK(e == CycScalar::root_of_unity(6, 2));
  CHECK(e.coeffs() == CycScalar::root_of_unity(6, 2).coeffs());
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    CycScalar a = random_scalar(rng, 4), b = random_scalar(rng, 4);
    CHECK(a.embed(12).embed(12) == a.embed(12));
    CHECK((a * b).embed(12) == a.embed(12) * b.embed(12));
    CHECK((a + b).embed(12) == a.embed(12) + b.embed(12));
    CHECK(close(evaluate(a.embed(12)), evaluate(a)));
  }
  CHECK_THROWS_AS(CycScalar::root_of_unity(4, 1).embed(6), CoercionError);
}

TEST_CASE("inverse") {
  CHECK(CycScalar(1L).inverse().is_one());
  CycScalar z = CycScalar::root_of_unity(3, 1);
  CycScalar inv = (CycScalar(1L) + z).inverse();
  CHECK(inv == CycScalar(1L) + z * z);
  CHECK(inv * (CycScalar(1L) + z) == CycScalar(1L));
  CHECK(CycScalar(mpq_class(2, 3)).inverse() == CycScalar(mpq_class(3, 2)));
  CHECK_THROWS_AS(CycScalar().inverse(), DivisionByZero);
}

TEST_CASE("field axioms against a floating oracle") {
  std::mt19937 rng(11);
  for (int order : {3, 4, 5, 8, 12}) {
    for (int t = 0; t < 15; ++t) {
      CycScalar a = random_scalar(rng, order), b = random_scalar(rng, order),
                c = random_scalar(rng, order);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(close(evaluate(a * b), evaluate(a) * evaluate(b)));
      CHECK(close(evaluate(a + b), evaluate(a) + evaluate(b)));
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(close(evaluate(a.inverse()), 1.0 / evaluate(a)));
      }
    }
  }
}

TEST_CASE("mixed orders coerce to the lcm") {
  CycScalar i = CycScalar::root_of_unity(4, 1);
  CycScalar z = CycScalar::root_of_unity(3, 1);
  CycScalar p = i * z;
  CHECK(p.order() == 12);
  CHECK(p == CycScalar::root_of_unity(12, 7));
  CHECK((CycScalar(mpq_class(1, 2)) + z).order() == 3);
}

TEST_CASE("q-numbers") {
  CycScalar z = CycScalar::root_of_unity(3, 1);
  CHECK(q_number(3, z).is_zero());
  CHECK(q_factorial(2, CycScalar(-1L)).is_zero());
  CHECK(q_binomial(2, 1, z) == CycScalar(1L) + z);
  CHECK(q_binomial(2, 1, z) == q_number(2, z));
  CHECK(q_binomial(5, 2, CycScalar(1L)) == CycScalar(10L));
  for (int n : {2, 3, 4, 6}) {
    CycScalar q = CycScalar::root_of_unity(n, 1);
    for (int k = 1; k < n; ++k) CHECK(q_binomial(n, k, q).is_zero());
  }
  // Pascal rule (n+1 choose k)_q = (n choose k-1)_q + q^k (n choose k)_q at a generic q.
  CycScalar q(mpq_class(3, 7));
  for (int n = 1; n < 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(q_binomial(n + 1, k, q) == q_binomial(n, k - 1, q) + q.pow(k) * q_binomial(n, k, q));
    }
  }
  CHECK_THROWS_AS(q_binomial(4, 2, CycScalar(-1L)), DivisionByZero);
}

TEST_CASE("to_string") {
  CHECK(CycScalar(mpq_class(-3, 4)).to_string() == "-3/4");
  CHECK_FALSE(CycScalar::root_of_unity(3, 1).to_string().empty());
}
