#include "doctest.h"
#include "hopflab/algebras.hpp"

using namespace hopflab;

TEST_CASE("group tables") {
  for (const char* name : {"S3", "S4", "C2", "C5", "C2xC2", "D4"}) {
    GroupTable g = group_by_name(name);
    CHECK_NOTHROW(g.validate());
  }
  GroupTable s3 = symmetric_group(3);
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(transpositions(s3).size() == 3);
  CHECK(dihedral_group(4).order == 8);
  CHECK_FALSE(dihedral_group(4).is_abelian());
  int t = s3.index_of("(12)");
  CHECK(sign(s3, t) == -1);
  CHECK(sign(s3, s3.index_of("(123)")) == 1);
  CHECK(s3.element_order(s3.index_of("(132)")) == 3);
}

TEST_CASE("group and function algebras satisfy the axioms") {
  for (const char* name : {"S3", "S4", "C2", "C3", "C4", "C2xC2", "D4"}) {
    GroupTable g = group_by_name(name);
    CAPTURE(name);
    HopfData kg = group_algebra(g);
    HopfData fg = function_algebra(g);
    CHECK(verify_hopf(kg).ok());
    CHECK(verify_hopf(fg).ok());
  }
}

TEST_CASE("fault injection is caught with a witness") {
  HopfData h = group_algebra(symmetric_group(3));
  h.mult[1 * 6 + 2] = SparseVec::unit(6, 0);
  Report r = verify_bialgebra(h);
  CHECK_FALSE(r.passed("associativity"));
  CHECK_FALSE(r.find("associativity")->witness.empty());
}

TEST_CASE("computed antipodes") {
  GroupTable s3 = symmetric_group(3);
  HopfData kg = group_algebra(s3);
  kg.antipode.reset();
  SparseMat s = compute_antipode(kg);
  for (int a = 0; a < 6; ++a) CHECK(s.col(a) == SparseVec::unit(6, s3.inverse(a)));
  HopfData fg = function_algebra(s3);
  fg.antipode.reset();
  SparseMat t = compute_antipode(fg);
  for (int a = 0; a < 6; ++a) CHECK(t.col(a) == SparseVec::unit(6, s3.inverse(a)));
  // epsilon o S = epsilon and S(1) = 1
  CHECK(s.apply(kg.unit) == kg.unit);
  for (int a = 0; a < 6; ++a) CHECK(counit_of(fg, t.col(a)) == fg.counit[a]);
}

TEST_CASE("duality") {
  GroupTable s3 = symmetric_group(3);
  HopfData kg = group_algebra(s3);
  HopfData fg = function_algebra(s3);
  HopfData d = dual_hopf(kg);
  std::string w;
  CHECK_MESSAGE(same_structure(d, fg, &w), w);
  CHECK(same_structure(dual_hopf(d), kg));
  CHECK(verify_hopf(d).ok());
  CHECK(*d.antipode == *fg.antipode);
  CHECK(is_cocommutative(kg));
  CHECK_FALSE(is_cocommutative(fg));
  CHECK(grouplikes_in_basis(kg).size() == 6);
  CHECK(grouplikes_in_basis(fg).empty());
}

TEST_CASE("convolution") {
  GroupTable c2 = cyclic_group(2);
  HopfData h = group_algebra(c2);
  TensorCoalgebra c(h, 1);
  TensorAlgebra a(h, 1);
  SparseMat id = SparseMat::identity(2);
  SparseMat ue = convolution_unit(c, a);
  CHECK(convolution_product(ue, id, c, a) == id);
  SparseMat sq = convolution_product(id, id, c, a);
  CHECK(sq.col(1) == h.unit);  // g^2 = 1
  HopfData ks3 = group_algebra(symmetric_group(3));
  TensorCoalgebra c3(ks3, 1);
  TensorAlgebra a3(ks3, 1);
  CHECK(convolution_product(SparseMat::identity(6), *ks3.antipode, c3, a3) ==
        convolution_unit(c3, a3));
  auto inv = convolution_inverse(SparseMat::identity(6), c3, a3);
  REQUIRE(inv);
  CHECK(*inv == *ks3.antipode);
  CHECK(*convolution_inverse(*inv, c3, a3) == SparseMat::identity(6));
  auto ui = convolution_inverse(convolution_unit(c3, a3), c3, a3);
  REQUIRE(ui);
  CHECK(*ui == convolution_unit(c3, a3));
  // functionals on H (x) H: epsilon (x) epsilon is its own inverse
  TensorCoalgebra c33(ks3, 2);
  FieldAlgebra k;
  SparseMat ee = convolution_unit(c33, k);
  CHECK(*convolution_inverse(ee, c33, k) == ee);
}

TEST_CASE("algebra_invert") {
  HopfData h = group_algebra(symmetric_group(3));
  TensorAlgebra a(h, 1);
  CHECK(*algebra_invert(h.unit, a) == h.unit);
  CHECK_FALSE(algebra_invert(SparseVec(6), a));
  // 1 + g is a zero divisor for g of order 2
  CHECK_FALSE(algebra_invert(h.unit + SparseVec::unit(6, h.index_of("(12)")), a));
  SparseVec x = h.unit + SparseVec::unit(6, h.index_of("(123)"), CycScalar(2L));
  auto y = algebra_invert(x, a);
  REQUIRE(y);
  CHECK(multiply(h, x, *y) == h.unit);
}

TEST_CASE("matched pair extensions") {
  GroupTable s3 = symmetric_group(3);
  for (auto [gen, dim] : {std::pair{"(12)", 12}, std::pair{"(123)", 18}}) {
    std::vector<int> emb;
    GroupTable f = generated_subgroup(s3, {s3.index_of(gen)}, &emb);
    HopfData h = matched_pair_extension(s3, f, conjugation_action(s3, emb));
    CHECK(h.dim == dim);
    CHECK(verify_hopf(h).ok());
    CHECK_FALSE(is_cocommutative(h));
  }
  GroupTable triv = cyclic_group(1);
  HopfData h = matched_pair_extension(s3, triv, [](int e, int) { return e; });
  CHECK(same_structure(h, function_algebra(s3)));
  // A non-automorphism action is rejected.
  GroupTable c2 = cyclic_group(2);
  CHECK_THROWS_AS(matched_pair_extension(s3, c2, [&](int e, int f) { return f ? s3.mul(e, s3.index_of("(12)")) : e; }),
                  std::invalid_argument);
}
