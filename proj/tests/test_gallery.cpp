#include "doctest.h"
#include "hopflab/cleft.hpp"
#include "hopflab/gallery.hpp"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

const FKSetup& fk3() {
  static const FKSetup s = fk_setup(3);
  return s;
}

const TwistData& j3() {
  static const TwistData t = twist_J_n(fk3());
  return t;
}

CycScalar c(long v) { return CycScalar(v); }

// character of C2 x C2 (element 2a + b) sending the generators to (-1)^sa, (-1)^sb
std::vector<CycScalar> klein_character(int sa, int sb) {
  std::vector<CycScalar> v(4);
  for (int x = 0; x < 4; ++x) v[x] = CycScalar(((x / 2) * sa + (x % 2) * sb) % 2 ? -1L : 1L);
  return v;
}

bool twist_roundtrip(const TwistData& t) {
  auto twisted = std::make_shared<HopfData>(apply_twist(t));
  return same_structure(apply_twist(inverse_twist(t, twisted)), *t.base);
}

bool cocycle_roundtrip(const CocycleData& s) {
  auto deformed = std::make_shared<HopfData>(apply_cocycle(s));
  return same_structure(apply_cocycle(inverse_cocycle(s, deformed)), *s.base);
}

// Statuses of the checks of a braided twist after swapping invariant and coinvariant.
bool swapped_statuses_agree(const Report& a, const Report& b) {
  for (const auto& check : a.checks()) {
    std::string other = check.name;
    if (other == "invariant") other = "coinvariant";
    else if (other == "coinvariant") other = "invariant";
    if (b.passed(other) != check.pass) return false;
  }
  return a.ok() == b.ok();
}

}  // namespace

TEST_CASE("QLS datum with all scalars zero gives 1 (x) 1") {
  QLSSetup s = qls_setup(quantum_plane_datum(c(0), c(0), c(0), c(0)));
  const Index d = s.nichols->alg.dim;
  CHECK(d == 4);
  CHECK(braided_J_D(s).element == SparseVec::unit(d * d, 0));
  CHECK(twist_J_D(s).element == one_tensor(*s.smash, 2));
}

TEST_CASE("rank one QLS reduces to the braided J_xi") {
  for (int N : {2, 3}) {
    CAPTURE(N);
    QuantumLineSetup line = quantum_line_setup(N, N);
    GroupTable cn = cyclic_group(N);
    QLSDatum d{make_realization(cn, {1}, {cyclic_character(N, line.q)}), {c(2)}, {}};
    QLSSetup s = qls_setup(d);
    CHECK(braided_J_D(s).element == braided_J_xi(line, c(2)).element);
    CHECK(twist_J_D(s).element == twist_J_xi(line, c(2)).element);
  }
}

TEST_CASE("quantum plane twists pass both verifiers") {
  for (bool klein : {false, true}) {
    for (auto [a12, a21] : std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {2, -3}}) {
      CAPTURE(klein);
      CAPTURE(a12);
      QLSSetup s = qls_setup(quantum_plane_datum(c(1), c(1), c(a12), c(a21), klein));
      BraidedTwistData bj = braided_J_D(s);
      Report rb = verify_braided_twist(bj);
      CHECK_MESSAGE(rb.ok(), rb.to_string());
      Report rt = verify_twist(twist_J_D(s));
      CHECK_MESSAGE(rt.ok(), rt.to_string());
      // coefficients of the degree-two part
      const Index d = s.nichols->alg.dim;
      const Index x1 = s.nichols->generators[0], x2 = s.nichols->generators[1];
      CHECK(bj.element.get(x1 * d + x1) == c(1));
      CHECK(bj.element.get(x1 * d + x2) == c(a12));
      CHECK(bj.element.get(x2 * d + x1) == c(a21));
    }
  }
}

TEST_CASE("QLS setup rejects braidings that are not quantum linear spaces") {
  // the Cartan A2 braiding at q = -1 has q12 q21 = -1
  DiagonalRealization a2 =
      make_realization(klein_four(), {2, 1}, {klein_character(1, 1), klein_character(0, 1)});
  CHECK_THROWS_AS(qls_setup(QLSDatum{a2, {c(0), c(0)}, {}}), std::invalid_argument);
}

TEST_CASE("linking term with chi_1 chi_2 != eps is not invariant") {
  QLSDatum d{make_realization(klein_four(), {2, 2}, {klein_character(1, 0), klein_character(1, 1)}),
             {c(0), c(0)},
             {}};
  d.as[{0, 1}] = c(1);
  Report r = verify_braided_twist(braided_J_D(qls_setup(d)));
  CHECK_FALSE(r.passed("invariant"));
  CHECK(r.passed("coinvariant"));
  CHECK(r.passed("twist-equation"));
}

TEST_CASE("QLS twist composed with an abelian twist of the base") {
  QLSSetup s = qls_setup(quantum_plane_datum(c(1), c(2), c(1), c(3), true));
  TwistData f = twist_klein_alpha();
  BraidedTwistData bj = braided_J_D(s);
  TwistData jf = twist_J_D(s, f);
  Report r = verify_twist(jf);
  CHECK_MESSAGE(r.ok(), r.to_string());
  TensorAlgebra sq(*s.smash, 2, false);
  SparseVec expect = sq.multiply(embed_base_tensor(*s.nichols, f.element), smash_tensor(*s.nichols, bj.element));
  CHECK(jf.element == expect);
  CHECK(twist_roundtrip(jf));
}

TEST_CASE("quantum plane: the dual cocycle does not deform and carries the datum") {
  const CycScalar xi1 = c(2), xi2 = c(5), a12 = c(3), a21 = c(7);
  QLSSetup s = qls_setup(quantum_plane_datum(xi1, xi2, a12, a21));
  auto dual = std::make_shared<HopfData>(dual_hopf(*s.smash));
  CocycleData sigma = cocycle_from_twist_dual(twist_J_D(s), dual);
  CHECK(verify_cocycle(sigma).ok());
  CHECK(same_structure(apply_cocycle(sigma), *dual));
  const Index d = dual->dim;
  const SparseVec y1 = qls_dual_generator(s, 0), y2 = qls_dual_generator(s, 1);
  CHECK(evaluate_form(sigma.values, d, y1, y2) == a12);
  CHECK(evaluate_form(sigma.values, d, y2, y1) == a21);
  CHECK(evaluate_form(sigma.values, d, y1, y1) == xi1);
  CHECK(evaluate_form(sigma.values, d, y2, y2) == xi2);
  CHECK(evaluate_form(sigma.inverse, d, y1, y2) == -a12);
}

TEST_CASE("FK3: J3, its braided form and sigma_GM") {
  const FKSetup& s = fk3();
  CHECK(s.smash->dim == 72);
  Report r = verify_twist(j3());
  CHECK_MESSAGE(r.ok(), r.to_string());
  BraidedTwistData bt = braided_J_n(s);
  CHECK(smash_tensor(*s.nichols, bt.element) == j3().element);
  auto dual = std::make_shared<HopfData>(dual_hopf(*s.smash));
  CocycleData gm = cocycle_GM(s, dual);
  Report rc = verify_cocycle(gm);
  CHECK_MESSAGE(rc.ok(), rc.to_string());
  CHECK(twist_from_cocycle_dual(gm, s.smash).element == j3().element);
  CHECK(cocycle_from_twist_dual(j3(), dual).values == gm.values);
  // sigma(1, 1) = 1 and sigma(x_eta, x_tau) = 1
  CHECK(evaluate_form(gm.values, 72, dual->unit, dual->unit) == c(1));
}

TEST_CASE("FK3: the braided J3 and its flip over the dual base") {
  const FKSetup& s = fk3();
  BraidedTwistData bt = braided_J_n(s);
  Report r = verify_braided_twist(bt);
  CHECK_FALSE(r.passed("invariant"));
  CHECK(r.passed("coinvariant"));
  CHECK(r.passed("twist-equation"));
  CHECK(r.passed("counit-normalization"));
  auto dual_base = std::make_shared<HopfData>(dual_hopf(*s.base));
  auto over = std::make_shared<BraidedHopf>(braided_over_dual(*s.nichols, dual_base));
  Report rf = verify_braided_twist(make_braided_twist(over, flip(bt.element, s.nichols->alg.dim)));
  CHECK(swapped_statuses_agree(r, rf));
}

TEST_CASE("FK3: characters of the twisted algebra form S3") {
  const FKSetup& s = fk3();
  HopfData o = apply_twist(j3());
  CHECK_FALSE(is_cocommutative(o));
  CharacterGroup cg = character_convolution_group(o);
  REQUIRE(cg.table.order == 6);
  CHECK_FALSE(cg.table.is_abelian());
  // chi_eta is evaluation at eta on k^{S3} and zero on the y's
  std::vector<int> point(6, -1);
  for (int a = 0; a < 6; ++a) {
    for (int w = 0; w < 6; ++w) {
      if (cg.characters[a].get(smash_index(*s.nichols, 0, w)).is_one()) point[a] = w;
    }
    REQUIRE(point[a] >= 0);
  }
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) CHECK(point[cg.table.mul(a, b)] == s.group.mul(point[a], point[b]));
  }
}

TEST_CASE("character groups of small Hopf algebras") {
  GroupTable s3 = symmetric_group(3);
  CharacterGroup f = character_convolution_group(function_algebra(s3));
  CHECK(f.table.order == 6);
  CHECK_FALSE(f.table.is_abelian());
  CHECK(character_convolution_group(group_algebra(cyclic_group(2))).table.order == 2);
  CHECK(character_convolution_group(group_algebra(s3)).table.order == 2);
  CHECK(character_convolution_group(group_algebra(klein_four())).table.order == 4);
}

TEST_CASE("matched-pair extensions of FK3") {
  FKExtension e1 = fk3_extension(1);
  CHECK(extend_J3_matched_pair(e1).element == j3().element);
  for (int m : {2, 3}) {
    CAPTURE(m);
    FKExtension e = fk3_extension(m);
    CHECK(e.smash->dim == 72 * m);
    Report r = verify_yd(e.nichols->yd);
    CHECK_MESSAGE(r.ok(), r.to_string());
    CHECK(e.nichols->alg.dim == 12);
  }
}

TEST_CASE("abelian twists on C2 x C2 and their lifts to S4") {
  TwistData k = twist_klein_alpha();
  CHECK(verify_twist(k).ok());
  CHECK(is_cocommutative(apply_twist(k)));
  CHECK(twist_roundtrip(k));

  TwistData normal = twist_s4_from_klein();
  CHECK(verify_twist(normal).ok());
  CHECK(is_cocommutative(apply_twist(normal)));

  GroupTable s4 = symmetric_group(4);
  const int a = s4.find_perm({1, 0, 2, 3}), b = s4.find_perm({0, 1, 3, 2});
  TwistData other = lift_twist(k, s4, {s4.identity, b, a, s4.mul(a, b)});
  CHECK(verify_twist(other).ok());
  CHECK_FALSE(is_cocommutative(apply_twist(other)));
  CHECK(twist_roundtrip(other));

  // trivial alpha gives 1 (x) 1
  GroupTable k4 = klein_four();
  std::vector<std::vector<CycScalar>> chars(4, std::vector<CycScalar>(4)), ones(4, std::vector<CycScalar>(4, c(1)));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) chars[x][y] = c(((x / 2) * (y / 2) + (x % 2) * (y % 2)) % 2 ? -1 : 1);
  }
  CHECK(twist_abelian(k4, chars, ones).element == one_tensor(*k.base, 2));
  // a non-cocycle is rejected
  std::vector<std::vector<CycScalar>> bad = ones;
  bad[1][1] = c(-1);
  bad[1][2] = c(-1);
  CHECK_THROWS_AS(twist_abelian(k4, chars, bad), std::invalid_argument);
}

TEST_CASE("twist and cocycle roundtrips on the quantum line and the cleft cocycle") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
    CAPTURE(N);
    QuantumLineSetup s = quantum_line_setup(N, n);
    CHECK(twist_roundtrip(twist_J_xi(s, c(1))));
    CHECK(cocycle_roundtrip(cocycle_sigma_xi(s, c(2))));
    CHECK(cocycle_roundtrip(dual_cocycle_sigma_xi(s, c(1))));
  }
  CHECK(twist_roundtrip(twist_J_D(qls_setup(quantum_plane_datum(c(1), c(1), c(1), c(0))))));
  CleftData cl = cleft_A2({c(2), c(3), c(5)}, a2_module());
  CHECK(cocycle_roundtrip(cocycle_from_section(cl)));
}
