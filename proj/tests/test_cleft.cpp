#include "doctest.h"
#include "hopflab/bosonize.hpp"
#include "hopflab/cleft.hpp"
#include "hopflab/gallery.hpp"

using namespace hopflab;

namespace {

std::array<CycScalar, 3> lam(long a, long b, long c) { return {CycScalar(a), CycScalar(b), CycScalar(c)}; }

SparseVec at(const HopfData& h, const std::string& label) { return SparseVec::unit(h.dim, h.index_of(label)); }

}  // namespace

TEST_CASE("cleft_A2 with lambda = 0 is A itself") {
  CleftData c = cleft_A2(lam(0, 0, 0), a2_module());
  const HopfData& a = *c.base;
  REQUIRE(a.dim == 32);
  CHECK(c.section == SparseMat::identity(32));
  CHECK(c.algebra.mult == a.mult);
  CHECK(verify_cleft(c).ok());
  CocycleData s = cocycle_from_section(c);
  CHECK(s.values == trivial_cocycle(c.base).values);
}

TEST_CASE("cleft_A2 with generic lambda") {
  const auto l = lam(2, 3, 5);
  CleftData c = cleft_A2(l, a2_module());
  const HopfData& a = *c.base;
  const HopfData& e = c.algebra;
  Report rep = verify_cleft(c);
  CHECK_MESSAGE(rep.ok(), rep.to_string());

  // relations of E(lambda)
  const SparseVec y1 = at(e, "y1"), y2 = at(e, "y2"), y12 = at(e, "y12");
  CHECK(multiply(e, y1, y1) == CycScalar(2L) * e.unit);
  CHECK(multiply(e, y2, y2) == CycScalar(3L) * e.unit);
  CHECK(multiply(e, y12, y12) == CycScalar(5L) * e.unit);
  CHECK(multiply(e, y1, y2) - multiply(e, y2, y1) == y12);
  // rho(y1^2) = l1 (1 (x) 1)
  CHECK(cleft_coact(c, multiply(e, y1, y1)) == CycScalar(2L) * tensor(e.unit, a.unit));

  // gamma is the PBW map in low degree
  CHECK(c.section.col(a.index_of("x1")) == y1);
  CHECK(c.section.col(a.index_of("x12")) == y12);
  CHECK(c.section.col(a.index_of("x2x1")) == at(e, "y2y1"));
  // from degree three the PBW map needs a lower-order term to stay colinear
  CHECK(c.section.col(a.index_of("x12x1")) == at(e, "y12y1") + CycScalar(4L) * y2);

  // gamma^-1(x_i) = y_i g_i^-1, gamma^-1(x12) = -(y12 + 2 y2 y1) g12^-1 (all g have order 2 here)
  const Index dh = c.nichols->yd.base->dim;
  auto with_g = [&](const std::string& lab, Index g) {
    return SparseVec::unit(e.dim, smash_index(*c.nichols, e.index_of(lab) / dh, g));
  };
  CHECK(c.section_inverse.col(a.index_of("x1")) == with_g("y1", 2));
  CHECK(c.section_inverse.col(a.index_of("x2")) == with_g("y2", 1));
  CHECK(c.section_inverse.col(a.index_of("x12")) == -(with_g("y12", 3) + CycScalar(2L) * with_g("y2y1", 3)));

  CocycleData s = cocycle_from_section(c);
  Report sr = verify_cocycle(s);
  CHECK_MESSAGE(sr.ok(), sr.to_string());
  const Index x1 = a.index_of("x1"), x2 = a.index_of("x2"), x12 = a.index_of("x12");
  CHECK(cocycle_value(s, x1, x1) == l[0]);
  CHECK(cocycle_value(s, x2, x2) == l[1]);
  CHECK(cocycle_value(s, x1, x2).is_zero());
  CHECK(cocycle_value(s, x2, x1).is_zero());
  CHECK(cocycle_value(s, x12, x12) == l[2]);

  // gamma is an algebra isomorphism from the sigma-twisted product x . y = sigma(x1, y1) x2 y2
  bool iso = true;
  for (Index x = 0; x < a.dim && iso; ++x) {
    for (Index y = 0; y < a.dim && iso; ++y) {
      SparseVec prod(a.dim);
      for (const auto& [u, cu] : a.comult[x]) {
        for (const auto& [v, cv] : a.comult[y]) {
          const CycScalar sv = cocycle_value(s, u / a.dim, v / a.dim);
          if (sv.is_zero()) continue;
          prod.axpy(cu * cv * sv, a.product(u % a.dim, v % a.dim));
        }
      }
      iso = c.section.apply(prod) == multiply(e, c.section.col(x), c.section.col(y));
    }
  }
  CHECK(iso);

  // restriction to R and bosonization back are inverse
  SparseVec sr_values = restrict_cocycle(s, *c.nichols);
  BraidedCocycleData br = make_braided_cocycle(c.nichols, sr_values);
  Report brep = verify_braided_cocycle(br);
  CHECK_MESSAGE(brep.ok(), brep.to_string());
  CHECK(is_base_balanced(s, *c.nichols));
  CHECK(bosonize_cocycle(br, c.base).values == s.values);
  // sigma_R(x_i, x_j) = delta_ij l_i
  const Index d = c.nichols->alg.dim;
  CHECK(sr_values.get(1 * d + 1) == l[0]);
  CHECK(sr_values.get(4 * d + 4) == l[1]);
  CHECK(sr_values.get(1 * d + 4).is_zero());

  // deformed product x_i ._sigma x_i = l_i (1 - g_i^2), which vanishes over C2 x C2
  HopfData def = apply_cocycle(s);
  CHECK(verify_hopf(def).ok());
  CHECK(multiply(def, at(def, "x1"), at(def, "x1")).is_zero());
  CocycleData back = inverse_cocycle(s, std::make_shared<HopfData>(def));
  CHECK(same_structure(apply_cocycle(back), a));
}

TEST_CASE("cleft_A2 rejects non-A2 braidings") {
  const auto& v = quantum_line_setup(2, 2);
  CHECK_THROWS_AS(cleft_A2(lam(1, 1, 1), v.nichols->yd), std::invalid_argument);
}
