#include <map>

#include "doctest.h"
#include "hopflab/bosonize.hpp"
#include "hopflab/gallery.hpp"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

SparseVec basis_tensor(Index d, Index a, Index b) { return SparseVec::unit(d * d, a * d + b); }

const QuantumLineSetup& line(int N, int n) {
  static std::map<std::pair<int, int>, QuantumLineSetup> cache;
  auto it = cache.find({N, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(N, n), quantum_line_setup(N, n)).first;
  return it->second;
}

}  // namespace

TEST_CASE("trivial twist and cocycle leave H unchanged") {
  const auto& s = line(2, 2);
  TwistData t = trivial_twist(s.smash);
  CHECK(verify_twist(t).ok());
  CHECK(same_structure(apply_twist(t), *s.smash));
  CocycleData c = trivial_cocycle(s.smash);
  CHECK(verify_cocycle(c).ok());
  CHECK(same_structure(apply_cocycle(c), *s.smash));
  // eps (x) eps transposes to 1 (x) 1
  TwistData td = twist_from_cocycle_dual(c, s.dual);
  CHECK(td.element == one_tensor(*s.dual, 2));
}

TEST_CASE("Sweedler twist 1(x)1 + xg(x)x") {
  const auto& s = line(2, 2);
  const Index d = s.smash->dim;  // x^k g^t at 2k + t
  TwistData t = twist_J_xi(s, CycScalar(1L));
  SparseVec expect = one_tensor(*s.smash, 2) + basis_tensor(d, 3, 2);
  CHECK(t.element == expect);
  // inverse by Neumann series: 1(x)1 - xg(x)x
  CHECK(t.inverse == one_tensor(*s.smash, 2) - basis_tensor(d, 3, 2));
  Report r = verify_twist(t);
  CHECK_MESSAGE(r.ok(), r.to_string());
  HopfData tw = apply_twist(t);
  CHECK(verify_hopf(tw).ok());
  TwistData back = inverse_twist(t, std::make_shared<HopfData>(tw));
  CHECK(verify_twist(back).ok());
  CHECK(same_structure(apply_twist(back), *s.smash));
}

TEST_CASE("fault injection: xg(x)xg is not a twist") {
  const auto& s = line(2, 2);
  const Index d = s.smash->dim;
  TwistData t = make_twist(s.smash, one_tensor(*s.smash, 2) + basis_tensor(d, 3, 3));
  Report r = verify_twist(t);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("twist-equation"));
  CHECK(r.passed("counit-normalization"));
  CHECK(r.passed("invertible"));
}

TEST_CASE("J_xi passes exactly when g^N = 1") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}, {3, 6}}) {
    CAPTURE(N);
    CAPTURE(n);
    const auto& s = line(N, n);
    Report r = verify_twist(twist_J_xi(s, CycScalar(1L)));
    CHECK(r.ok() == (N == n));
    if (N != n) CHECK_FALSE(r.passed("twist-equation"));
    BraidedTwistData bt = braided_J_xi(s, CycScalar(1L));
    Report br = verify_braided_twist(bt);
    CHECK(br.ok() == (N == n));
    // J_xi = braided J_xi # 1 for every (N, n)
    CHECK(smash_tensor(*s.nichols, bt.element) == twist_J_xi(s, CycScalar(1L)).element);
  }
}

TEST_CASE("J_xi coefficients for N = 3") {
  const auto& s = line(3, 3);
  const Index d = s.smash->dim;
  const CycScalar z = CycScalar::root_of_unity(3, 1);
  TwistData t = twist_J_xi(s, CycScalar(1L));
  // k = 1: x g^2 (x) x^2 with 1 / ((2)_q! (1)_q!) = 1 / (1 + z)
  CHECK(t.element.get((1 * 3 + 2) * d + 2 * 3) == (CycScalar(1L) + z).inverse());
  CHECK(t.element.get((2 * 3 + 1) * d + 1 * 3) == (CycScalar(1L) + z).inverse());
  CHECK(twist_J_xi(s, CycScalar()).element == one_tensor(*s.smash, 2));
}

TEST_CASE("sigma_xi on the line deforms x^N = 0 into x^N = xi(1 - g^N)") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {3, 6}}) {
    CAPTURE(N);
    CAPTURE(n);
    const auto& s = line(N, n);
    const CycScalar xi(2L);
    CocycleData c = cocycle_sigma_xi(s, xi);
    Report r = verify_cocycle(c);
    REQUIRE_MESSAGE(r.ok(), r.to_string());
    HopfData def = apply_cocycle(c);
    CHECK(verify_hopf(def).ok());
    SparseVec x = SparseVec::unit(def.dim, n), g = SparseVec::unit(def.dim, 1);
    SparseVec xp = def.unit, gp = def.unit;
    for (int i = 0; i < N; ++i) {
      xp = multiply(def, xp, x);
      gp = multiply(def, gp, g);
    }
    CHECK(xp == xi * (def.unit - gp));
    // group-likes still multiply as before
    CHECK(gp == SparseVec::unit(def.dim, N % n));
    CocycleData back = inverse_cocycle(c, std::make_shared<HopfData>(def));
    CHECK(same_structure(apply_cocycle(back), *s.smash));
  }
}

TEST_CASE("restricted sigma_xi: colinearity is the only failure when g^N != 1") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}}) {
    CAPTURE(N);
    CAPTURE(n);
    const auto& s = line(N, n);
    CocycleData c = cocycle_sigma_xi(s, CycScalar(1L));
    CHECK(is_base_balanced(c, *s.nichols));
    BraidedCocycleData sr = make_braided_cocycle(s.nichols, restrict_cocycle(c, *s.nichols));
    Report r = verify_braided_cocycle(sr);
    CHECK(r.passed("colinear") == (N == n));
    for (const char* name : {"invariant", "invertible", "normalization", "cocycle-identity"}) {
      CHECK_MESSAGE(r.passed(name), name);
    }
    // bosonizing the restriction gives sigma_xi back (colinearity not needed)
    CHECK(bosonize_cocycle(sr, s.smash).values == c.values);
  }
}

TEST_CASE("dual sigma_xi transposes to J_xi") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
    CAPTURE(N);
    const auto& s = line(N, n);
    CocycleData c = dual_cocycle_sigma_xi(s, CycScalar(1L));
    CHECK(verify_cocycle(c).ok());
    TwistData j = twist_from_cocycle_dual(c, s.smash);
    CHECK(j.element == twist_J_xi(s, CycScalar(1L)).element);
    CocycleData again = cocycle_from_twist_dual(j, s.dual);
    CHECK(again.values == c.values);
    HopfData def = apply_cocycle(c);
    CHECK(verify_hopf(def).ok());
    // y^N stays 0, matching xi (1 - h^N) = 0 since h^N = 1
    SparseVec y = dual_monomial(s, 1, 0), yp = def.unit;
    for (int i = 0; i < N; ++i) yp = multiply(def, yp, y);
    CHECK(yp.is_zero());
  }
}

TEST_CASE("twist and cocycle transposes are mutually inverse") {
  const auto& s = line(2, 2);
  TwistData j = twist_J_xi(s, CycScalar(3L));
  CocycleData c = cocycle_from_twist_dual(j, s.dual);
  CHECK(verify_cocycle(c).ok());
  CHECK(twist_from_cocycle_dual(c, s.smash).element == j.element);
  CHECK(same_structure(dual_hopf(*s.dual), *s.smash));
}

TEST_CASE("bosonized braided twist matches the twisted bosonization") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
    CAPTURE(N);
    const auto& s = line(N, n);
    BraidedTwistData bt = braided_J_xi(s, CycScalar(1L));
    TwistData t = bosonize_twist(bt, s.smash);
    CHECK(t.element == twist_J_xi(s, CycScalar(1L)).element);
    CHECK(verify_twist(t).ok());
    BraidedHopf rj = apply_braided_twist(bt);
    HopfData left = bosonize(rj);
    HopfData right = apply_twist(t);
    std::string w;
    CHECK_MESSAGE(same_structure(left, right, &w), w);
    // Delta^J restricted to the copy of H is unchanged
    for (Index h = 0; h < s.group->dim; ++h) {
      const SparseVec e = SparseVec::unit(right.dim, smash_index(*s.nichols, 0, h));
      CHECK(comultiply(right, e) == comultiply(*s.smash, e));
    }
  }
}

TEST_CASE("braided twist with an F on the base") {
  const auto& s = line(2, 2);
  BraidedTwistData bt = braided_J_xi(s, CycScalar(1L));
  TwistData f = trivial_twist(s.group);
  TwistData t = bosonize_twist(bt, s.smash, f);
  CHECK(t.element == bosonize_twist(bt, s.smash).element);
}

TEST_CASE("flipped braided twist is a braided twist over the dual base") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
    CAPTURE(N);
    const auto& s = line(N, n);
    BraidedTwistData bt = braided_J_xi(s, CycScalar(1L));
    auto dual_base = std::make_shared<HopfData>(dual_hopf(*s.group));
    auto over = std::make_shared<BraidedHopf>(braided_over_dual(*s.nichols, dual_base));
    const Index d = s.nichols->alg.dim;
    BraidedTwistData flipped = make_braided_twist(over, flip(bt.element, d));
    Report r = verify_braided_twist(flipped);
    CHECK_MESSAGE(r.ok(), r.to_string());
  }
}

TEST_CASE("twist from sigma on the dual") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}}) {
    CAPTURE(N);
    CAPTURE(n);
    const auto& s = line(N, n);
    CocycleData c = cocycle_sigma_xi(s, CycScalar(1L));
    auto dual_base = std::make_shared<HopfData>(dual_hopf(*s.group));
    auto dual_r = std::make_shared<BraidedHopf>(braided_dual(*s.nichols, dual_base));
    TwistFromSigma out = twist_from_sigma(c, *s.nichols, dual_r, s.dual);
    for (const char* name : {"coinvariant", "twist-equation", "counit-normalization"}) {
      CHECK_MESSAGE(out.report.passed(name), name);
    }
    CHECK(out.report.passed("trivial-action") == (N == n));
    CHECK(verify_twist(out.twist).ok());
  }
}

TEST_CASE("trivial braided data") {
  const auto& s = line(3, 3);
  const Index d = s.nichols->alg.dim;
  BraidedTwistData bt = make_braided_twist(s.nichols, SparseVec::unit(d * d, 0));
  CHECK(verify_braided_twist(bt).ok());
  CHECK(bosonize_twist(bt, s.smash).element == one_tensor(*s.smash, 2));
  BraidedCocycleData bc = make_braided_cocycle(s.nichols, SparseVec::unit(d * d, 0));
  CHECK(verify_braided_cocycle(bc).ok());
  CHECK(bosonize_cocycle(bc, s.smash).values == trivial_cocycle(s.smash).values);
}
