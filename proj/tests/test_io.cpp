#include "doctest.h"
#include "hopflab/gallery.hpp"
#include "hopflab/io.hpp"

using namespace hopflab;

namespace {

HopfFile reload(const HopfFile& f) { return file_from_json(Json::parse(file_to_json(f).dump()), true); }

}  // namespace

TEST_CASE("scalars survive JSON in canonical form") {
  const CycScalar z = CycScalar::root_of_unity(12, 5);
  for (const CycScalar& s : {CycScalar(), CycScalar(7L), CycScalar(mpq_class(-3, 4)), z, z * z + CycScalar(1L)}) {
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
  CHECK(scalar_to_json(CycScalar(mpq_class(2, 4)))["coeffs"][0] == "1/2");
  CHECK(scalar_from_json(Json(3)) == CycScalar(3L));
  CHECK(scalar_from_json(Json("-5/10")) == CycScalar(mpq_class(-1, 2)));
}

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("2/3") == CycScalar(mpq_class(2, 3)));
  CHECK(parse_scalar("zeta3") == CycScalar::root_of_unity(3, 1));
  CHECK(parse_scalar("zeta8^3") == CycScalar::root_of_unity(8, 3));
  CHECK(parse_scalar("-zeta4") == -CycScalar::root_of_unity(4, 1));
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("x"), InputError);
}

TEST_CASE("files with every block type roundtrip exactly") {
  QuantumLineSetup s = quantum_line_setup(3, 3);
  HopfFile f;
  f.hopf = s.smash;
  f.blocks["J"] = twist_block(twist_J_xi(s, CycScalar(1L)));
  f.blocks["braided-J"] = braided_twist_block(braided_J_xi(s, CycScalar(1L)));
  f.blocks["sigma"] = cocycle_block(cocycle_sigma_xi(s, CycScalar(2L)));
  f.blocks["sigma-R"] = braided_cocycle_block(
      make_braided_cocycle(s.nichols, restrict_cocycle(cocycle_sigma_xi(s, CycScalar(2L)), *s.nichols)));
  f.blocks["V"] = yd_block(s.nichols->yd, true);
  HopfFile g = reload(f);
  CHECK(same_structure(*g.hopf, *f.hopf));
  CHECK(g.hopf->labels == f.hopf->labels);
  CHECK(g.hopf->grading == f.hopf->grading);
  CHECK(g.hopf->generators.size() == f.hopf->generators.size());
  REQUIRE(g.blocks.size() == 5);
  CHECK(g.blocks.at("J").element == f.blocks.at("J").element);
  CHECK(*g.blocks.at("J").inverse == *f.blocks.at("J").inverse);
  CHECK(g.blocks.at("sigma").element == f.blocks.at("sigma").element);
  const BraidedHopf& r = *g.blocks.at("braided-J").braided;
  CHECK(same_structure(r.alg, s.nichols->alg));
  CHECK(r.generators == s.nichols->generators);
  CHECK(r.yd.action == s.nichols->yd.action);
  CHECK(r.yd.coaction == s.nichols->yd.coaction);
  CHECK(verify_braided_twist(braided_twist_of(g.blocks.at("braided-J"))).ok());
  CHECK(verify_twist(twist_of(g, find_block(g, "twist", ""))).ok());
  CHECK(verify_yd(*g.blocks.at("V").yd).ok());
  // saving twice gives identical text
  CHECK(file_to_json(g).dump() == file_to_json(f).dump());
}

TEST_CASE("malformed files are input errors") {
  HopfFile f;
  f.hopf = std::make_shared<HopfData>(group_algebra(cyclic_group(2)));
  Json good = file_to_json(f);
  CHECK_NOTHROW(file_from_json(good, true));

  Json missing = good;
  missing.erase("mult");
  CHECK_THROWS_AS(file_from_json(missing, true), InputError);

  Json range = good;
  range["mult"][0][0] = 9;
  CHECK_THROWS_AS(file_from_json(range, true), InputError);

  Json version = good;
  version["format_version"] = "2";
  CHECK_THROWS_AS(file_from_json(version, true), InputError);

  Json block = good;
  block["blocks"]["x"] = Json{{"type", "mystery"}};
  CHECK_THROWS_AS(file_from_json(block, true), InputError);

  CHECK_THROWS_AS(find_block(f, "twist", ""), InputError);
}

TEST_CASE("strict loading rejects a broken bialgebra, lax loading warns") {
  HopfFile f;
  f.hopf = std::make_shared<HopfData>(group_algebra(cyclic_group(3)));
  Json j = file_to_json(f);
  // g * g = 1 instead of g^2
  j["mult"][4] = Json{1, 1, 0, scalar_to_json(CycScalar(1L))};
  CHECK_THROWS_AS(file_from_json(j, true), InputError);
  std::vector<std::string> warnings;
  CHECK_NOTHROW(file_from_json(j, false, &warnings));
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("a corrupted twist block loads and fails verification") {
  QuantumLineSetup s = quantum_line_setup(2, 2);
  HopfFile f;
  f.hopf = s.smash;
  FileBlock b = twist_block(twist_J_xi(s, CycScalar(1L)));
  b.element.add(0, CycScalar(1L));  // 2 (1 (x) 1) + ...
  b.inverse.reset();
  f.blocks["J"] = b;
  HopfFile g = reload(f);
  Report r = verify_twist(twist_of(g, g.blocks.at("J")));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("counit-normalization"));
}
