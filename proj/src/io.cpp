#include "hopflab/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

namespace hopflab {

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::GroupLikeFamily: return "group-like";
    case GeneratorKind::IdempotentFamily: return "idempotent";
    case GeneratorKind::Nilpotent: return "nilpotent";
  }
  return "";
}

GeneratorKind kind_from(const std::string& s) {
  if (s == "group-like") return GeneratorKind::GroupLikeFamily;
  if (s == "idempotent") return GeneratorKind::IdempotentFamily;
  if (s == "nilpotent") return GeneratorKind::Nilpotent;
  throw InputError("unknown generator kind '" + s + "'");
}

Index as_index(const Json& j, Index bound, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": index must be an integer");
  const Index i = j.get<Index>();
  if (i < 0 || i >= bound) throw InputError(std::string(what) + ": index " + std::to_string(i) + " out of range");
  return i;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

// Sparse vector as [[i, scalar], ...] with the flat index split into
// `arity` coordinates over `base`.
Json vec_to_json(const SparseVec& v, Index base, int arity) {
  Json out = Json::array();
  for (const auto& [i, c] : v.entries()) {
    Json row = Json::array();
    std::vector<Index> coords(arity);
    Index rest = i;
    for (int k = arity - 1; k >= 0; --k) {
      coords[k] = rest % base;
      rest /= base;
    }
    for (Index x : coords) row.push_back(x);
    row.push_back(scalar_to_json(c));
    out.push_back(std::move(row));
  }
  return out;
}

SparseVec vec_from_json(const Json& j, Index base, int arity, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a coordinate list");
  Index dim = 1;
  for (int k = 0; k < arity; ++k) dim *= base;
  SparseVec v(dim);
  for (const Json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != arity + 1) {
      throw InputError(std::string(what) + ": malformed coordinate entry");
    }
    Index i = 0;
    for (int k = 0; k < arity; ++k) i = i * base + as_index(row[k], base, what);
    v.add(i, scalar_from_json(row[arity]));
  }
  return v;
}

// A family of vectors [first * ... ] flattened as leading coordinates.
Json family_to_json(const std::vector<SparseVec>& fam, Index lead_base, int lead_arity, Index base, int arity) {
  Json out = Json::array();
  for (std::size_t f = 0; f < fam.size(); ++f) {
    std::vector<Index> lead(lead_arity);
    Index rest = static_cast<Index>(f);
    for (int k = lead_arity - 1; k >= 0; --k) {
      lead[k] = rest % lead_base;
      rest /= lead_base;
    }
    for (Json row : vec_to_json(fam[f], base, arity)) {
      Json full = Json::array();
      for (Index x : lead) full.push_back(x);
      for (auto& x : row) full.push_back(std::move(x));
      out.push_back(std::move(full));
    }
  }
  return out;
}

std::vector<SparseVec> family_from_json(const Json& j, Index lead_base, int lead_arity, Index base, int arity,
                                        const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a coordinate list");
  Index count = 1, dim = 1;
  for (int k = 0; k < lead_arity; ++k) count *= lead_base;
  for (int k = 0; k < arity; ++k) dim *= base;
  std::vector<SparseVec> fam(count, SparseVec(dim));
  for (const Json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != lead_arity + arity + 1) {
      throw InputError(std::string(what) + ": malformed coordinate entry");
    }
    Index f = 0, i = 0;
    for (int k = 0; k < lead_arity; ++k) f = f * lead_base + as_index(row[k], lead_base, what);
    for (int k = 0; k < arity; ++k) i = i * base + as_index(row[lead_arity + k], base, what);
    fam[f].add(i, scalar_from_json(row[lead_arity + arity]));
  }
  return fam;
}

// action rows [h, v, w, c]: e_h . v_v has coefficient c on v_w;
// coaction rows [v, h, w, c]: delta(v_v) has coefficient c on e_h (x) v_w.
Json yd_to_json(const YDModuleData& m) {
  const Index hd = m.base->dim, d = m.dim;
  Json act = Json::array(), coact = Json::array();
  for (Index h = 0; h < hd; ++h) {
    for (Index v = 0; v < d; ++v) {
      for (const auto& [w, c] : m.act_basis(h, v).entries()) act.push_back(Json{h, v, w, scalar_to_json(c)});
    }
  }
  for (Index v = 0; v < d; ++v) {
    for (const auto& [i, c] : m.coaction[v].entries()) coact.push_back(Json{v, i / d, i % d, scalar_to_json(c)});
  }
  return Json{{"dim", d}, {"labels", m.labels}, {"action", act}, {"coaction", coact}};
}

}  // namespace

Json scalar_to_json(const CycScalar& c) {
  Json coeffs = Json::array();
  for (const mpq_class& q : c.coeffs()) coeffs.push_back(q.get_str());
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

CycScalar scalar_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return CycScalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    const int order = field(j, "order").get<int>();
    if (order < 1) throw InputError("scalar order must be positive");
    std::vector<mpq_class> coeffs;
    for (const Json& x : field(j, "coeffs")) {
      mpq_class q(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
      if (q.get_den() == 0) throw InputError("zero denominator");
      q.canonicalize();
      coeffs.push_back(q);
    }
    return CycScalar::from_powers(order, coeffs);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad scalar: ") + e.what());
  }
}

CycScalar parse_scalar(const std::string& text) {
  static const std::regex root(R"((-?)zeta(\d+)(?:\^(-?\d+))?)");
  std::smatch m;
  if (std::regex_match(text, m, root)) {
    const long k = m[3].matched ? std::stol(m[3]) : 1;
    CycScalar z = CycScalar::root_of_unity(std::stoi(m[2]), k);
    return m[1].length() ? -z : z;
  }
  static const std::regex rational(R"(-?\d+(/\d+)?)");
  if (!std::regex_match(text, rational)) throw InputError("cannot parse scalar '" + text + "'");
  mpq_class q(text);
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return CycScalar(q);
}

Json hopf_to_json(const HopfData& h) {
  const Index d = h.dim;
  Json j{{"format_version", "1"}, {"scalar_order", h.scalar_order}, {"dim", d}, {"labels", h.labels}};
  j["mult"] = family_to_json(h.mult, d, 2, d, 1);
  j["comult"] = family_to_json(h.comult, d, 1, d, 2);
  j["unit"] = vec_to_json(h.unit, d, 1);
  SparseVec counit(d);
  for (Index i = 0; i < d; ++i) counit.set(i, h.counit[i]);
  j["counit"] = vec_to_json(counit, d, 1);
  if (h.antipode) j["antipode"] = family_to_json(h.antipode->columns(), d, 1, d, 1);
  if (h.grading) j["grading"] = *h.grading;
  Json gens = Json::array();
  for (const GeneratorSet& g : h.generators) gens.push_back(Json{{"kind", kind_name(g.kind)}, {"indices", g.indices}});
  j["distinguished_generators"] = gens;
  return j;
}

HopfData hopf_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("format_version") && j["format_version"] != "1") throw InputError("unsupported format_version");
  try {
    const Index d = field(j, "dim").get<Index>();
    if (d < 1) throw InputError("dim must be positive");
    HopfData h = empty_hopf(d);
    h.scalar_order = j.value("scalar_order", 1);
    if (j.contains("labels")) {
      h.labels = j["labels"].get<std::vector<std::string>>();
      if (static_cast<Index>(h.labels.size()) != d) throw InputError("labels: wrong count");
    }
    h.mult = family_from_json(field(j, "mult"), d, 2, d, 1, "mult");
    h.comult = family_from_json(field(j, "comult"), d, 1, d, 2, "comult");
    h.unit = vec_from_json(field(j, "unit"), d, 1, "unit");
    SparseVec counit = vec_from_json(field(j, "counit"), d, 1, "counit");
    h.counit.assign(d, CycScalar());
    for (const auto& [i, c] : counit.entries()) h.counit[i] = c;
    if (j.contains("antipode")) {
      h.antipode = SparseMat::from_columns(d, family_from_json(j["antipode"], d, 1, d, 1, "antipode"));
    }
    if (j.contains("grading")) {
      h.grading = j["grading"].get<std::vector<int>>();
      if (static_cast<Index>(h.grading->size()) != d) throw InputError("grading: wrong count");
    }
    if (j.contains("distinguished_generators")) {
      for (const Json& g : j["distinguished_generators"]) {
        GeneratorSet set{{}, kind_from(field(g, "kind").get<std::string>())};
        for (const Json& i : field(g, "indices")) set.indices.push_back(as_index(i, d, "generators"));
        h.generators.push_back(std::move(set));
      }
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed Hopf data: ") + e.what());
  }
}

namespace {

YDModuleData yd_from_json(const Json& j, HopfPtr base) {
  try {
    const Index d = field(j, "dim").get<Index>();
    if (d < 0) throw InputError("yd dim must be non-negative");
    YDModuleData m = empty_yd(base, d);
    if (j.contains("labels")) m.labels = j["labels"].get<std::vector<std::string>>();
    const Index hd = base->dim;
    for (const Json& row : field(j, "action")) {
      if (!row.is_array() || row.size() != 4) throw InputError("action: malformed entry");
      const Index h = as_index(row[0], hd, "action"), v = as_index(row[1], d, "action");
      m.action[h * d + v].add(as_index(row[2], d, "action"), scalar_from_json(row[3]));
    }
    for (const Json& row : field(j, "coaction")) {
      if (!row.is_array() || row.size() != 4) throw InputError("coaction: malformed entry");
      const Index v = as_index(row[0], d, "coaction"), h = as_index(row[1], hd, "coaction");
      m.coaction[v].add(h * d + as_index(row[2], d, "coaction"), scalar_from_json(row[3]));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed yd block: ") + e.what());
  }
}

}  // namespace

Json braided_to_json(const BraidedHopf& r) {
  Json j{{"algebra", hopf_to_json(r.alg)}, {"base", hopf_to_json(*r.yd.base)}, {"yd", yd_to_json(r.yd)}};
  j["generators"] = r.generators;
  j["words"] = r.words;
  j["graded_dims"] = r.graded_dims;
  j["truncated"] = r.truncated;
  return j;
}

BraidedHopf braided_from_json(const Json& j) {
  BraidedHopf r;
  r.alg = hopf_from_json(field(j, "algebra"));
  auto base = std::make_shared<HopfData>(hopf_from_json(field(j, "base")));
  r.yd = yd_from_json(field(j, "yd"), base);
  if (r.yd.dim != r.alg.dim) throw InputError("braided: yd and algebra dimensions differ");
  try {
    if (j.contains("generators")) r.generators = j["generators"].get<std::vector<Index>>();
    if (j.contains("words")) r.words = j["words"].get<std::vector<std::vector<int>>>();
    if (j.contains("graded_dims")) r.graded_dims = j["graded_dims"].get<std::vector<Index>>();
    r.truncated = j.value("truncated", false);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed braided block: ") + e.what());
  }
  for (Index g : r.generators) as_index(Json(g), r.alg.dim, "braided generators");
  return r;
}

Json file_to_json(const HopfFile& f) {
  Json j = hopf_to_json(*f.hopf);
  Json blocks = Json::object();
  for (const auto& [name, b] : f.blocks) {
    Json x{{"type", b.type}};
    if (b.type == "yd") {
      x["module"] = yd_to_json(*b.yd);
      if (b.yd->base != f.hopf) x["base"] = hopf_to_json(*b.yd->base);
    } else {
      Index d = f.hopf->dim;
      if (b.braided) {
        x["braided"] = braided_to_json(*b.braided);
        d = b.braided->alg.dim;
      }
      x["element"] = vec_to_json(b.element, d, 2);
      if (b.inverse) x["inverse"] = vec_to_json(*b.inverse, d, 2);
    }
    blocks[name] = std::move(x);
  }
  j["blocks"] = blocks;
  return j;
}

HopfFile file_from_json(const Json& j, bool strict, std::vector<std::string>* warnings) {
  HopfFile f;
  auto h = std::make_shared<HopfData>(hopf_from_json(j));
  Report r = verify_bialgebra(*h);
  if (!r.ok()) {
    if (strict) throw InputError("ambient algebra fails verify_bialgebra:\n" + r.to_string());
    if (warnings) {
      for (const auto& c : r.checks()) {
        if (!c.pass) warnings->push_back(c.name + " " + c.witness);
      }
    }
  }
  f.hopf = h;
  if (!j.contains("blocks")) return f;
  static const std::vector<std::string> types{"twist", "cocycle", "yd", "braided-twist", "braided-cocycle"};
  for (const auto& [name, x] : j["blocks"].items()) {
    FileBlock b;
    b.type = field(x, "type").get<std::string>();
    if (std::find(types.begin(), types.end(), b.type) == types.end()) {
      throw InputError("block '" + name + "': unknown type '" + b.type + "'");
    }
    if (b.type == "yd") {
      HopfPtr base = h;
      if (x.contains("base")) base = std::make_shared<HopfData>(hopf_from_json(x["base"]));
      b.yd = yd_from_json(field(x, "module"), base);
    } else {
      Index d = h->dim;
      if (b.type.rfind("braided-", 0) == 0) {
        b.braided = std::make_shared<BraidedHopf>(braided_from_json(field(x, "braided")));
        d = b.braided->alg.dim;
      }
      b.element = vec_from_json(field(x, "element"), d, 2, "element");
      if (x.contains("inverse")) b.inverse = vec_from_json(x["inverse"], d, 2, "inverse");
    }
    f.blocks.emplace(name, std::move(b));
  }
  return f;
}

void save_file(const HopfFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << file_to_json(f).dump(1) << "\n";
}

HopfFile load_file(const std::string& path, bool strict, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return file_from_json(j, strict, warnings);
}

FileBlock twist_block(const TwistData& t) { return FileBlock{"twist", t.element, t.inverse, nullptr, std::nullopt}; }
FileBlock cocycle_block(const CocycleData& s) { return FileBlock{"cocycle", s.values, s.inverse, nullptr, std::nullopt}; }
FileBlock braided_twist_block(const BraidedTwistData& t) {
  return FileBlock{"braided-twist", t.element, t.inverse, t.base, std::nullopt};
}
FileBlock braided_cocycle_block(const BraidedCocycleData& s) {
  return FileBlock{"braided-cocycle", s.values, s.inverse, s.base, std::nullopt};
}
FileBlock yd_block(const YDModuleData& m, bool own_base) {
  FileBlock b{"yd", {}, std::nullopt, nullptr, m};
  if (own_base) b.yd->base = std::make_shared<HopfData>(*m.base);
  return b;
}

const FileBlock& find_block(const HopfFile& f, const std::string& type, const std::string& name) {
  if (!name.empty()) {
    auto it = f.blocks.find(name);
    if (it == f.blocks.end()) throw InputError("no block named '" + name + "'");
    if (it->second.type != type) throw InputError("block '" + name + "' has type " + it->second.type + ", not " + type);
    return it->second;
  }
  for (const auto& [n, b] : f.blocks) {
    if (b.type == type) return b;
  }
  throw InputError("no " + type + " block in file");
}

TwistData twist_of(const HopfFile& f, const FileBlock& b) {
  SparseVec el = b.element;
  el.set_dim(f.hopf->dim * f.hopf->dim);
  if (b.inverse) return TwistData{f.hopf, el, *b.inverse};
  try {
    return make_twist(f.hopf, el);
  } catch (const std::invalid_argument&) {
    return TwistData{f.hopf, el, el};
  }
}

CocycleData cocycle_of(const HopfFile& f, const FileBlock& b) {
  if (b.inverse) return CocycleData{f.hopf, b.element, *b.inverse};
  try {
    return make_cocycle(f.hopf, b.element);
  } catch (const std::invalid_argument&) {
    return CocycleData{f.hopf, b.element, b.element};
  }
}

BraidedTwistData braided_twist_of(const FileBlock& b) {
  if (b.inverse) return BraidedTwistData{b.braided, b.element, *b.inverse};
  try {
    return make_braided_twist(b.braided, b.element);
  } catch (const std::invalid_argument&) {
    return BraidedTwistData{b.braided, b.element, b.element};
  }
}

BraidedCocycleData braided_cocycle_of(const FileBlock& b) {
  if (b.inverse) return BraidedCocycleData{b.braided, b.element, *b.inverse};
  try {
    return make_braided_cocycle(b.braided, b.element);
  } catch (const std::invalid_argument&) {
    return BraidedCocycleData{b.braided, b.element, b.element};
  }
}

}  // namespace hopflab
