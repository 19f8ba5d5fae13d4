#pragma once

#include <map>
#include <stdexcept>

#include "json.hpp"
#include "hopflab/twist.hpp"

namespace hopflab {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named object attached to the ambient Hopf algebra of a file.
/// type is one of twist, cocycle, yd, braided-twist, braided-cocycle.
/// twist/cocycle live on the ambient algebra; braided blocks carry their own
/// braided Hopf algebra; yd blocks carry their own base or use the ambient.
struct FileBlock {
  std::string type;
  SparseVec element;  // twist element or cocycle values
  std::optional<SparseVec> inverse;
  BraidedPtr braided;
  std::optional<YDModuleData> yd;
};

struct HopfFile {
  HopfPtr hopf;
  std::map<std::string, FileBlock> blocks;
};

Json scalar_to_json(const CycScalar& c);
/// Accepts {"order": L, "coeffs": ["p/q", ...]}, an integer or a "p/q" string.
CycScalar scalar_from_json(const Json& j);
/// Parses "p/q", "zeta<L>^<k>" or "-zeta<L>^<k>".
CycScalar parse_scalar(const std::string& text);

Json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);
Json braided_to_json(const BraidedHopf& r);
BraidedHopf braided_from_json(const Json& j);

Json file_to_json(const HopfFile& f);
/// strict: throws InputError unless the ambient passes verify_bialgebra.
/// Otherwise failures are appended to `warnings`.
HopfFile file_from_json(const Json& j, bool strict, std::vector<std::string>* warnings = nullptr);

void save_file(const HopfFile& f, const std::string& path);
HopfFile load_file(const std::string& path, bool strict, std::vector<std::string>* warnings = nullptr);

FileBlock twist_block(const TwistData& t);
FileBlock cocycle_block(const CocycleData& s);
FileBlock braided_twist_block(const BraidedTwistData& t);
FileBlock braided_cocycle_block(const BraidedCocycleData& s);
FileBlock yd_block(const YDModuleData& m, bool own_base);

/// Block lookup by name, or the first block of the type when name is empty.
/// Throws InputError when absent or of another type.
const FileBlock& find_block(const HopfFile& f, const std::string& type, const std::string& name);

/// Rebuilds library objects without validating them, so that verification
/// can report the failures. A missing inverse is computed; if none exists
/// the element itself is used and the invertibility check fails.
TwistData twist_of(const HopfFile& f, const FileBlock& b);
CocycleData cocycle_of(const HopfFile& f, const FileBlock& b);
BraidedTwistData braided_twist_of(const FileBlock& b);
BraidedCocycleData braided_cocycle_of(const FileBlock& b);

}  // namespace hopflab
