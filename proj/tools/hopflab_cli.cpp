// hopflab-cli: build, verify, deform and probe finite-dimensional Hopf
// algebras stored as JSON files.
//
// Exit codes: 0 pass/success, 1 verification failed, 2 input error.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopflab/cleft.hpp"
#include "hopflab/gallery.hpp"
#include "hopflab/io.hpp"
#include "hopflab/nichols.hpp"
#include "hopflab/regress.hpp"

using namespace hopflab;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct Params {
  std::string group = "S3";
  std::vector<std::string> generators;  // permutations as "1,0,2"
  std::string xi = "1", xi1 = "1", xi2 = "1", a12 = "0", a21 = "0";
  std::string l1 = "0", l2 = "0", l12 = "0";
  bool klein = false, with_f = false, s4 = false;
  int N = 2, n = 0, m = 2, max_degree = 8;
  std::string from, block, out;
};

std::vector<int> parse_perm(const std::string& s) {
  std::vector<int> p;
  std::stringstream in(s);
  for (std::string t; std::getline(in, t, ',');) p.push_back(std::stoi(t));
  return p;
}

HopfPtr share(HopfData h) { return std::make_shared<HopfData>(std::move(h)); }

void write(const HopfFile& f, const std::string& out) {
  if (out.empty()) throw InputError("missing -o output path");
  save_file(f, out);
  std::cout << "wrote " << out << " (dim " << f.hopf->dim << ", " << f.blocks.size() << " blocks)\n";
}

QLSDatum qls_params(const Params& p) {
  return quantum_plane_datum(parse_scalar(p.xi1), parse_scalar(p.xi2), parse_scalar(p.a12), parse_scalar(p.a21),
                             p.klein || p.with_f);
}

HopfFile build(const std::string& recipe, const Params& p) {
  HopfFile f;
  if (recipe == "group-algebra") {
    f.hopf = share(group_algebra(group_by_name(p.group)));
  } else if (recipe == "function-algebra") {
    f.hopf = share(function_algebra(group_by_name(p.group)));
  } else if (recipe == "matched-pair") {
    GroupTable g = group_by_name(p.group);
    if (g.perms.empty()) throw InputError("matched-pair needs a permutation group");
    std::vector<int> gens;
    for (const auto& s : p.generators.empty() ? std::vector<std::string>{"1,0"} : p.generators) {
      std::vector<int> perm = parse_perm(s);
      for (std::size_t i = perm.size(); i < g.perms[0].size(); ++i) perm.push_back(static_cast<int>(i));
      const int e = g.find_perm(perm);
      if (e < 0) throw InputError("generator " + s + " is not in " + p.group);
      gens.push_back(e);
    }
    std::vector<int> emb;
    GroupTable sub = generated_subgroup(g, gens, &emb);
    f.hopf = share(matched_pair_extension(g, sub, conjugation_action(g, emb)));
  } else if (recipe == "qls") {
    QLSSetup s = qls_setup(qls_params(p));
    f.hopf = s.smash;
    f.blocks["braided-J"] = braided_twist_block(braided_J_D(s));
    f.blocks["J"] = twist_block(twist_J_D(s));
    f.blocks["V"] = yd_block(realization_module(s.datum.realization, s.group), true);
  } else if (recipe == "nichols-a2") {
    YDModuleData v = a2_module();
    f.hopf = share(bosonize(nichols_algebra(v, 7)));
    f.blocks["V"] = yd_block(v, true);
  } else if (recipe == "fk3") {
    FKSetup s = fk_setup(3);
    f.hopf = s.smash;
    f.blocks["braided-J3"] = braided_twist_block(braided_J_n(s));
    f.blocks["J3"] = twist_block(twist_J_n(s));
  } else if (recipe == "bosonize") {
    if (p.from.empty()) throw InputError("bosonize needs --from <file> with a yd block");
    HopfFile src = load_file(p.from, true);
    const FileBlock& b = find_block(src, "yd", p.block);
    BraidedHopf r = nichols_algebra(*b.yd, p.max_degree);
    if (r.truncated) throw InputError("Nichols algebra not finished below --max-degree");
    f.hopf = share(bosonize(r));
  } else if (recipe == "cleft-a2") {
    CleftData c = cleft_A2({parse_scalar(p.l1), parse_scalar(p.l2), parse_scalar(p.l12)}, a2_module());
    f.hopf = c.base;
    f.blocks["sigma"] = cocycle_block(cocycle_from_section(c));
  } else {
    throw InputError("unknown recipe '" + recipe + "'");
  }
  return f;
}

HopfFile gallery(const std::string& name, const Params& p) {
  HopfFile f;
  const int n = p.n ? p.n : p.N;
  if (name == "j-xi" || name == "sigma-xi") {
    QuantumLineSetup s = quantum_line_setup(p.N, n);
    if (name == "j-xi") {
      f.hopf = s.smash;
      f.blocks["J"] = twist_block(twist_J_xi(s, parse_scalar(p.xi)));
      f.blocks["braided-J"] = braided_twist_block(braided_J_xi(s, parse_scalar(p.xi)));
    } else {
      f.hopf = s.smash;
      f.blocks["sigma"] = cocycle_block(cocycle_sigma_xi(s, parse_scalar(p.xi)));
    }
  } else if (name == "j-alpha") {
    TwistData t = p.s4 ? twist_s4_from_klein() : twist_klein_alpha();
    f.hopf = t.base;
    f.blocks["J"] = twist_block(t);
  } else if (name == "j-d") {
    QLSSetup s = qls_setup(qls_params(p));
    f.hopf = s.smash;
    f.blocks["braided-J"] = braided_twist_block(braided_J_D(s));
    f.blocks["J"] = twist_block(p.with_f ? twist_J_D(s, twist_klein_alpha()) : twist_J_D(s));
  } else if (name == "j-n") {
    if (n != 3 && n != 4) throw InputError("j-n needs --n 3 or 4");
    FKSetup s = fk_setup(n);
    f.hopf = s.smash;
    f.blocks["J"] = twist_block(twist_J_n(s));
    f.blocks["braided-J"] = braided_twist_block(braided_J_n(s));
  } else if (name == "sigma-gm") {
    if (n != 3) throw InputError("sigma-gm is available for --n 3");
    FKSetup s = fk_setup(3);
    HopfPtr dual = share(dual_hopf(*s.smash));
    f.hopf = dual;
    f.blocks["sigma"] = cocycle_block(cocycle_GM(s, dual));
  } else if (name == "extend-j3") {
    if (p.m < 1 || p.m > 3) throw InputError("extend-j3 needs --m 1, 2 or 3");
    FKExtension e = fk3_extension(p.m);
    f.hopf = e.smash;
    f.blocks["J"] = twist_block(extend_J3_matched_pair(e));
  } else {
    throw InputError("unknown gallery name '" + name + "'");
  }
  return f;
}

int report_exit(const Report& r) {
  std::cout << r.to_string();
  if (!r.to_string().empty() && r.to_string().back() != '\n') std::cout << "\n";
  std::cout << (r.ok() ? "result: PASS" : "result: FAIL") << "\n";
  return r.ok() ? kPass : kFail;
}

int verify(const std::string& kind, const std::string& path, const std::string& block) {
  std::vector<std::string> warnings;
  HopfFile f = load_file(path, false, &warnings);
  if (kind == "hopf") return report_exit(verify_hopf(*f.hopf));
  for (const auto& w : warnings) std::cerr << "warning: ambient fails " << w << "\n";
  if (kind == "twist") return report_exit(verify_twist(twist_of(f, find_block(f, "twist", block))));
  if (kind == "cocycle") return report_exit(verify_cocycle(cocycle_of(f, find_block(f, "cocycle", block))));
  if (kind == "braided-twist") {
    return report_exit(verify_braided_twist(braided_twist_of(find_block(f, "braided-twist", block))));
  }
  if (kind == "braided-cocycle") {
    return report_exit(verify_braided_cocycle(braided_cocycle_of(find_block(f, "braided-cocycle", block))));
  }
  if (kind == "yd") return report_exit(verify_yd(*find_block(f, "yd", block).yd));
  throw InputError("unknown verify target '" + kind + "'");
}

int deform(const std::string& what, const std::string& path, const std::string& block, const std::string& out) {
  HopfFile f = load_file(path, true);
  HopfFile g;
  if (what == "twist") {
    TwistData t = twist_of(f, find_block(f, "twist", block));
    Report r = verify_twist(t);
    if (!r.ok()) {
      std::cerr << r.to_string();
      throw InputError("block is not a twist");
    }
    g.hopf = share(apply_twist(t));
    g.blocks["inverse"] = twist_block(inverse_twist(t, g.hopf));
  } else {
    CocycleData s = cocycle_of(f, find_block(f, "cocycle", block));
    Report r = verify_cocycle(s);
    if (!r.ok()) {
      std::cerr << r.to_string();
      throw InputError("block is not a cocycle");
    }
    g.hopf = share(apply_cocycle(s));
    g.blocks["inverse"] = cocycle_block(inverse_cocycle(s, g.hopf));
  }
  write(g, out);
  return kPass;
}

int dualize(const std::string& path, const std::string& out) {
  HopfFile f = load_file(path, true);
  HopfFile g;
  g.hopf = share(dual_hopf(*f.hopf));
  for (const auto& [name, b] : f.blocks) {
    if (b.type == "twist") {
      g.blocks[name] = cocycle_block(cocycle_from_twist_dual(twist_of(f, b), g.hopf));
    } else if (b.type == "cocycle") {
      g.blocks[name] = twist_block(twist_from_cocycle_dual(cocycle_of(f, b), g.hopf));
    } else {
      std::cerr << "note: block '" << name << "' (" << b.type << ") has no dual counterpart and is dropped\n";
    }
  }
  write(g, out);
  return kPass;
}

int probe(const std::string& what, const std::string& path) {
  HopfFile f = load_file(path, true);
  const HopfData& h = *f.hopf;
  if (what == "cocommutative") {
    std::cout << "cocommutative: " << (is_cocommutative(h) ? "yes" : "no") << "\n";
  } else if (what == "characters") {
    CharacterGroup cg = character_convolution_group(h);
    std::cout << "characters: " << cg.table.order << (cg.table.is_abelian() ? " (abelian)" : " (nonabelian)") << "\n";
  } else if (what == "group-likes-in-basis") {
    std::vector<Index> g = grouplikes_in_basis(h);
    std::cout << "group-likes in basis: " << g.size() << "\n";
    for (Index i : g) std::cout << "  " << h.labels[i] << "\n";
  } else {
    throw InputError("unknown probe '" + what + "'");
  }
  return kPass;
}

int regress(bool long_mode) {
  int failed = 0;
  for (int id = 1; id <= 11; ++id) {
    CriterionResult r = run_criterion(id, long_mode);
    std::cout << format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (11 - failed) << "/11 criteria pass\n";
  return failed ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras, twists and cocycles"};
  app.require_subcommand(1);
  Params p;
  std::string target, file, kind;
  bool long_mode = false;

  auto add_qls = [&](CLI::App* c) {
    c->add_option("--xi1", p.xi1, "xi_1");
    c->add_option("--xi2", p.xi2, "xi_2");
    c->add_option("--a12", p.a12, "a_12");
    c->add_option("--a21", p.a21, "a_21");
    c->add_flag("--klein", p.klein, "realize over C2 x C2 instead of C2");
  };

  CLI::App* b = app.add_subcommand("build", "build a Hopf algebra from a recipe");
  b->add_option("recipe", target,
                "group-algebra | function-algebra | matched-pair | qls | nichols-a2 | fk3 | bosonize | cleft-a2")
      ->required();
  b->add_option("--group", p.group, "S3, S4, C<n>, C2xC2, D4");
  b->add_option("--generator", p.generators, "subgroup generator as a permutation, e.g. 1,0,2");
  add_qls(b);
  b->add_option("--l1", p.l1, "lambda_1");
  b->add_option("--l2", p.l2, "lambda_2");
  b->add_option("--l12", p.l12, "lambda_12");
  b->add_option("--from", p.from, "input file for bosonize");
  b->add_option("--block", p.block, "yd block for bosonize");
  b->add_option("--max-degree", p.max_degree, "degree bound for the Nichols algebra");
  b->add_option("-o,--output", p.out, "output file")->required();

  CLI::App* v = app.add_subcommand("verify", "verify axioms; exit 0 pass, 1 fail, 2 input error");
  v->add_option("kind", kind, "hopf | twist | cocycle | braided-twist | braided-cocycle | yd")->required();
  v->add_option("file", file)->required();
  v->add_option("--block", p.block, "block name (default: first of the kind)");

  CLI::App* t = app.add_subcommand("twist", "twist operations");
  CLI::App* ta = t->add_subcommand("apply", "write H^J");
  t->require_subcommand(1);
  ta->add_option("file", file)->required();
  ta->add_option("--block", p.block);
  ta->add_option("-o,--output", p.out)->required();

  CLI::App* c = app.add_subcommand("cocycle", "cocycle operations");
  CLI::App* ca = c->add_subcommand("apply", "write H_sigma");
  c->require_subcommand(1);
  ca->add_option("file", file)->required();
  ca->add_option("--block", p.block);
  ca->add_option("-o,--output", p.out)->required();

  CLI::App* d = app.add_subcommand("dualize", "write H* with twists and cocycles transposed");
  d->add_option("file", file)->required();
  d->add_option("-o,--output", p.out)->required();

  CLI::App* g = app.add_subcommand("gallery", "named twists and cocycles");
  g->add_option("name", target, "j-xi | sigma-xi | j-alpha | j-d | j-n | sigma-gm | extend-j3")->required();
  g->add_option("--N", p.N, "nilpotency order N (j-xi, sigma-xi)");
  g->add_option("--n", p.n, "order of g (j-xi, sigma-xi) or n of S_n (j-n, sigma-gm)");
  g->add_option("--xi", p.xi, "xi");
  g->add_option("--m", p.m, "order of the cyclic factor (extend-j3)");
  g->add_flag("--s4", p.s4, "lift J_alpha to S4 (j-alpha)");
  g->add_flag("--with-f", p.with_f, "compose with J_alpha on C2 x C2 (j-d)");
  add_qls(g);
  g->add_option("-o,--output", p.out)->required();

  CLI::App* pr = app.add_subcommand("probe", "structural probes");
  pr->add_option("what", kind, "cocommutative | characters | group-likes-in-basis")->required();
  pr->add_option("file", file)->required();

  CLI::App* r = app.add_subcommand("regress", "replay the acceptance criteria");
  r->add_flag("--long", long_mode, "include the FK4 construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*b) {
      write(build(target, p), p.out);
      return kPass;
    }
    if (*v) return verify(kind, file, p.block);
    if (*t) return deform("twist", file, p.block, p.out);
    if (*c) return deform("cocycle", file, p.block, p.out);
    if (*d) return dualize(file, p.out);
    if (*g) {
      write(gallery(target, p), p.out);
      return kPass;
    }
    if (*pr) return probe(kind, file);
    if (*r) return regress(long_mode);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
