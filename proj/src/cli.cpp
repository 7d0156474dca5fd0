#include "ncx/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ncx/equivalence.hpp"
#include "ncx/group.hpp"
#include "ncx/json_io.hpp"
#include "ncx/lax.hpp"
#include "ncx/random.hpp"
#include "ncx/simplicial.hpp"
#include "ncx/suites.hpp"

namespace ncx::cli {

namespace {

using json_io::Json;

constexpr std::uint64_t kDefaultSeed = 24301;

struct Options {
  std::string ring = "fp:5";
  std::size_t period = 3;
  std::optional<std::size_t> n;
  std::size_t i = 0;
  std::size_t trials = 20;
  std::uint64_t seed = kDefaultSeed;
  std::string output = "-";
  std::string fault = "none";
  std::string what = "complex";
  std::size_t max_dim = 4;
  std::size_t max_strings = 4;
  std::string kind;
  std::string input;
};

class Usage : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Ring parse_ring(const std::string& s) {
  if (s == "z") return Ring::integers();
  if (s.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      const long long p = std::stoll(s.substr(3), &used);
      if (used == s.size() - 3) return Ring::prime_field(p);
    } catch (const std::logic_error&) {
    }
  }
  throw Usage("--ring expects fp:P with P prime, or z; got '" + s + "'");
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Usage("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

Json load(const std::string& path, std::istream& in) {
  try {
    return json_io::parse(read_input(path, in));
  } catch (const FormatError& e) {
    throw FormatError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Usage("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  Json j;
  if (o.what == "complex") {
    j = json_io::encode(random_complex(ring, o.period, o.max_strings, o.max_dim, o.seed));
  } else if (o.what == "map") {
    const auto x = random_complex(ring, o.period, o.max_strings, o.max_dim, derive_seed(o.seed, 1));
    const auto y = random_complex(ring, o.period, o.max_strings, o.max_dim, derive_seed(o.seed, 2));
    j = json_io::encode(random_chain_map(x, y, derive_seed(o.seed, 3)));
  } else if (o.what == "chain") {
    j = json_io::encode(random_chain(ring, o.period, o.n.value_or(1), o.max_strings, o.max_dim, o.seed));
  } else if (o.what == "pair") {
    j = json_io::encode(random_pair(ring, o.n.value_or(1), o.max_strings, o.max_dim, o.seed));
  } else {
    throw Usage("--what expects complex, map, chain or pair");
  }
  emit(j, o.output, out);
  return kPass;
}

int cmd_check(const Options& o, std::ostream& out, std::istream& in) {
  const Json j = load(o.input, in);
  ValidationReport r;
  if (o.kind == "complex") {
    r = validate_complex(json_io::decode_complex(j));
  } else if (o.kind == "map") {
    r = validate_chain_map(json_io::decode_chain_map(j));
  } else {
    r = validate_homotopy(json_io::decode_homotopy_witness(j));
  }
  out << json_io::encode(r).dump() << '\n';
  return r.pass ? kPass : kFail;
}

int cmd_apply(const Options& o, std::ostream& out, std::istream& in) {
  const Json j = load(o.input, in);
  Json result;
  if (o.kind == "face") {
    result = json_io::encode(face(o.i, json_io::decode_complex(j)));
  } else if (o.kind == "degen") {
    result = json_io::encode(degeneracy(o.i, json_io::decode_complex(j)));
  } else if (o.kind == "vertex") {
    result = json_io::encode(vertex(o.i, json_io::decode_complex(j)));
  } else if (o.kind == "spine") {
    result = json_io::encode(spine(json_io::decode_complex(j)));
  } else if (o.kind == "filler") {
    result = json_io::encode(filler(json_io::decode_chain(j)));
  } else if (o.kind == "cone") {
    result = json_io::encode(cone(json_io::decode_chain_map(j)));
  } else if (o.kind == "G") {
    result = json_io::encode(apply_G(json_io::decode_pair(j)));
  } else {
    result = json_io::encode(apply_F(json_io::decode_complex(j)));
  }
  emit(result, o.output, out);
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.ring = parse_ring(o.ring);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.fault = parse_fault(o.fault);
  cfg.n_max = o.n.value_or(o.kind == "group" ? 4 : 3);
  if (o.kind == "group" && cfg.n_max < 3) throw Usage("verify group needs --n >= 3");

  SuiteReport report;
  if (o.kind == "generator") report = verify_generator(cfg);
  else if (o.kind == "simplicial") report = verify_simplicial(cfg);
  else if (o.kind == "equivalence") report = verify_equivalence(cfg);
  else if (o.kind == "g-nilpotency") report = verify_g_nilpotency(cfg);
  else if (o.kind == "unit") report = verify_unit(cfg);
  else if (o.kind == "counit") report = verify_counit(cfg);
  else if (o.kind == "triangles") report = verify_triangles(cfg);
  else if (o.kind == "functors") report = verify_functors(cfg);
  else if (o.kind == "spine-filler") report = verify_spine_filler(cfg);
  else if (o.kind == "augmented") report = verify_augmented(cfg);
  else if (o.kind == "cone") report = verify_cone(cfg);
  else if (o.kind == "octahedron") report = verify_octahedron(cfg);
  else if (o.kind == "strings") report = verify_full_strings(cfg);
  else report = verify_group(cfg);

  for (const auto& r : report.results) out << json_io::encode(r).dump() << '\n';
  err << report.results.size() << " checks, " << report.failures() << " failed\n";
  return report.pass() ? kPass : kFail;
}

group::FiniteGroup group_argument(const std::string& arg, std::istream& in) {
  const auto& names = group::builtin_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return group::builtin_group(arg);
  return json_io::decode_group(load(arg, in));
}

int cmd_group(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
  if (o.kind == "build") {
    const auto g = group_argument(o.input, in);
    const auto axioms = group::check_div_axioms(g);
    if (!axioms.pass) {
      Json r{{"pass", false}, {"failed", axioms.failed}, {"detail", axioms.detail}};
      out << r.dump() << '\n';
      return kFail;
    }
    emit(json_io::encode(group::recalage_from_group(g, o.n.value_or(4))), o.output, out);
    return kPass;
  }
  if (o.kind == "extract") {
    const auto s = json_io::decode_simplicial_set(load(o.input, in));
    if (const auto failure = group::check_simplicial_set(s)) {
      Json r{{"pass", false},
             {"identity", failure->identity},
             {"level", failure->level},
             {"indices", failure->indices},
             {"simplex", failure->simplex}};
      out << r.dump() << '\n';
      return kFail;
    }
    try {
      emit(json_io::encode(group::group_from_recalage(s)), o.output, out);
    } catch (const PreconditionError& e) {
      out << Json{{"pass", false}, {"detail", e.what()}}.dump() << '\n';
      return kFail;
    }
    return kPass;
  }
  // convert: division presentation <-> multiplication presentation
  const auto& names = group::builtin_names();
  const bool builtin = std::find(names.begin(), names.end(), o.input) != names.end();
  const Json j = builtin ? json_io::encode(group::builtin_group(o.input)) : load(o.input, in);
  if (j.is_object() && j.contains("div")) {
    const auto g = json_io::decode_group(j);
    const auto axioms = group::check_div_axioms(g);
    if (!axioms.pass) {
      out << Json{{"pass", false}, {"failed", axioms.failed}, {"detail", axioms.detail}}.dump() << '\n';
      return kFail;
    }
    emit(json_io::encode(group::to_mul(g)), o.output, out);
  } else {
    const auto g = json_io::decode_mul_group(j);
    const auto axioms = group::check_mul_axioms(g);
    if (!axioms.pass) {
      out << Json{{"pass", false}, {"failed", axioms.failed}, {"detail", axioms.detail}}.dump() << '\n';
      return kFail;
    }
    emit(json_io::encode(group::to_div(g)), o.output, out);
  }
  (void)err;
  return kPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Exact N-complex kernel and verification suites", "ncx"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "fp:P or z")->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "write a random complex, map, chain or pair");
  add_common(gen);
  gen->add_option("--period", o.period, "period N")->capture_default_str();
  gen->add_option("--n", o.n, "chain length or pair level");
  gen->add_option("--what", o.what, "complex|map|chain|pair")->capture_default_str();
  gen->add_option("--max-dim", o.max_dim, "largest degreewise dimension")->capture_default_str();
  gen->add_option("--max-strings", o.max_strings, "largest number of string summands")
      ->capture_default_str();
  gen->add_option("-o", o.output, "output path")->capture_default_str();

  auto* check = app.add_subcommand("check", "validate a complex, map or homotopy");
  check->add_option("kind", o.kind)->required()->check(CLI::IsMember({"complex", "map", "homotopy"}));
  check->add_option("file", o.input)->required();

  auto* apply = app.add_subcommand("apply", "apply a functor to a JSON value");
  apply->add_option("op", o.kind)
      ->required()
      ->check(CLI::IsMember({"face", "degen", "vertex", "spine", "filler", "cone", "G", "F"}));
  apply->add_option("file", o.input)->required();
  apply->add_option("--i", o.i, "face, degeneracy or vertex index")->capture_default_str();
  apply->add_option("-o", o.output, "output path")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", o.kind)
      ->required()
      ->check(CLI::IsMember({"generator", "simplicial", "equivalence", "g-nilpotency", "unit",
                             "counit", "triangles", "functors", "spine-filler", "augmented",
                             "cone", "octahedron", "strings", "group"}));
  verify->add_option("--n", o.n, "largest level (group: truncation K)");
  verify->add_option("--trials", o.trials, "trials per level")->capture_default_str();
  verify->add_option("--fault", o.fault, "inject a fault")
      ->capture_default_str()
      ->check(CLI::IsMember(fault_names()));

  auto* grp = app.add_subcommand("group", "group and recalage conversions");
  grp->add_option("op", o.kind)->required()->check(CLI::IsMember({"build", "extract", "convert"}));
  grp->add_option("input", o.input, "built-in group name or JSON file")->required();
  grp->add_option("--n,--K", o.n, "truncation level for build");
  grp->add_option("-o", o.output, "output path")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (check->parsed()) return cmd_check(o, out, in);
    if (apply->parsed()) return cmd_apply(o, out, in);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_group(o, out, err, in);
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, std::cin);
}

} // namespace ncx::cli
