#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "ncx/cli.hpp"
#include "ncx/json_io.hpp"
#include "ncx/random.hpp"

using namespace ncx;
using json_io::Json;

namespace {

const Ring F5 = Ring::prime_field(5);
const Ring Z = Ring::integers();

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ncx_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST(Json, ComplexRoundTrip) {
  for (const Ring& r : {F5, Z})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = random_complex(r, 1 + seed % 5, 4, 3, seed);
      const auto text = json_io::encode(x).dump();
      EXPECT_EQ(json_io::decode_complex(json_io::parse(text)), x);
      EXPECT_EQ(json_io::encode(json_io::decode_complex(json_io::parse(text))).dump(), text);
    }
}

TEST(Json, EmptyComplexRoundTrip) {
  const auto z = PeriodicComplex::zero(F5, 3);
  EXPECT_EQ(json_io::decode_complex(json_io::encode(z)), z);
}

TEST(Json, MapsHomotopiesAndChainsRoundTrip) {
  const auto x = random_complex(F5, 3, 4, 3, 1);
  const auto y = random_complex(F5, 3, 4, 3, 2);
  const auto fix = random_map_with_homotopy(x, y, 3);
  EXPECT_EQ(json_io::decode_chain_map(json_io::encode(fix.f)), fix.f);
  EXPECT_EQ(json_io::decode_homotopy(json_io::encode(fix.h)), fix.h);
  const auto w = json_io::decode_homotopy_witness(json_io::encode(HomotopyWitness{fix.f, fix.g, fix.h}));
  EXPECT_EQ(w.from, fix.f);
  EXPECT_EQ(w.to, fix.g);
  EXPECT_EQ(w.h, fix.h);
  const auto chain = random_chain(F5, 2, 3, 3, 3, 4);
  EXPECT_EQ(json_io::decode_chain(json_io::encode(chain)), chain);
  const auto p = random_pair(F5, 1, 3, 3, 5);
  EXPECT_EQ(json_io::decode_pair(json_io::encode(p)), p);
  const auto q = random_pair(F5, 1, 3, 3, 6);
  const auto m = random_pair_morphism(p, q, 7);
  EXPECT_EQ(json_io::decode_pair_morphism(json_io::encode(m)), m);
}

TEST(Json, GroupsAndSimplicialSetsRoundTrip) {
  const auto g = group::builtin_group("s3");
  EXPECT_EQ(json_io::decode_group(json_io::encode(g)), g);
  const auto mg = group::builtin_mul_group("z2xz2");
  EXPECT_EQ(json_io::decode_mul_group(json_io::encode(mg)), mg);
  const auto s = group::recalage_from_group(g, 3);
  EXPECT_EQ(json_io::decode_simplicial_set(json_io::encode(s)), s);
}

TEST(Json, ReportLineRoundTrip) {
  CheckResult r{"d_i d_j = d_{j-1} d_i", 3, {0, 2}, 99, false, 7, "equation does not hold"};
  const auto j = json_io::encode(r);
  EXPECT_TRUE(j.contains("detail"));
  const auto back = json_io::decode_check_result(j);
  EXPECT_EQ(back.identity, r.identity);
  EXPECT_EQ(back.indices, r.indices);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_FALSE(back.pass);
  r.pass = true;
  EXPECT_FALSE(json_io::encode(r).contains("detail"));
}

TEST(Json, TruncatedDocumentNamesTheMissingField) {
  auto j = json_io::encode(random_complex(F5, 2, 3, 3, 1));
  j["diffs"][1].erase("entries");
  try {
    json_io::decode_complex(j);
    FAIL() << "expected a format error";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("$.diffs[1].entries: missing field"), std::string::npos)
        << e.what();
  }
}

TEST(Json, SchemaViolationsArePathQualified) {
  auto j = json_io::encode(random_complex(F5, 2, 3, 3, 1));
  j["dims"][0] = "one";
  EXPECT_THROW(json_io::decode_complex(j), FormatError);
  auto k = json_io::encode(random_complex(F5, 2, 3, 3, 1));
  k["ring"] = Json{{"kind", "fp"}, {"p", 6}};
  try {
    json_io::decode_complex(k);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("$.ring.p", 0), 0u) << e.what();
  }
}

TEST(Json, MalformedTextReportsLocation) {
  try {
    json_io::parse("{\"ring\": ");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(Cli, VerifySimplicialPasses) {
  const auto r = cli_run({"verify", "simplicial", "--n", "4", "--trials", "50", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"pass\":true"), std::string::npos);
  EXPECT_EQ(r.out.find("\"pass\":false"), std::string::npos);
}

TEST(Cli, VerifyOutputIsDeterministic) {
  const std::vector<std::string> args{"verify", "equivalence", "--n", "2", "--trials", "4"};
  EXPECT_EQ(cli_run(args).out, cli_run(args).out);
}

TEST(Cli, CheckComplexReportsFailingIndex) {
  const std::string bad =
      R"({"ring":{"kind":"fp","p":5},"period":2,"dims":[1,1],)"
      R"("diffs":[{"rows":1,"cols":1,"entries":[1]},{"rows":1,"cols":1,"entries":[1]}]})";
  const auto r = cli_run({"check", "complex", "-"}, bad);
  EXPECT_EQ(r.code, 1);
  const auto report = json_io::parse(r.out);
  EXPECT_FALSE(report["pass"].get<bool>());
  EXPECT_EQ(report["index"].get<int>(), 0);
}

TEST(Cli, ConeOfIdentityChecksClean) {
  const auto x = random_complex(F5, 2, 4, 3, 3);
  const auto id = json_io::encode(identity_map(x)).dump();
  const auto cone = cli_run({"apply", "cone", "-"}, id);
  ASSERT_EQ(cone.code, 0) << cone.err;
  const auto check = cli_run({"check", "complex", "-"}, cone.out);
  EXPECT_EQ(check.code, 0) << check.out;
}

TEST(Cli, ApplyFunctorsChain) {
  const auto gen = cli_run({"gen", "--what", "pair", "--n", "2", "--seed", "5"});
  ASSERT_EQ(gen.code, 0);
  const auto g = cli_run({"apply", "G", "-"}, gen.out);
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(json_io::decode_complex(json_io::parse(g.out)).period(), 5u);
  const auto f = cli_run({"apply", "F", "-"}, g.out);
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_NO_THROW(json_io::decode_pair(json_io::parse(f.out)));
  const auto face = cli_run({"apply", "face", "-", "--i", "4"}, g.out);
  EXPECT_EQ(face.code, 0) << face.err;
  const auto bad_index = cli_run({"apply", "face", "-", "--i", "9"}, g.out);
  EXPECT_EQ(bad_index.code, 2);
}

TEST(Cli, SpineThenFiller) {
  const auto gen = cli_run({"gen", "--period", "4", "--seed", "2"});
  const auto sp = cli_run({"apply", "spine", "-"}, gen.out);
  ASSERT_EQ(sp.code, 0) << sp.err;
  const auto fl = cli_run({"apply", "filler", "-"}, sp.out);
  ASSERT_EQ(fl.code, 0) << fl.err;
  EXPECT_EQ(cli_run({"check", "complex", "-"}, fl.out).code, 0);
}

TEST(Cli, FilesAndOutputPaths) {
  const auto path = temp_file("map.json");
  ASSERT_EQ(cli_run({"gen", "--what", "map", "--period", "2", "-o", path.string()}).code, 0);
  EXPECT_EQ(cli_run({"check", "map", path.string()}).code, 0);
  EXPECT_EQ(cli_run({"check", "map", (path.string() + ".missing")}).code, 2);
}

TEST(Cli, UsageAndFormatErrorsExitTwo) {
  EXPECT_EQ(cli_run({}).code, 2);
  EXPECT_EQ(cli_run({"frobnicate"}).code, 2);
  EXPECT_EQ(cli_run({"verify", "nothing"}).code, 2);
  EXPECT_EQ(cli_run({"verify", "cone", "--ring", "fp:6"}).code, 2);
  EXPECT_EQ(cli_run({"verify", "octahedron", "--ring", "z"}).code, 2);
  const auto malformed = cli_run({"check", "complex", "-"}, "{\"ring\":");
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find("byte"), std::string::npos);
}

TEST(Cli, GroupCommands) {
  const auto built = cli_run({"group", "build", "s3", "--K", "3"});
  ASSERT_EQ(built.code, 0) << built.err;
  const auto extracted = cli_run({"group", "extract", "-"}, built.out);
  ASSERT_EQ(extracted.code, 0) << extracted.err;
  const auto g = json_io::decode_group(json_io::parse(extracted.out));
  EXPECT_EQ(g.div, group::builtin_group("s3").div);
  EXPECT_EQ(g.e, group::builtin_group("s3").e);
  const auto mul = cli_run({"group", "convert", "-"}, extracted.out);
  ASSERT_EQ(mul.code, 0);
  const auto div = cli_run({"group", "convert", "-"}, mul.out);
  EXPECT_EQ(json_io::parse(div.out), json_io::parse(extracted.out));

  auto s = json_io::decode_simplicial_set(json_io::parse(built.out));
  std::swap(s.faces[2][0][1], s.faces[2][0][2]);
  EXPECT_EQ(cli_run({"group", "extract", "-"}, json_io::encode(s).dump()).code, 1);
}

TEST(Cli, EveryFaultIsCaught) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"g-sign-flip", "equivalence"},
      {"tau-residue", "simplicial"},
      {"group-d0", "group"},
      {"homotopy-component", "equivalence"},
      {"face-off-by-one", "simplicial"}};
  for (const auto& [fault, suite] : cases) {
    const auto r = cli_run({"verify", suite, "--trials", "5", "--fault", fault});
    EXPECT_EQ(r.code, 1) << fault;
  }
}

TEST(Cli, InstalledBinaryExitCodes) {
  const std::string bin = NCX_CLI_PATH;
  const auto out = temp_file("binary_out.txt").string();
  EXPECT_EQ(std::system((bin + " verify cone --trials 5 > " + out).c_str()), 0);
  const int bad = std::system((bin + " verify group --fault group-d0 > " + out).c_str());
  ASSERT_TRUE(WIFEXITED(bad));
  EXPECT_EQ(WEXITSTATUS(bad), 1);
  const int usage = std::system((bin + " verify > " + out + " 2>&1").c_str());
  ASSERT_TRUE(WIFEXITED(usage));
  EXPECT_EQ(WEXITSTATUS(usage), 2);
}
