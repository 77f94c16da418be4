#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/corpus.hpp"
#include "qha/io.hpp"
#include "qha/structure.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qha;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qha_io_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  REQUIRE(out.good());
  out << text;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QHA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

const std::string kCorpus = QHA_CORPUS_DIR;

} // namespace

TEST_CASE("quasi-Hopf files: save → load → save is byte-stable and verifies") {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    for (const auto& [name, H] : corpus::all(f)) {
      CAPTURE(name);
      fs::path p1 = scratch() / (name + "_" + f.to_string() + ".qha");
      fs::path p2 = scratch() / (name + "_" + f.to_string() + "_again.qha");
      io::save_quasi_hopf(p1.string(), *H);
      CHECK(io::read_kind(p1.string()) == io::FileKind::QuasiHopf);
      CHECK(io::read_field(p1.string(), Field::rationals()) == f);
      HopfPtr back = io::load_quasi_hopf(p1.string(), f);
      io::save_quasi_hopf(p2.string(), *back);
      CHECK(slurp(p1) == slurp(p2));
      CHECK(verify_quasi_hopf(*back).ok());
    }
  }
}

TEST_CASE("plain algebra files round-trip through save/load") {
  HopfPtr H = corpus::kz4(Field::rationals());
  fs::path p1 = scratch() / "alg.qha", p2 = scratch() / "alg2.qha";
  io::save_algebra(p1.string(), *H->H());
  AlgebraPtr back = io::load_algebra(p1.string(), Field::rationals());
  io::save_algebra(p2.string(), *back);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(back->dim() == 4);
  CHECK(back->basis_labels() == H->H()->basis_labels());
  CHECK(verify_associative_unital(*back).ok());
}

TEST_CASE("module-algebra files round-trip and re-verify") {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    HopfPtr H = corpus::h2(f);
    for (ModuleAlgebra ma : {trivial_module_algebra(H), bv_construction(H->H(), LinearMap::identity(f, 2), H)}) {
      fs::path p1 = scratch() / "ma.qha", p2 = scratch() / "ma2.qha";
      io::save_module_algebra(p1.string(), ma);
      CHECK(io::read_kind(p1.string()) == io::FileKind::ModuleAlgebra);
      ModuleAlgebra back = io::load_module_algebra(p1.string(), H);
      io::save_module_algebra(p2.string(), back);
      CHECK(slurp(p1) == slurp(p2));
      CHECK(back.mult == ma.mult);
      CHECK(back.action == ma.action);
      CHECK(back.unit == ma.unit);
      CHECK(verify_module_algebra(back).ok());
    }
  }
}

TEST_CASE("comodule-algebra and morphism files round-trip and re-verify") {
  HopfPtr H = corpus::sweedler(Field::rationals());
  SmashProduct sp = smash_product(trivial_module_algebra(H));
  fs::path pc1 = scratch() / "ca.qha", pc2 = scratch() / "ca2.qha";
  io::save_comodule_algebra(pc1.string(), sp.CA);
  ComoduleAlgebra back = io::load_comodule_algebra(pc1.string(), H);
  io::save_comodule_algebra(pc2.string(), back);
  CHECK(slurp(pc1) == slurp(pc2));
  CHECK(verify_comodule_algebra(back).ok());

  fs::path pm1 = scratch() / "mor.qha", pm2 = scratch() / "mor2.qha";
  io::save_morphism(pm1.string(), sp.j);
  LinearMap j = io::load_morphism(pm1.string(), Field::rationals());
  io::save_morphism(pm2.string(), j);
  CHECK(slurp(pm1) == slurp(pm2));
  CHECK(j == sp.j);
}

TEST_CASE("strict schema: malformed inputs are rejected with ParseError") {
  HopfPtr H = corpus::kz2(Field::rationals());
  fs::path good = scratch() / "good.qha";
  io::save_quasi_hopf(good.string(), *H);
  const std::string text = slurp(good);

  auto expect_reject = [&](const std::string& body) {
    fs::path p = scratch() / "bad.qha";
    spit(p, body);
    CHECK_THROWS_AS((void)io::load_quasi_hopf(p.string(), Field::rationals()), io::ParseError);
  };

  SUBCASE("unknown key") {
    std::string t = text;
    t.insert(t.find('{') + 1, "\n  \"extra\": 1,");
    expect_reject(t);
  }
  SUBCASE("missing key") {
    std::string t = text;
    auto pos = t.find("\"alpha\"");
    t.replace(pos, 7, "\"alhpa\""); // renames a required key
    expect_reject(t);
  }
  SUBCASE("wrong schema version") {
    std::string t = text;
    t.replace(t.find("\"schema_version\": \"1\""), 21, "\"schema_version\": \"2\"");
    expect_reject(t);
  }
  SUBCASE("wrong kind") {
    fs::path p = scratch() / "bad.qha";
    spit(p, text);
    CHECK_THROWS_AS((void)io::load_algebra(p.string(), Field::rationals()), io::ParseError);
  }
  SUBCASE("invalid syntax") { expect_reject("{ not json"); }
  SUBCASE("zero dimension") {
    expect_reject(R"({"schema_version":"1","kind":"quasi_hopf","dim":0,"labels":[],"unit":[],"mult":[],
      "comul":[],"counit":[[]],"antipode":[],"phi":[],"alpha":[],"beta":[]})");
  }
  SUBCASE("index out of range") {
    expect_reject(R"({"schema_version":"1","kind":"quasi_hopf","field":"gf:7","dim":1,"labels":["1"],
      "unit":[1],"mult":[[0,0,5,1]],"comul":[[1]],"counit":[[1]],"antipode":[[1]],
      "phi":[[0,1]],"alpha":[1],"beta":[1]})");
  }
  SUBCASE("rational scalar shape in a gf file") {
    expect_reject(R"({"schema_version":"1","kind":"quasi_hopf","field":"gf:7","dim":1,"labels":["1"],
      "unit":[[1,1]],"mult":[[0,0,0,1]],"comul":[[1]],"counit":[[1]],"antipode":[[1]],
      "phi":[[0,1]],"alpha":[1],"beta":[1]})");
  }
}

TEST_CASE("field fallback applies only when the file omits the field key") {
  const std::string no_field = R"({"schema_version":"1","kind":"algebra","dim":1,"labels":["1"],
    "unit":[1],"mult":[[0,0,0,1]]})";
  fs::path p = scratch() / "nofield.qha";
  spit(p, no_field);
  AlgebraPtr a = io::load_algebra(p.string(), Field::gf(7));
  CHECK(a->field() == Field::gf(7));
  CHECK(io::read_field(p.string(), Field::gf(7)) == Field::gf(7));

  HopfPtr H = corpus::kz2(Field::rationals());
  fs::path q = scratch() / "withfield.qha";
  io::save_quasi_hopf(q.string(), *H);
  CHECK(io::load_quasi_hopf(q.string(), Field::gf(7))->field() == Field::rationals());
}

TEST_CASE("run reports are deterministic with timings segregated") {
  io::RunReport rep;
  VerificationReport bad;
  bad.add("(q3)", "(pentagon)", "2·1", "1·1");
  rep.add("axioms", bad);
  rep.add("lemma3", VerificationReport{});
  rep.timings_us.emplace_back("axioms", 123);

  CHECK_FALSE(rep.passed());
  const std::string j = rep.to_json();
  CHECK(j == rep.to_json());
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(j.find("(q3)") != std::string::npos);
  // The checks section never contains timing data; timings live apart.
  CHECK(j.find("timings_us") > j.rfind("\"result\""));
  const std::string t = rep.to_text();
  CHECK(t.find("[FAIL] axioms") != std::string::npos);
  CHECK(t.find("[pass] lemma3") != std::string::npos);
}

TEST_CASE("CLI: exit codes on the pass / violation / malformed triple") {
  CHECK(run_cli("verify " + kCorpus + "/h2.qha") == 0);
  CHECK(run_cli("verify " + kCorpus + "/kz4.qha") == 0);
  CHECK(run_cli("verify " + kCorpus + "/sweedler.qha") == 0);
  CHECK(run_cli("verify " + kCorpus + "/h2_bad_pentagon.qha") == 1);
  CHECK(run_cli("verify " + kCorpus + "/malformed.qha") == 2);
  CHECK(run_cli("verify " + kCorpus + "/does_not_exist.qha") == 2);
  CHECK(run_cli("verify") == 2);          // missing argument
  CHECK(run_cli("frobnicate x") == 2);    // unknown subcommand
  CHECK(run_cli("--help") == 0);
}

TEST_CASE("CLI: smash → verify → decompose → roundtrip pipeline") {
  fs::path d = scratch();
  HopfPtr H = corpus::h2(Field::rationals());
  io::save_module_algebra((d / "a0.qha").string(),
                          bv_construction(H->H(), LinearMap::identity(Field::rationals(), 2), H));

  const std::string hfile = kCorpus + "/h2.qha";
  CHECK(run_cli("verify " + (d / "a0.qha").string() + " --hopf " + hfile) == 0);
  // module/comodule kinds cannot be verified without the quasi-Hopf context
  CHECK(run_cli("verify " + (d / "a0.qha").string()) == 2);

  CHECK(run_cli("smash -a " + (d / "a0.qha").string() + " -H " + hfile + " -o " + (d / "b.qha").string()) == 0);
  CHECK(run_cli("verify " + (d / "b.qha").string() + " --hopf " + hfile) == 0);
  CHECK(run_cli("verify " + (d / "b.j.qha").string()) == 0);

  CHECK(run_cli("decompose -B " + (d / "b.qha").string() + " -H " + hfile + " -v " + (d / "b.j.qha").string() +
                " -o " + (d / "a1.qha").string() + " --report " + (d / "report.json").string()) == 0);
  for (const char* out : {"a1.qha", "a1.psi.qha", "a1.theta.qha"}) {
    CAPTURE(out);
    CHECK(fs::exists(d / out));
  }
  const std::string report = slurp(d / "report.json");
  CHECK(report.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(report.find("dim(A)=2") != std::string::npos);
  // recovered A re-verifies and matches the input dimension
  ModuleAlgebra a1 = io::load_module_algebra((d / "a1.qha").string(), H);
  CHECK(a1.dim == 2);
  CHECK(verify_module_algebra(a1).ok());

  CHECK(run_cli("roundtrip -a " + (d / "a0.qha").string() + " -H " + hfile) == 0);

  // a morphism violating the comodule-morphism preconditions is a math failure
  io::save_morphism((d / "badv.qha").string(), LinearMap(Field::rationals(), 4, 2));
  CHECK(run_cli("decompose -B " + (d / "b.qha").string() + " -H " + hfile + " -v " + (d / "badv.qha").string() +
                " -o " + (d / "junk.qha").string()) == 1);
}

TEST_CASE("CLI: --field override selects GF(7)") {
  fs::path d = scratch();
  const std::string no_field = R"({"schema_version":"1","kind":"algebra","dim":1,"labels":["e"],
    "unit":[1],"mult":[[0,0,0,8]]})";
  spit(d / "gfalg.qha", no_field);
  // the structure constant 8 reduces to 1 over GF(7) (unital algebra) but to
  // 3 over GF(5) (broken unit law), so the field choice is observable
  CHECK(run_cli("--field gf:7 verify " + (d / "gfalg.qha").string()) == 0);
  CHECK(run_cli("--field gf:5 verify " + (d / "gfalg.qha").string()) == 1);
  CHECK(run_cli("--field gf:6 verify " + (d / "gfalg.qha").string()) == 2); // 6 is not prime
}
