#include "qha/corpus.hpp"
#include "qha/io.hpp"
#include "qha/structure.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace qha;
using io::RunReport;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

Field parse_field(const std::string& spec) {
  try {
    return Field::parse(spec);
  } catch (const FieldError& e) {
    throw io::ParseError(std::string("--field: ") + e.what());
  }
}

/// out.qha → out<tag>.qha (companion files written next to the main output).
std::string companion_path(std::string out, const std::string& tag) {
  if (out.size() >= 4 && out.ends_with(".qha")) out.erase(out.size() - 4);
  return out + tag + ".qha";
}

/// Runs one named check, recording its result and wall time.
template <typename F>
void timed_check(RunReport& rep, const std::string& id, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = f();
  const auto t1 = std::chrono::steady_clock::now();
  rep.add(id, r);
  rep.timings_us.emplace_back(id, std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
}

int finish(const RunReport& rep, const std::string& report_path) {
  std::cout << rep.to_text();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw io::ParseError(report_path + ": cannot open for writing");
    out << rep.to_json();
  }
  return rep.passed() ? kExitPass : kExitViolation;
}

HopfPtr load_verified_hopf(const std::string& path, Field fallback, RunReport& rep) {
  HopfPtr H = io::load_quasi_hopf(path, fallback);
  timed_check(rep, "quasi-hopf(" + path + ")", [&] { return verify_quasi_hopf(*H); });
  return H;
}

int cmd_verify(const std::string& path, const std::string& hopf_path, Field fallback,
               const std::string& report_path) {
  RunReport rep;
  const io::FileKind kind = io::read_kind(path);
  switch (kind) {
    case io::FileKind::Algebra: {
      AlgebraPtr a = io::load_algebra(path, fallback);
      timed_check(rep, "associative-unital", [&] { return verify_associative_unital(*a); });
      break;
    }
    case io::FileKind::QuasiHopf: {
      HopfPtr H = io::load_quasi_hopf(path, fallback);
      timed_check(rep, "quasi-hopf-axioms", [&] { return verify_quasi_hopf(*H); });
      timed_check(rep, "pq-identities", [&] { return verify_pq_identities(*H, compute_pq(*H)); });
      timed_check(rep, "lemma3", [&] { return verify_lemma3(*H); });
      break;
    }
    case io::FileKind::ModuleAlgebra: {
      if (hopf_path.empty())
        throw io::ParseError(path + ": verifying a module_algebra file needs --hopf <quasi_hopf file>");
      HopfPtr H = load_verified_hopf(hopf_path, fallback, rep);
      ModuleAlgebra ma = io::load_module_algebra(path, H);
      timed_check(rep, "module-algebra", [&] { return verify_module_algebra(ma); });
      break;
    }
    case io::FileKind::ComoduleAlgebra: {
      if (hopf_path.empty())
        throw io::ParseError(path + ": verifying a comodule_algebra file needs --hopf <quasi_hopf file>");
      HopfPtr H = load_verified_hopf(hopf_path, fallback, rep);
      ComoduleAlgebra ca = io::load_comodule_algebra(path, H);
      timed_check(rep, "comodule-algebra", [&] { return verify_comodule_algebra(ca); });
      break;
    }
    case io::FileKind::Morphism: {
      io::load_morphism(path, fallback); // shape-checked; nothing to verify standalone
      rep.checks.push_back({"morphism-parse", true, {}});
      break;
    }
  }
  return finish(rep, report_path);
}

int cmd_smash(const std::string& a_path, const std::string& h_path, const std::string& out_path, Field fallback) {
  RunReport rep;
  HopfPtr H = load_verified_hopf(h_path, fallback, rep);
  ModuleAlgebra ma = io::load_module_algebra(a_path, H);
  timed_check(rep, "module-algebra(" + a_path + ")", [&] { return verify_module_algebra(ma); });
  if (!rep.passed()) return finish(rep, "");

  SmashProduct sp = smash_product(ma); // verifies its own output, throws on failure
  io::save_comodule_algebra(out_path, sp.CA);
  io::save_morphism(companion_path(out_path, ".j"), sp.j);
  rep.checks.push_back({"smash-output-verified", true, {}});
  return finish(rep, "");
}

int cmd_decompose(const std::string& b_path, const std::string& h_path, const std::string& v_path,
                  const std::string& out_path, Field fallback, const std::string& report_path) {
  RunReport rep;
  HopfPtr H = load_verified_hopf(h_path, fallback, rep);
  ComoduleAlgebra B = io::load_comodule_algebra(b_path, H);
  timed_check(rep, "comodule-algebra(" + b_path + ")", [&] { return verify_comodule_algebra(B); });
  LinearMap v = io::load_morphism(v_path, fallback);
  if (!rep.passed()) return finish(rep, report_path);

  SmashDecomposition D;
  try {
    D = decompose(B, v);
  } catch (const VerificationError& e) {
    rep.checks.push_back({"structure-theorem", false, e.report.violations});
    return finish(rep, report_path);
  }
  rep.checks.push_back({"structure-theorem", true, D.report.violations});
  rep.checks.push_back({"dim(A)=" + std::to_string(D.A.dim), true, {}});

  LinearMap theta = theta_map(D, B, v);
  io::save_module_algebra(out_path, D.A);
  io::save_morphism(companion_path(out_path, ".psi"), D.Psi);
  io::save_morphism(companion_path(out_path, ".theta"), theta);
  rep.checks.push_back({"theta-verified", true, {}});
  return finish(rep, report_path);
}

int cmd_roundtrip(const std::string& a_path, const std::string& h_path, Field fallback,
                  const std::string& report_path) {
  RunReport rep;
  HopfPtr H = load_verified_hopf(h_path, fallback, rep);
  ModuleAlgebra ma = io::load_module_algebra(a_path, H);
  timed_check(rep, "module-algebra(" + a_path + ")", [&] { return verify_module_algebra(ma); });
  if (!rep.passed()) return finish(rep, report_path);
  timed_check(rep, "roundtrip", [&] { return roundtrip(ma); });
  return finish(rep, report_path);
}

int cmd_make_corpus(const std::string& dir, Field f) {
  for (const auto& [name, H] : corpus::all(f)) io::save_quasi_hopf(dir + "/" + name + ".qha", *H);

  // Fixture: one perturbed reassociator coefficient breaks the pentagon (q3).
  QuasiHopfAlgebra bad = *corpus::h2(f);
  CoordVector phi = bad.base.phi.coords();
  phi[0] += Scalar::one(f);
  bad.base.phi = AlgebraElement(bad.H3(), phi);
  io::save_quasi_hopf(dir + "/h2_bad_pentagon.qha", bad);

  std::ofstream out(dir + "/malformed.qha");
  if (!out) throw io::ParseError(dir + "/malformed.qha: cannot open for writing");
  out << "{ this is not valid json\n";
  std::cout << "wrote corpus to " << dir << "\n";
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier and constructor for quasi-Hopf algebra structures"};
  app.require_subcommand(1);

  std::string field_spec = "rational";
  app.add_option("--field", field_spec, "Ground field: rational or gf:<p>")
      ->envname("QHA_FIELD")
      ->capture_default_str();

  std::string path, hopf_path, a_path, h_path, b_path, v_path, out_path, report_path, corpus_dir;

  auto* verify = app.add_subcommand("verify", "Verify all axioms for the structure in a file");
  verify->add_option("file", path)->required();
  verify->add_option("--report", report_path, "Write a machine-readable report here");
  verify->add_option("--hopf", hopf_path, "Quasi-Hopf file for module/comodule kinds");

  auto* smash = app.add_subcommand("smash", "Build the smash product A#H");
  smash->add_option("-a", a_path, "Module-algebra file")->required();
  smash->add_option("-H", h_path, "Quasi-Hopf file")->required();
  smash->add_option("-o", out_path, "Output comodule-algebra file (j written alongside)")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Recover A with B ≅ A#H from (B, v)");
  decompose_cmd->add_option("-B", b_path, "Comodule-algebra file")->required();
  decompose_cmd->add_option("-H", h_path, "Quasi-Hopf file")->required();
  decompose_cmd->add_option("-v", v_path, "Morphism file for v: H → B")->required();
  decompose_cmd->add_option("-o", out_path, "Output module-algebra file (Ψ, θ written alongside)")->required();
  decompose_cmd->add_option("--report", report_path, "Write a machine-readable report here");

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check decompose(smash(A,H), j) recovers A");
  roundtrip_cmd->add_option("-a", a_path, "Module-algebra file")->required();
  roundtrip_cmd->add_option("-H", h_path, "Quasi-Hopf file")->required();
  roundtrip_cmd->add_option("--report", report_path, "Write a machine-readable report here");

  auto* make_corpus = app.add_subcommand("make-corpus", "Write the built-in example algebras as files");
  make_corpus->add_option("dir", corpus_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    const Field f = parse_field(field_spec);
    if (*verify) return cmd_verify(path, hopf_path, f, report_path);
    if (*smash) return cmd_smash(a_path, h_path, out_path, f);
    if (*decompose_cmd) return cmd_decompose(b_path, h_path, v_path, out_path, f, report_path);
    if (*roundtrip_cmd) return cmd_roundtrip(a_path, h_path, f, report_path);
    if (*make_corpus) return cmd_make_corpus(corpus_dir, f);
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: shape mismatch: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitBadInput;
}
