// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include "qha/corpus.hpp"
#include "qha/io.hpp"
#include "qha/structure.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace qha;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const Field Q = Field::rationals();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool has_axiom(const VerificationReport& rep, const std::string& tag) {
  for (const auto& v : rep.violations)
    if (v.axiom == tag) return true;
  return false;
}

std::ostringstream why; // populated by a failing criterion

bool expect(bool cond, const std::string& what) {
  if (!cond) why << "  failed: " << what << "\n";
  return cond;
}

// ---------------------------------------------------------------------------
// 1. Axiom suite: corpus passes verify_quasi_hopf; perturbations name axioms.
bool axiom_suite() {
  bool ok = true;
  for (const auto& [name, hq] : corpus::all(Q)) {
    const auto t0 = Clock::now();
    ok &= expect(verify_quasi_hopf(*hq).ok(), name + " axioms");
    ok &= expect(seconds_since(t0) < 1.0, name + " under 1 s");
  }
  // single perturbed Φ coefficient (−2 → −3 in the H(2) reassociator)
  {
    auto good = corpus::h2(Q);
    CoordVector phi(Q, 8);
    Scalar c(Q, 3, 8);
    for (std::size_t i = 0; i < 8; ++i) {
      auto idx = split_index(i, {2, 2, 2});
      phi[i] = ((idx[0] + idx[1] + idx[2]) % 2 == 0) ? -c : c;
      if (i == 0) phi[i] += Scalar::one(Q);
    }
    auto bad = make_quasi_hopf(good->H(), good->base.comul, good->base.counit, phi, std::nullopt, good->antipode,
                               good->alpha.coords(), good->beta.coords());
    ok &= expect(has_axiom(verify_quasi_hopf(*bad), "(q3)"), "pentagon perturbation names (q3)");
  }
  // α replaced by 1 in H(2)
  {
    auto good = corpus::h2(Q);
    auto bad = make_quasi_hopf(good->H(), good->base.comul, good->base.counit, good->base.phi.coords(),
                               good->base.phi_inv.coords(), good->antipode, good->H()->unit(), good->beta.coords());
    ok &= expect(has_axiom(verify_quasi_hopf(*bad), "(q6)"), "alpha perturbation names (q6)");
  }
  // single perturbed coproduct coefficient in k[Z/2]: Δ(g) += 1⊗1
  {
    auto good = corpus::kz2(Q);
    LinearMap comul = good->base.comul;
    comul.at(0, 1) += Scalar::one(Q);
    auto bad = make_quasi_hopf(good->H(), comul, good->base.counit, good->base.phi.coords(),
                               good->base.phi_inv.coords(), good->antipode, good->alpha.coords(),
                               good->beta.coords());
    ok &= expect(has_axiom(verify_quasi_hopf(*bad), "(q2)"), "coproduct perturbation names (q2)");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Identity suite: (unu), (trei), (cucu), (lema3); Hopf collapse of p_R/q_R.
bool identity_suite() {
  bool ok = true;
  for (const auto& [name, hq] : corpus::all(Q)) {
    const auto t0 = Clock::now();
    auto pq = compute_pq(*hq);
    ok &= expect(verify_pq_identities(*hq, pq).ok(), name + " pq identities");
    ok &= expect(verify_lemma3(*hq).ok(), name + " lemma3");
    ok &= expect(seconds_since(t0) < 1.0, name + " under 1 s");
    if (name != "h2") { // Hopf specializations: trivial reassociator
      ok &= expect(pq.p_R == AlgebraElement::unit(hq->H2()), name + " p_R = 1⊗1");
      ok &= expect(pq.q_R == AlgebraElement::unit(hq->H2()), name + " q_R = 1⊗1");
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Smash suite: A#H verifies for A ∈ {k, H^id}; j is a comodule morphism;
//    (lulu)-associativity ⇔ (ma1) ∧ (ma2).
bool smash_suite() {
  bool ok = true;
  const auto t0 = Clock::now();
  for (const auto& [name, hq] : corpus::all(Q)) {
    for (bool adjoint : {false, true}) {
      ModuleAlgebra A = adjoint ? bv_construction(hq->H(), LinearMap::identity(Q, hq->dim()), hq)
                                : trivial_module_algebra(hq);
      const std::string label = name + (adjoint ? "^id" : " trivial");
      try {
        SmashProduct sp = smash_product(A); // associativity + (rca1)-(rca4) verified inside
        ok &= expect(check_comodule_algebra_morphism(sp.j, comodule_of_H(hq), sp.CA).ok(),
                     label + " j comodule morphism");
      } catch (const VerificationError& e) {
        ok = expect(false, label + " smash: " + e.what());
      }
      Lemma1Result lr = lemma1_check(A);
      ok &= expect(lr.lulu_associative == (lr.ma1_holds && lr.ma2_holds), label + " lemma 2.1 equivalence");
      ok &= expect(lr.lulu_associative, label + " lulu associative");
    }
  }
  { // broken (ma1) candidate: the equivalence must hold in the failing direction too
    auto hq = corpus::h2(Q);
    ModuleAlgebra bad = bv_construction(hq->H(), LinearMap::identity(Q, 2), hq);
    bad.mult.at(0, 1) += Scalar::one(Q);
    Lemma1Result lr = lemma1_check(bad);
    ok &= expect(!lr.ma1_holds && !lr.lulu_associative, "broken (ma1) candidate fails both sides");
    ok &= expect(lr.lulu_associative == (lr.ma1_holds && lr.ma2_holds), "lemma 2.1 equivalence (broken case)");
  }
  ok &= expect(seconds_since(t0) < 5.0, "smash suite under 5 s");
  return ok;
}

// ---------------------------------------------------------------------------
// 4. E-property suite: seven projection properties + coinvariant
//    characterizations on every corpus bimodule; E(1)=1; E(a#h)=ε(h)(a#1).
bool e_property_suite() {
  bool ok = true;
  for (const auto& [name, hq] : corpus::all(Q)) {
    // regular bimodule: B = H, v = id
    QuasiHopfBimodule M = bimodule_from_comodule(comodule_of_H(hq), LinearMap::identity(Q, hq->dim()));
    LinearMap E = projection_E(M);
    ok &= expect(verify_E_properties(M, E).ok(), name + " regular E properties");
    ok &= expect(E.apply(hq->H()->unit()) == hq->H()->unit(), name + " E(1)=1");

    // smash bimodule: B = A#H with v = j
    SmashProduct sp = smash_product(trivial_module_algebra(hq));
    QuasiHopfBimodule Ms = bimodule_from_comodule(sp.CA, sp.j);
    LinearMap Es = projection_E(Ms);
    ok &= expect(verify_E_properties(Ms, Es).ok(), name + " smash E properties");
    // E(a#h) = ε(h)(a#1) on all basis pairs (A here is 1-dimensional: a = 1)
    const std::size_t n = hq->dim(), da = sp.CA.B->dim() / n;
    for (std::size_t ia = 0; ia < da; ++ia)
      for (std::size_t ih = 0; ih < n; ++ih) {
        CoordVector ah(Q, da * n);
        ah[ia * n + ih] = Scalar::one(Q);
        CoordVector expected(Q, da * n);
        expected[ia * n + 0] = hq->eps(hq->basis(ih)); // basis 0 of H is the unit in every corpus algebra
        if (Es.apply(ah) != expected) {
          ok = expect(false, name + " E(a#h)=ε(h)(a#1) at a=" + std::to_string(ia) + ", h=" + std::to_string(ih));
        }
      }
  }
  // the same identity where A is 2-dimensional
  {
    auto hq = corpus::h2(Q);
    SmashProduct sp = smash_product(bv_construction(hq->H(), LinearMap::identity(Q, 2), hq));
    QuasiHopfBimodule Ms = bimodule_from_comodule(sp.CA, sp.j);
    LinearMap Es = projection_E(Ms);
    ok &= expect(verify_E_properties(Ms, Es).ok(), "h2^id smash E properties");
    for (std::size_t ia = 0; ia < 2; ++ia)
      for (std::size_t ih = 0; ih < 2; ++ih) {
        CoordVector ah(Q, 4), expected(Q, 4);
        ah[ia * 2 + ih] = Scalar::one(Q);
        expected[ia * 2] = hq->eps(hq->basis(ih));
        ok &= expect(Es.apply(ah) == expected, "h2^id E(a#h)=ε(h)(a#1)");
      }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Structure theorem: decompose(smash(A₀,H), j) recovers A₀ exactly.
bool structure_theorem() {
  bool ok = true;
  for (const auto& [name, hq] : corpus::all(Q)) {
    for (bool adjoint : {false, true}) {
      ModuleAlgebra A0 = adjoint ? bv_construction(hq->H(), LinearMap::identity(Q, hq->dim()), hq)
                                 : trivial_module_algebra(hq);
      const std::string label = name + (adjoint ? "^id" : " trivial");
      const auto t0 = Clock::now();
      SmashProduct sp = smash_product(A0);
      try {
        SmashDecomposition D = decompose(sp.CA, sp.j); // Ψ two-sided inverse, colinearity, Ψ∘j=v all verified
        ok &= expect(D.A.dim == A0.dim, label + " dim A = dim A₀");
      } catch (const VerificationError& e) {
        ok = expect(false, label + " decompose: " + e.what());
      }
      ok &= expect(roundtrip(A0).ok(), label + " roundtrip (a#1 ↦ a iso)");
      if (name == "sweedler" && adjoint) // largest case: dim B = 16
        ok &= expect(seconds_since(t0) < 30.0, "sweedler^id under 30 s");
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. θ suite: θ = Ψ∘i₀, rank θ = dim A, multiplicative into B^v; inclusion
//    matrix in the Hopf cases.
bool theta_suite() {
  bool ok = true;
  for (const auto& [name, hq] : corpus::all(Q)) {
    SmashProduct sp = smash_product(trivial_module_algebra(hq));
    SmashDecomposition D = decompose(sp.CA, sp.j);
    try {
      LinearMap theta = theta_map(D, sp.CA, sp.j); // θ=Ψ∘i₀, rank, multiplicativity verified inside
      ok &= expect(rank(theta) == D.A.dim, name + " rank θ = dim A");
      if (name != "h2") // Hopf case: p_R = 1⊗1 makes θ the inclusion of the coinvariants
        for (std::size_t i = 0; i < D.A.dim; ++i)
          ok &= expect(theta.column(i) == D.coinv_basis[i], name + " θ is the inclusion matrix");
    } catch (const VerificationError& e) {
      ok = expect(false, name + " theta: " + e.what());
    }
  }
  for (const auto& name : {std::string("kz2"), std::string("h2")}) { // 2-dim coinvariants
    auto hq = name == "kz2" ? corpus::kz2(Q) : corpus::h2(Q);
    SmashProduct sp = smash_product(bv_construction(hq->H(), LinearMap::identity(Q, 2), hq));
    SmashDecomposition D = decompose(sp.CA, sp.j);
    try {
      LinearMap theta = theta_map(D, sp.CA, sp.j);
      ok &= expect(rank(theta) == D.A.dim, name + "^id rank θ = dim A");
      if (name == "kz2")
        for (std::size_t i = 0; i < D.A.dim; ++i)
          ok &= expect(theta.column(i) == D.coinv_basis[i], "kz2^id θ is the inclusion matrix");
    } catch (const VerificationError& e) {
      ok = expect(false, name + "^id theta: " + e.what());
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Transport of structure: conjugating A₀#H by a random invertible basis
//    change (ρ, Φ_ρ, v transported along) still decomposes with dim A = dim A₀.
bool transport_case(Field f, HopfPtr hq, const ModuleAlgebra& A0, std::mt19937& rng, const std::string& label,
                    bool& ok) {
  SmashProduct sp = smash_product(A0);
  const std::size_t n = sp.CA.B->dim(), m = hq->dim();

  LinearMap T(f, n, n), Tinv(f, n, n);
  for (;;) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) T.at(r, c) = Scalar(f, Int(static_cast<int>(rng() % 5) - 2));
    if (auto inv = invert_map(T)) {
      Tinv = *inv;
      break;
    }
  }

  std::vector<MultTriple> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement lhs(sp.CA.B, T.column(i)), rhs(sp.CA.B, T.column(j));
      CoordVector prod = Tinv.apply(multiply(lhs, rhs).coords());
      for (const auto& [k, c] : prod.terms()) triples.push_back({i, j, k, c});
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  AlgebraPtr Bp = BasedAlgebra::make(f, labels, triples, Tinv.apply(sp.CA.B->unit()));

  LinearMap coaction = kron(Tinv, LinearMap::identity(f, m)).compose(sp.CA.coaction.compose(T));
  LinearMap lift = kron(Tinv, LinearMap::identity(f, m * m));
  ComoduleAlgebra Bca = make_comodule_algebra(hq, Bp, coaction, lift.apply(sp.CA.phi_rho.coords()),
                                              lift.apply(sp.CA.phi_rho_inv.coords()));
  LinearMap v = Tinv.compose(sp.j);

  ok &= expect(verify_comodule_algebra(Bca).ok(), label + " transported B verifies");
  try {
    SmashDecomposition D = decompose(Bca, v);
    ok &= expect(D.A.dim == A0.dim, label + " dim A = dim A₀");
  } catch (const VerificationError& e) {
    ok = expect(false, label + " decompose: " + e.what());
  }
  return ok;
}

bool transport_of_structure() {
  bool ok = true;
  std::mt19937 rng(20260823);
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    const std::string fs = f.to_string();
    auto h2 = corpus::h2(f);
    transport_case(f, h2, bv_construction(h2->H(), LinearMap::identity(f, 2), h2), rng, "h2^id/" + fs, ok);
    auto sw = corpus::sweedler(f);
    transport_case(f, sw, trivial_module_algebra(sw), rng, "sweedler trivial/" + fs, ok);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 8. CLI contract: exit codes on the pass/violation/malformed triple and
//    write-read-verify idempotence of every emitted file.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(QHA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

bool cli_contract() {
  bool ok = true;
  const std::string corpus_dir = QHA_CORPUS_DIR;
  ok &= expect(run_cli("verify " + corpus_dir + "/h2.qha") == 0, "pass fixture → exit 0");
  ok &= expect(run_cli("verify " + corpus_dir + "/h2_bad_pentagon.qha") == 1, "violation fixture → exit 1");
  ok &= expect(run_cli("verify " + corpus_dir + "/malformed.qha") == 2, "malformed fixture → exit 2");

  fs::path d = fs::temp_directory_path() / "qha_acceptance";
  fs::create_directories(d);
  auto hq = corpus::h2(Q);
  io::save_module_algebra((d / "a0.qha").string(), bv_construction(hq->H(), LinearMap::identity(Q, 2), hq));
  const std::string hfile = corpus_dir + "/h2.qha";
  ok &= expect(run_cli("smash -a " + (d / "a0.qha").string() + " -H " + hfile + " -o " + (d / "b.qha").string()) == 0,
               "smash exits 0");
  ok &= expect(run_cli("verify " + (d / "b.qha").string() + " --hopf " + hfile) == 0, "emitted smash re-verifies");
  ok &= expect(run_cli("verify " + (d / "b.j.qha").string()) == 0, "emitted j re-verifies");
  ok &= expect(run_cli("decompose -B " + (d / "b.qha").string() + " -H " + hfile + " -v " + (d / "b.j.qha").string() +
                       " -o " + (d / "a1.qha").string()) == 0,
               "decompose exits 0");
  ok &= expect(run_cli("verify " + (d / "a1.qha").string() + " --hopf " + hfile) == 0, "emitted A re-verifies");
  ok &= expect(run_cli("roundtrip -a " + (d / "a0.qha").string() + " -H " + hfile) == 0, "roundtrip exits 0");
  return ok;
}

struct Criterion {
  const char* name;
  bool (*run)();
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"axiom suite (corpus passes; perturbations name the axiom; < 1 s each)", axiom_suite},
      {"identity suite ((unu), (trei), (cucu), (lema3); Hopf p_R = q_R = 1⊗1)", identity_suite},
      {"smash suite (A#H verifies; j comodule morphism; lemma 2.1 equivalence)", smash_suite},
      {"E-property suite (projection laws; coinvariant characterizations; E(a#h)=ε(h)(a#1))", e_property_suite},
      {"structure theorem (decompose ∘ smash recovers A₀; sweedler dim 16 < 30 s)", structure_theorem},
      {"theta suite (θ = Ψ∘i₀; rank = dim A; inclusion in Hopf cases)", theta_suite},
      {"transport of structure (random basis change, rationals and GF(7))", transport_of_structure},
      {"CLI contract (exit codes 0/1/2; emitted files re-verify)", cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    why.str("");
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << ": " << c.name << "\n";
    if (!ok) {
      ++failures;
      if (!error.empty()) std::cout << "  exception: " << error << "\n";
      std::cout << why.str();
    }
  }
  return failures == 0 ? 0 : 1;
}
