#pragma once

#include "qha/quasi_hopf.hpp"

namespace qha {

/// Left H-module algebra. The multiplication table is NOT required to be
/// associative; (ma1) is the only compatibility law.
struct ModuleAlgebra {
  HopfPtr H;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap mult;   // dim² → dim
  CoordVector unit;
  LinearMap action; // dim H · dim → dim, h⊗a ↦ h·a (left factor major)

  CoordVector act(const AlgebraElement& h, const CoordVector& a) const {
    CoordVector out(a.field(), dim);
    for (const auto& [ih, ch] : h.coords().terms())
      for (const auto& [ia, ca] : a.terms()) {
        const Scalar c = ch * ca;
        for (std::size_t r = 0; r < dim; ++r) out[r] += c * action.at(r, ih * dim + ia);
      }
    return out;
  }
  CoordVector amul(const CoordVector& a, const CoordVector& b) const {
    CoordVector out(a.field(), dim);
    for (const auto& [ia, ca] : a.terms())
      for (const auto& [ib, cb] : b.terms()) {
        const Scalar c = ca * cb;
        for (std::size_t r = 0; r < dim; ++r) out[r] += c * mult.at(r, ia * dim + ib);
      }
    return out;
  }
  CoordVector basis(std::size_t i) const {
    CoordVector c(unit.field(), dim);
    c[i] = Scalar::one(unit.field());
    return c;
  }
};

/// Right H-comodule algebra (B, ρ, Φ_ρ).
struct ComoduleAlgebra {
  HopfPtr H;
  AlgebraPtr B, BH, BHH, BHHH; // cached B⊗H^k tensor algebras
  LinearMap coaction;          // dim B → dim B · dim H
  AlgebraElement phi_rho, phi_rho_inv; // in B⊗H⊗H
};

/// Result of the smash product construction: A#H with its comodule
/// structure and the canonical morphism j(h) = 1#h.
struct SmashProduct {
  ComoduleAlgebra CA;
  LinearMap j; // dim H → dim A · dim H
};

struct Lemma1Result {
  bool lulu_associative = false;
  bool ma1_holds = false;
  bool ma2_holds = false;
  VerificationReport report; // witnesses for whichever direction failed
};

/// Attach the B⊗H^k caches to a comodule algebra over H.
ComoduleAlgebra make_comodule_algebra(HopfPtr H, AlgebraPtr B, LinearMap coaction, CoordVector phi_rho,
                                      CoordVector phi_rho_inv);

/// H as a right H-comodule algebra over itself: ρ = Δ, Φ_ρ = Φ.
ComoduleAlgebra comodule_of_H(HopfPtr H);

/// A = k with the ε-action and trivial multiplication.
ModuleAlgebra trivial_module_algebra(HopfPtr H);

/// Module action laws, (ma1), (ma2), (ma3), exhaustively over basis indices.
VerificationReport verify_module_algebra(const ModuleAlgebra& ma);

/// (rca1)–(rca4), ρ an algebra map, Φ_ρ invertible.
VerificationReport verify_comodule_algebra(const ComoduleAlgebra& ca);

/// Algebra morphism + ρ'∘f = (f⊗id)∘ρ + Φ_ρ' = (f⊗id⊗id)(Φ_ρ).
VerificationReport check_comodule_algebra_morphism(const LinearMap& f, const ComoduleAlgebra& src,
                                                   const ComoduleAlgebra& dst);

/// A#H with multiplication (sm1), coaction ρ(a#h) = (x¹·a # x²h₁)⊗x³h₂,
/// Φ_ρ = (1#X¹)⊗X²⊗X³, and j(h) = 1#h. Everything built here is verified;
/// any failure aborts with the offending report.
SmashProduct smash_product(const ModuleAlgebra& ma);

/// B^v: multiplication (mult), unit v(β), action h▷b = v(h₁)bv(S(h₂)).
/// v must be a verified algebra map H → B; the result must verify as a
/// module algebra.
ModuleAlgebra bv_construction(AlgebraPtr B, const LinearMap& v, HopfPtr H);

/// i_0: A → A#H, i_0(a) = p¹·a # p². Verified injective and a morphism of
/// module algebras A → (A#H)^j.
struct I0Result {
  LinearMap map;
  VerificationReport report;
};
I0Result i0_map(const ModuleAlgebra& ma);

/// Lemma 2.1: builds the multiplication (lulu) on A⊗H from the candidate's
/// action and multiplication and reports associativity, (ma1) and (ma2)
/// separately, so the implication is empirically witnessed.
Lemma1Result lemma1_check(const ModuleAlgebra& candidate);

} // namespace qha
