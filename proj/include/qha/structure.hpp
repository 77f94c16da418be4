#pragma once

#include "qha/representations.hpp"

namespace qha {

/// Left H-module on an abstract carrier: action is dim H · dim → dim.
struct LeftModule {
  HopfPtr H;
  std::size_t dim = 0;
  LinearMap action;

  CoordVector act(const AlgebraElement& h, const CoordVector& m) const {
    return action.apply(kron(h.coords(), m));
  }
};

/// 1·m = m and (hh')·m = h·(h'·m) on basis elements.
VerificationReport verify_left_module(const LeftModule& V);

/// H-bimodule M with a bimodule coaction ρ satisfying (qb1),(qb2).
struct QuasiHopfBimodule {
  HopfPtr H;
  std::size_t dim = 0;
  LinearMap left_action;  // dim H · dim → dim
  LinearMap right_action; // dim · dim H → dim
  LinearMap coaction;     // dim → dim · dim H

  CoordVector lact(const AlgebraElement& h, const CoordVector& m) const {
    return left_action.apply(kron(h.coords(), m));
  }
  CoordVector ract(const CoordVector& m, const AlgebraElement& h) const {
    return right_action.apply(kron(m, h.coords()));
  }
  CoordVector basis(std::size_t i) const {
    CoordVector c(H->field(), dim);
    c[i] = Scalar::one(H->field());
    return c;
  }
};

/// Bimodule axioms, ρ an H-bimodule map (diagonal structure on M⊗H),
/// (qb1) and (qb2).
VerificationReport verify_bimodule(const QuasiHopfBimodule& M);

/// V⊗H with a·(v⊗h)·b = (a₁·v)⊗a₂hb and ρ(v⊗h) = (x¹·v⊗x²h₁)⊗x³h₂.
QuasiHopfBimodule vh_bimodule(const LeftModule& V);

/// B as a bimodule via v (h·b·h' = v(h)bv(h')) with the comodule coaction.
/// Requires ρ(v(h)) = v(h₁)⊗h₂ and Φ_ρ = v(X¹)⊗X²⊗X³; throws otherwise.
QuasiHopfBimodule bimodule_from_comodule(const ComoduleAlgebra& B, const LinearMap& v);

/// E(m) = q¹·m₍₀₎·βS(q²m₍₁₎); idempotence asserted (throws on failure).
LinearMap projection_E(const QuasiHopfBimodule& M);

/// The seven projection properties plus the coinvariant characterization
/// ρ(n) = (x¹▷n)·x²⊗x³ on the image basis of E.
VerificationReport verify_E_properties(const QuasiHopfBimodule& M, const LinearMap& E);

/// Coinvariants of M with the induced data.
struct CoinvariantDecomposition {
  LinearMap E;
  std::vector<CoordVector> coinv_basis; // deterministic echelon basis of image(E)
  LinearMap triangle_action;            // intrinsic: dim H · r → r, h▷m = E(h·m)
  LinearMap nu;                         // V⊗H → M, v⊗h ↦ v·h
  LinearMap nu_inv;                     // M → V⊗H, m ↦ E(m₍₀₎)⊗m₍₁₎
  VerificationReport report;
};

/// Image basis of E and the intrinsic ▷ action (module axioms verified).
CoinvariantDecomposition coinvariants(const QuasiHopfBimodule& M, const LinearMap& E);

/// Full structure isomorphism ν/ν⁻¹ between coinv(M)⊗H and M; mutual
/// inverses and the bimodule-morphism conditions are verified.
CoinvariantDecomposition bimodule_structure_iso(const QuasiHopfBimodule& M);

/// Shared state for the comodule-algebra structure theorem: B with v,
/// the induced bimodule, q_R/p_R, and the projection E.
struct CoinvariantContext {
  ComoduleAlgebra CA;
  LinearMap v;
  QuasiHopfBimodule M;
  PQElements pq;
  LinearMap E;

  AlgebraElement velem(const AlgebraElement& h) const {
    return AlgebraElement(CA.B, v.apply(h.coords()));
  }
  CoordVector bmul(const CoordVector& a, const CoordVector& b) const {
    return multiply(AlgebraElement(CA.B, a), AlgebraElement(CA.B, b)).coords();
  }
  /// h▷b = E(v(h)b)
  CoordVector triangle(const AlgebraElement& h, const CoordVector& b) const {
    return E.apply(bmul(v.apply(h.coords()), b));
  }
  bool is_coinvariant(const CoordVector& b) const { return E.apply(b) == b; }
};

CoinvariantContext make_coinvariant_context(const ComoduleAlgebra& B, const LinearMap& v);

/// a*a' = E(aa'), computed both as written and via the expanded
/// v(q¹)(t¹▷a)v(t²)(z¹▷a')v(z²βS(q²t³z³)) form; the two must agree.
/// Throws FieldError if a or a' is not coinvariant.
CoordVector star_multiply(const CoinvariantContext& ctx, const CoordVector& a, const CoordVector& a2);

/// The recovered module algebra together with the comodule isomorphism.
struct SmashDecomposition {
  ModuleAlgebra A;                      // carrier = coinvariants, mult = *, action = ▷
  std::vector<CoordVector> coinv_basis; // A's basis vectors inside B
  LinearMap E;
  LinearMap Psi;     // A⊗H → B, a⊗h ↦ a·v(h)
  LinearMap Psi_inv; // B → A⊗H, b ↦ E(b₍₀₎)⊗b₍₁₎
  VerificationReport report;
};

/// The structure theorem: B ≅ A#H as comodule algebras. All assembled maps
/// are verified; any failure throws VerificationError with the report.
SmashDecomposition decompose(const ComoduleAlgebra& B, const LinearMap& v);

/// θ(a) = (p¹▷a)v(p²); verified equal to Ψ∘i₀, injective, and a
/// module-algebra morphism A → B^v. Throws VerificationError on failure.
LinearMap theta_map(const SmashDecomposition& D, const ComoduleAlgebra& B, const LinearMap& v);

/// smash then decompose: checks E(a#h)=ε(h)(a#1), star and ▷ on A#1, and
/// that a ↦ a#1 induces a module-algebra isomorphism A0 → recovered A.
VerificationReport roundtrip(const ModuleAlgebra& A0);

} // namespace qha
