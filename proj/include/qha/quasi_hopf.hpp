#pragma once

#include "qha/algebra.hpp"

#include <memory>
#include <optional>

namespace qha {

/// Quasi-bialgebra (H, Δ, ε, Φ). Tensor powers of H are cached here so every
/// consumer shares the same index convention (left factor major).
struct QuasiBialgebra {
  AlgebraPtr H, H2, H3, H4;
  LinearMap comul;  // dim → dim², the coproduct Δ
  LinearMap counit; // dim → 1, ε
  AlgebraElement phi, phi_inv; // reassociator and its inverse, in H⊗H⊗H
};

/// Quasi-Hopf algebra: quasi-bialgebra with anti-automorphism S and α, β.
struct QuasiHopfAlgebra {
  QuasiBialgebra base;
  LinearMap antipode, antipode_inv;
  AlgebraElement alpha, beta; // in H

  const AlgebraPtr& H() const { return base.H; }
  const AlgebraPtr& H2() const { return base.H2; }
  const AlgebraPtr& H3() const { return base.H3; }
  const AlgebraPtr& H4() const { return base.H4; }
  std::size_t dim() const { return base.H->dim(); }
  Field field() const { return base.H->field(); }

  Scalar eps(const AlgebraElement& x) const { return base.counit.apply(x.coords())[0]; }
  AlgebraElement S(const AlgebraElement& x) const { return apply_map(base.H, antipode, x); }
  AlgebraElement S_inv(const AlgebraElement& x) const { return apply_map(base.H, antipode_inv, x); }
  AlgebraElement basis(std::size_t i) const { return AlgebraElement::basis(base.H, i); }
  AlgebraElement one() const { return AlgebraElement::unit(base.H); }

  /// Δ(e_i) as an element of H⊗H.
  AlgebraElement comul_basis(std::size_t i) const {
    return AlgebraElement(base.H2, base.comul.column(i));
  }
};

using HopfPtr = std::shared_ptr<const QuasiHopfAlgebra>;

struct PQElements {
  AlgebraElement p_R, q_R; // in H⊗H
};

/// Assemble a quasi-Hopf algebra from raw data. Builds the tensor powers,
/// inverts the antipode, and obtains Φ⁻¹ by inversion when not supplied
/// (a supplied Φ⁻¹ is kept and later verified as a two-sided inverse).
HopfPtr make_quasi_hopf(AlgebraPtr H, LinearMap comul, LinearMap counit, const CoordVector& phi_coords,
                        std::optional<CoordVector> phi_inv_coords, LinearMap antipode, CoordVector alpha_coords,
                        CoordVector beta_coords);

/// (q1)–(q4), (q7), Δ/ε morphisms, Φ⁻¹ two-sidedness.
VerificationReport verify_quasi_bialgebra(const QuasiBialgebra& qb);

/// Full suite: the quasi-bialgebra checks plus the anti-automorphism
/// property, (q5), (q6), and the ε(α)=ε(β)=1, ε∘S=ε normalizations.
VerificationReport verify_quasi_hopf(const QuasiHopfAlgebra& hq);

/// Rescale α' = ε(β)α, β' = ε(α)β. Requires ε(α)ε(β) = 1.
QuasiHopfAlgebra normalize_alpha_beta(const QuasiHopfAlgebra& hq);

/// p_R = x¹ ⊗ x²βS(x³), q_R = X¹ ⊗ S⁻¹(αX³)X².
PQElements compute_pq(const QuasiHopfAlgebra& hq);

/// (unu) both halves, (trei) both relations for every basis h, (cucu).
VerificationReport verify_pq_identities(const QuasiHopfAlgebra& hq, const PQElements& pq);

/// (lema3): the three-leg contraction of q_R with three copies of Φ⁻¹
/// equals 1⊗1⊗1.
VerificationReport verify_lemma3(const QuasiHopfAlgebra& hq);

} // namespace qha
