#include "qha/quasi_hopf.hpp"

namespace qha {

namespace {

std::string wit(std::size_t i) { return "(h=" + std::to_string(i) + ")"; }

} // namespace

HopfPtr make_quasi_hopf(AlgebraPtr H, LinearMap comul, LinearMap counit, const CoordVector& phi_coords,
                        std::optional<CoordVector> phi_inv_coords, LinearMap antipode, CoordVector alpha_coords,
                        CoordVector beta_coords) {
  const std::size_t n = H->dim();
  if (comul.src_dim() != n || comul.dst_dim() != n * n) throw DimensionMismatch("comul shape");
  if (counit.src_dim() != n || counit.dst_dim() != 1) throw DimensionMismatch("counit shape");
  if (antipode.src_dim() != n || antipode.dst_dim() != n) throw DimensionMismatch("antipode shape");

  auto hq = std::make_shared<QuasiHopfAlgebra>();
  hq->base.H = H;
  hq->base.H2 = tensor_algebra(H, H);
  hq->base.H3 = tensor_algebra(hq->base.H2, H);
  hq->base.H4 = tensor_algebra(hq->base.H3, H);
  hq->base.comul = std::move(comul);
  hq->base.counit = std::move(counit);
  hq->base.phi = AlgebraElement(hq->base.H3, phi_coords);
  if (phi_inv_coords) {
    hq->base.phi_inv = AlgebraElement(hq->base.H3, *phi_inv_coords);
  } else {
    auto inv = invert_element(hq->base.phi);
    if (!inv) throw FieldError("reassociator Φ is not invertible");
    hq->base.phi_inv = *inv;
  }
  auto sinv = invert_map(antipode);
  if (!sinv) throw FieldError("antipode S is not invertible");
  hq->antipode = std::move(antipode);
  hq->antipode_inv = *sinv;
  hq->alpha = AlgebraElement(H, std::move(alpha_coords));
  hq->beta = AlgebraElement(H, std::move(beta_coords));
  return hq;
}

VerificationReport verify_quasi_bialgebra(const QuasiBialgebra& qb) {
  VerificationReport rep;
  const std::size_t n = qb.H->dim();
  const Field f = qb.H->field();
  const LinearMap id = LinearMap::identity(f, n);

  // Φ⁻¹ two-sided inverse of Φ
  AlgebraElement one3 = AlgebraElement::unit(qb.H3);
  if (multiply(qb.phi, qb.phi_inv) != one3 || multiply(qb.phi_inv, qb.phi) != one3)
    rep.add("(phi-inverse)", "(Φ·Φ⁻¹, Φ⁻¹·Φ)", multiply(qb.phi, qb.phi_inv).to_string(), one3.to_string());

  // Δ, ε algebra morphisms
  {
    auto r = check_algebra_morphism(qb.comul, *qb.H, *qb.H2);
    for (auto& v : r.violations) rep.add("Δ-" + v.axiom, v.witness, v.lhs, v.rhs);
    auto ground = BasedAlgebra::ground(f);
    auto r2 = check_algebra_morphism(qb.counit, *qb.H, *ground);
    for (auto& v : r2.violations) rep.add("ε-" + v.axiom, v.witness, v.lhs, v.rhs);
  }

  // (q1): (id⊗Δ)(Δ(h)) = Φ·(Δ⊗id)(Δ(h))·Φ⁻¹
  LinearMap idD = kron(id, qb.comul);
  LinearMap Did = kron(qb.comul, id);
  for (std::size_t h = 0; h < n; ++h) {
    AlgebraElement dh(qb.H2, qb.comul.column(h));
    AlgebraElement lhs = apply_map(qb.H3, idD, dh);
    AlgebraElement rhs = multiply(multiply(qb.phi, apply_map(qb.H3, Did, dh)), qb.phi_inv);
    if (lhs != rhs) rep.add("(q1)", wit(h), lhs.to_string(), rhs.to_string());
  }

  // (q2): (id⊗ε)Δ = id = (ε⊗id)Δ
  if (kron(id, qb.counit).compose(qb.comul) != id)
    rep.add("(q2)", "(id⊗ε)∘Δ", kron(id, qb.counit).compose(qb.comul).to_string(), id.to_string());
  if (kron(qb.counit, id).compose(qb.comul) != id)
    rep.add("(q2)", "(ε⊗id)∘Δ", kron(qb.counit, id).compose(qb.comul).to_string(), id.to_string());

  // (q3) pentagon, in H⊗4
  {
    AlgebraElement lhs = multiply(multiply(embed(qb.phi, 1, qb.H4), apply_map(qb.H4, kron(kron(id, qb.comul), id), qb.phi)),
                                  embed(qb.phi, 0, qb.H4));
    AlgebraElement rhs = multiply(apply_map(qb.H4, kron(kron(id, id), qb.comul), qb.phi),
                                  apply_map(qb.H4, kron(kron(qb.comul, id), id), qb.phi));
    if (lhs != rhs) rep.add("(q3)", "(pentagon)", lhs.to_string(), rhs.to_string());
  }

  // (q4): (id⊗ε⊗id)(Φ) = 1⊗1
  {
    AlgebraElement got = apply_map(qb.H2, kron(kron(id, qb.counit), id), qb.phi);
    if (got != AlgebraElement::unit(qb.H2)) rep.add("(q4)", "(id⊗ε⊗id)(Φ)", got.to_string(), "1⊗1");
  }

  // (q7): consistency guard
  {
    AlgebraElement a = apply_map(qb.H2, kron(kron(qb.counit, id), id), qb.phi);
    AlgebraElement b = apply_map(qb.H2, kron(kron(id, id), qb.counit), qb.phi);
    if (a != AlgebraElement::unit(qb.H2)) rep.add("(q7)", "(ε⊗id⊗id)(Φ)", a.to_string(), "1⊗1");
    if (b != AlgebraElement::unit(qb.H2)) rep.add("(q7)", "(id⊗id⊗ε)(Φ)", b.to_string(), "1⊗1");
  }
  return rep;
}

VerificationReport verify_quasi_hopf(const QuasiHopfAlgebra& hq) {
  VerificationReport rep = verify_quasi_bialgebra(hq.base);
  const std::size_t n = hq.dim();
  const Field f = hq.field();
  const auto& H = hq.H();

  // S anti-automorphism
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement lhs = AlgebraElement::zero(H);
      for (const auto& [k, c] : H->basis_product(i, j)) lhs += c * AlgebraElement(H, hq.antipode.column(k));
      AlgebraElement rhs = multiply(AlgebraElement(H, hq.antipode.column(j)), AlgebraElement(H, hq.antipode.column(i)));
      if (lhs != rhs)
        rep.add("S-anti-automorphism", "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")", lhs.to_string(),
                rhs.to_string());
    }
  if (hq.antipode.apply(H->unit()) != H->unit())
    rep.add("S-anti-automorphism", "(S(1))", CoordVector(hq.antipode.apply(H->unit())).to_string(), H->unit().to_string());
  if (hq.antipode.compose(hq.antipode_inv) != LinearMap::identity(f, n))
    rep.add("S-invertible", "(S∘S⁻¹)", hq.antipode.compose(hq.antipode_inv).to_string(), "id");

  // (q5): S(h₁)α h₂ = ε(h)α and h₁β S(h₂) = ε(h)β
  for (std::size_t h = 0; h < n; ++h) {
    AlgebraElement l1 = AlgebraElement::zero(H), l2 = AlgebraElement::zero(H);
    for (const auto& [ab, c] : hq.comul_basis(h).coords().terms()) {
      const std::size_t a = ab / n, b = ab % n;
      l1 += c * multiply(multiply(hq.S(hq.basis(a)), hq.alpha), hq.basis(b));
      l2 += c * multiply(multiply(hq.basis(a), hq.beta), hq.S(hq.basis(b)));
    }
    Scalar eh = hq.base.counit.at(0, h);
    if (l1 != eh * hq.alpha) rep.add("(q5)", wit(h) + " S(h₁)αh₂", l1.to_string(), (eh * hq.alpha).to_string());
    if (l2 != eh * hq.beta) rep.add("(q5)", wit(h) + " h₁βS(h₂)", l2.to_string(), (eh * hq.beta).to_string());
  }

  // (q6): X¹βS(X²)αX³ = 1 and S(x¹)αx²βS(x³) = 1
  {
    const std::vector<std::size_t> dims{n, n, n};
    AlgebraElement l1 = AlgebraElement::zero(H), l2 = AlgebraElement::zero(H);
    for (const auto& [flat, c] : hq.base.phi.coords().terms()) {
      auto idx = split_index(flat, dims);
      l1 += c * multiply(multiply(multiply(multiply(hq.basis(idx[0]), hq.beta), hq.S(hq.basis(idx[1]))), hq.alpha),
                         hq.basis(idx[2]));
    }
    for (const auto& [flat, c] : hq.base.phi_inv.coords().terms()) {
      auto idx = split_index(flat, dims);
      l2 += c * multiply(multiply(multiply(multiply(hq.S(hq.basis(idx[0])), hq.alpha), hq.basis(idx[1])), hq.beta),
                         hq.S(hq.basis(idx[2])));
    }
    if (l1 != hq.one()) rep.add("(q6)", "X¹βS(X²)αX³", l1.to_string(), "1");
    if (l2 != hq.one()) rep.add("(q6)", "S(x¹)αx²βS(x³)", l2.to_string(), "1");
  }

  // normalization: ε(α) = ε(β) = 1, ε∘S = ε
  if (!hq.eps(hq.alpha).is_one()) rep.add("normalization", "ε(α)", hq.eps(hq.alpha).to_string(), "1");
  if (!hq.eps(hq.beta).is_one()) rep.add("normalization", "ε(β)", hq.eps(hq.beta).to_string(), "1");
  if (hq.base.counit.compose(hq.antipode) != hq.base.counit)
    rep.add("normalization", "ε∘S", hq.base.counit.compose(hq.antipode).to_string(), hq.base.counit.to_string());
  return rep;
}

QuasiHopfAlgebra normalize_alpha_beta(const QuasiHopfAlgebra& hq) {
  Scalar ea = hq.eps(hq.alpha), eb = hq.eps(hq.beta);
  if (ea * eb != Scalar::one(hq.field()))
    throw FieldError("normalize_alpha_beta: ε(α)ε(β) ≠ 1; input violates the quasi-Hopf axioms");
  QuasiHopfAlgebra out = hq;
  out.alpha = eb * hq.alpha;
  out.beta = ea * hq.beta;
  return out;
}

PQElements compute_pq(const QuasiHopfAlgebra& hq) {
  const std::size_t n = hq.dim();
  const std::vector<std::size_t> dims{n, n, n};
  AlgebraElement p = AlgebraElement::zero(hq.H2()), q = AlgebraElement::zero(hq.H2());
  for (const auto& [flat, c] : hq.base.phi_inv.coords().terms()) {
    auto idx = split_index(flat, dims);
    AlgebraElement second = multiply(multiply(hq.basis(idx[1]), hq.beta), hq.S(hq.basis(idx[2])));
    p += c * tensor_elem(hq.H2(), hq.basis(idx[0]), second);
  }
  for (const auto& [flat, c] : hq.base.phi.coords().terms()) {
    auto idx = split_index(flat, dims);
    AlgebraElement second = multiply(hq.S_inv(multiply(hq.alpha, hq.basis(idx[2]))), hq.basis(idx[1]));
    q += c * tensor_elem(hq.H2(), hq.basis(idx[0]), second);
  }
  return {p, q};
}

VerificationReport verify_pq_identities(const QuasiHopfAlgebra& hq, const PQElements& pq) {
  VerificationReport rep;
  const std::size_t n = hq.dim();
  const auto& H2 = hq.H2();
  AlgebraElement one2 = AlgebraElement::unit(H2);
  auto one_tensor = [&](const AlgebraElement& x) { return tensor_elem(H2, hq.one(), x); };
  auto tensor_one = [&](const AlgebraElement& x) { return tensor_elem(H2, x, hq.one()); };

  // (unu) first: q¹₁p¹ ⊗ q¹₂p²S(q²) = Δ(q¹)·p_R·(1⊗S(q²)) = 1⊗1
  {
    AlgebraElement acc = AlgebraElement::zero(H2);
    for (const auto& [ab, c] : pq.q_R.coords().terms()) {
      const std::size_t a = ab / n, b = ab % n;
      acc += c * multiply(multiply(hq.comul_basis(a), pq.p_R), one_tensor(hq.S(hq.basis(b))));
    }
    if (acc != one2) rep.add("(unu)", "q¹₁p¹⊗q¹₂p²S(q²)", acc.to_string(), "1⊗1");
  }
  // (unu) second: q¹p¹₁ ⊗ S⁻¹(p²)q²p¹₂ = (1⊗S⁻¹(p²))·q_R·Δ(p¹) = 1⊗1
  {
    AlgebraElement acc = AlgebraElement::zero(H2);
    for (const auto& [uv, c] : pq.p_R.coords().terms()) {
      const std::size_t u = uv / n, v = uv % n;
      acc += c * multiply(multiply(one_tensor(hq.S_inv(hq.basis(v))), pq.q_R), hq.comul_basis(u));
    }
    if (acc != one2) rep.add("(unu)", "q¹p¹₁⊗S⁻¹(p²)q²p¹₂", acc.to_string(), "1⊗1");
  }
  // (trei), both relations, for every basis h
  for (std::size_t h = 0; h < n; ++h) {
    AlgebraElement l1 = AlgebraElement::zero(H2), l2 = AlgebraElement::zero(H2);
    for (const auto& [ab, c] : hq.comul_basis(h).coords().terms()) {
      const std::size_t h1 = ab / n, h2 = ab % n;
      l1 += c * multiply(multiply(hq.comul_basis(h1), pq.p_R), one_tensor(hq.S(hq.basis(h2))));
      l2 += c * multiply(multiply(one_tensor(hq.S_inv(hq.basis(h2))), pq.q_R), hq.comul_basis(h1));
    }
    AlgebraElement r1 = multiply(pq.p_R, tensor_one(hq.basis(h)));
    AlgebraElement r2 = multiply(tensor_one(hq.basis(h)), pq.q_R);
    if (l1 != r1) rep.add("(trei)", wit(h) + " Δ(h₁)p_R[1⊗S(h₂)]", l1.to_string(), r1.to_string());
    if (l2 != r2) rep.add("(trei)", wit(h) + " [1⊗S⁻¹(h₂)]q_RΔ(h₁)", l2.to_string(), r2.to_string());
  }
  // (cucu): q¹βS(q²) = 1
  {
    AlgebraElement acc = AlgebraElement::zero(hq.H());
    for (const auto& [ab, c] : pq.q_R.coords().terms()) {
      const std::size_t a = ab / n, b = ab % n;
      acc += c * multiply(multiply(hq.basis(a), hq.beta), hq.S(hq.basis(b)));
    }
    if (acc != hq.one()) rep.add("(cucu)", "q¹βS(q²)", acc.to_string(), "1");
  }
  return rep;
}

VerificationReport verify_lemma3(const QuasiHopfAlgebra& hq) {
  VerificationReport rep;
  const std::size_t n = hq.dim();
  const std::vector<std::size_t> d3{n, n, n};
  PQElements pq = compute_pq(hq);
  const LinearMap id = LinearMap::identity(hq.field(), n);
  // (id⊗Δ)∘Δ: h ↦ h₁ ⊗ h₍₂,₁₎ ⊗ h₍₂,₂₎
  const LinearMap d3r = kron(id, hq.base.comul).compose(hq.base.comul);

  AlgebraElement acc = AlgebraElement::zero(hq.H3());
  for (const auto& [ab, cq] : pq.q_R.coords().terms()) {
    const std::size_t qa = ab / n, qb = ab % n;
    for (const auto& [uvw, cd] : CoordVector(d3r.column(qa)).terms()) {
      auto q3 = split_index(uvw, d3);
      for (const auto& [tf, ct] : hq.base.phi_inv.coords().terms()) {
        auto t = split_index(tf, d3);
        for (const auto& [mm, cm] : hq.comul_basis(t[1]).coords().terms()) {
          const std::size_t m1 = mm / n, m2 = mm % n;
          for (const auto& [zf, cz] : hq.base.phi_inv.coords().terms()) {
            auto z = split_index(zf, d3);
            for (const auto& [xf, cx] : hq.base.phi_inv.coords().terms()) {
              auto x = split_index(xf, d3);
              Scalar coeff = cq * cd * ct * cm * cz * cx;
              AlgebraElement leg1 = multiply(multiply(hq.basis(q3[0]), hq.basis(t[0])), hq.basis(x[0]));
              AlgebraElement leg2 =
                  multiply(multiply(multiply(hq.basis(q3[1]), hq.basis(m1)), hq.basis(z[0])), hq.basis(x[1]));
              AlgebraElement inner = multiply(multiply(hq.basis(qb), hq.basis(t[2])), hq.basis(z[2]));
              AlgebraElement leg3 =
                  multiply(multiply(multiply(multiply(multiply(hq.basis(q3[2]), hq.basis(m2)), hq.basis(z[1])), hq.beta),
                                    hq.S(inner)),
                           hq.basis(x[2]));
              acc += coeff * tensor_elem(hq.H3(), tensor_elem(hq.H2(), leg1, leg2), leg3);
            }
          }
        }
      }
    }
  }
  if (acc != AlgebraElement::unit(hq.H3())) rep.add("(lema3)", "(q,t,z,x contraction)", acc.to_string(), "1⊗1⊗1");
  return rep;
}

} // namespace qha
