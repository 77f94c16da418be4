#include "qha/representations.hpp"

namespace qha {

namespace {

std::string wit2(std::size_t i, std::size_t j) { return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")"; }
std::string wit3(std::size_t i, std::size_t j, std::size_t k) {
  return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")";
}

} // namespace

ComoduleAlgebra make_comodule_algebra(HopfPtr H, AlgebraPtr B, LinearMap coaction, CoordVector phi_rho,
                                      CoordVector phi_rho_inv) {
  ComoduleAlgebra ca;
  ca.H = H;
  ca.B = B;
  ca.BH = tensor_algebra(B, H->H());
  ca.BHH = tensor_algebra(ca.BH, H->H());
  ca.BHHH = tensor_algebra(ca.BHH, H->H());
  if (coaction.src_dim() != B->dim() || coaction.dst_dim() != B->dim() * H->dim())
    throw DimensionMismatch("coaction shape");
  ca.coaction = std::move(coaction);
  ca.phi_rho = AlgebraElement(ca.BHH, std::move(phi_rho));
  ca.phi_rho_inv = AlgebraElement(ca.BHH, std::move(phi_rho_inv));
  return ca;
}

ComoduleAlgebra comodule_of_H(HopfPtr H) {
  return make_comodule_algebra(H, H->H(), H->base.comul, H->base.phi.coords(), H->base.phi_inv.coords());
}

ModuleAlgebra trivial_module_algebra(HopfPtr H) {
  const Field f = H->field();
  ModuleAlgebra ma;
  ma.H = H;
  ma.dim = 1;
  ma.labels = {"1"};
  ma.mult = LinearMap::identity(f, 1);
  ma.unit = CoordVector(f, 1);
  ma.unit[0] = Scalar::one(f);
  ma.action = H->base.counit; // h·λ = ε(h)λ
  return ma;
}

VerificationReport verify_module_algebra(const ModuleAlgebra& ma) {
  VerificationReport rep;
  const auto& H = *ma.H;
  const std::size_t n = H.dim(), m = ma.dim;

  // 1·a = a
  for (std::size_t a = 0; a < m; ++a) {
    CoordVector got = ma.act(H.one(), ma.basis(a));
    if (got != ma.basis(a)) rep.add("module-unit", "(a=" + std::to_string(a) + ")", got.to_string(), ma.basis(a).to_string());
  }
  // (hh')·a = h·(h'·a)
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t a = 0; a < m; ++a) {
        CoordVector lhs = ma.act(multiply(H.basis(h), H.basis(g)), ma.basis(a));
        CoordVector rhs = ma.act(H.basis(h), ma.act(H.basis(g), ma.basis(a)));
        if (lhs != rhs) rep.add("module-action", wit3(h, g, a), lhs.to_string(), rhs.to_string());
      }
  // (ma1): (aa')a'' = (X¹·a)[(X²·a')(X³·a'')]
  const std::vector<std::size_t> d3{n, n, n};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        CoordVector lhs = ma.amul(ma.amul(ma.basis(a), ma.basis(b)), ma.basis(c));
        CoordVector rhs(H.field(), m);
        for (const auto& [flat, cf] : H.base.phi.coords().terms()) {
          auto x = split_index(flat, d3);
          rhs += cf * ma.amul(ma.act(H.basis(x[0]), ma.basis(a)),
                              ma.amul(ma.act(H.basis(x[1]), ma.basis(b)), ma.act(H.basis(x[2]), ma.basis(c))));
        }
        if (lhs != rhs) rep.add("(ma1)", wit3(a, b, c), lhs.to_string(), rhs.to_string());
      }
  // (ma2): h·(aa') = (h₁·a)(h₂·a')
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        CoordVector lhs = ma.act(H.basis(h), ma.amul(ma.basis(a), ma.basis(b)));
        CoordVector rhs(H.field(), m);
        for (const auto& [hh, c] : H.comul_basis(h).coords().terms())
          rhs += c * ma.amul(ma.act(H.basis(hh / n), ma.basis(a)), ma.act(H.basis(hh % n), ma.basis(b)));
        if (lhs != rhs) rep.add("(ma2)", wit3(h, a, b), lhs.to_string(), rhs.to_string());
      }
  // (ma3): h·1 = ε(h)1
  for (std::size_t h = 0; h < n; ++h) {
    CoordVector lhs = ma.act(H.basis(h), ma.unit);
    CoordVector rhs = H.base.counit.at(0, h) * ma.unit;
    if (lhs != rhs) rep.add("(ma3)", "(h=" + std::to_string(h) + ")", lhs.to_string(), rhs.to_string());
  }
  return rep;
}

VerificationReport verify_comodule_algebra(const ComoduleAlgebra& ca) {
  VerificationReport rep;
  const auto& H = *ca.H;
  const std::size_t n = H.dim();
  const Field f = H.field();
  const LinearMap idB = LinearMap::identity(f, ca.B->dim());
  const LinearMap idH = LinearMap::identity(f, n);

  // Φ_ρ invertible (two-sided)
  AlgebraElement oneBHH = AlgebraElement::unit(ca.BHH);
  if (multiply(ca.phi_rho, ca.phi_rho_inv) != oneBHH || multiply(ca.phi_rho_inv, ca.phi_rho) != oneBHH)
    rep.add("(phi_rho-inverse)", "(Φ_ρ·Φ_ρ⁻¹)", multiply(ca.phi_rho, ca.phi_rho_inv).to_string(), oneBHH.to_string());

  // ρ algebra morphism B → B⊗H
  {
    auto r = check_algebra_morphism(ca.coaction, *ca.B, *ca.BH);
    for (auto& v : r.violations) rep.add("ρ-" + v.axiom, v.witness, v.lhs, v.rhs);
  }
  // (rca1): Φ_ρ(ρ⊗id)(ρ(b)) = (id⊗Δ)(ρ(b))Φ_ρ
  {
    LinearMap rho_id = kron(ca.coaction, idH);
    LinearMap id_delta = kron(idB, H.base.comul);
    for (std::size_t b = 0; b < ca.B->dim(); ++b) {
      AlgebraElement rb(ca.BH, ca.coaction.column(b));
      AlgebraElement lhs = multiply(ca.phi_rho, apply_map(ca.BHH, rho_id, rb));
      AlgebraElement rhs = multiply(apply_map(ca.BHH, id_delta, rb), ca.phi_rho);
      if (lhs != rhs) rep.add("(rca1)", "(b=" + std::to_string(b) + ")", lhs.to_string(), rhs.to_string());
    }
  }
  // (rca2) in B⊗H⊗H⊗H
  {
    AlgebraElement lhs = multiply(multiply(embed(H.base.phi, 1, ca.BHHH),
                                           apply_map(ca.BHHH, kron(kron(idB, H.base.comul), idH), ca.phi_rho)),
                                  embed(ca.phi_rho, 0, ca.BHHH));
    AlgebraElement rhs = multiply(apply_map(ca.BHHH, kron(kron(idB, idH), H.base.comul), ca.phi_rho),
                                  apply_map(ca.BHHH, kron(kron(ca.coaction, idH), idH), ca.phi_rho));
    if (lhs != rhs) rep.add("(rca2)", "(pentagon)", lhs.to_string(), rhs.to_string());
  }
  // (rca3): (id⊗ε)∘ρ = id
  if (kron(idB, H.base.counit).compose(ca.coaction) != idB)
    rep.add("(rca3)", "(id⊗ε)∘ρ", kron(idB, H.base.counit).compose(ca.coaction).to_string(), "id");
  // (rca4)
  {
    AlgebraElement a = apply_map(ca.BH, kron(kron(idB, H.base.counit), idH), ca.phi_rho);
    AlgebraElement b = apply_map(ca.BH, kron(kron(idB, idH), H.base.counit), ca.phi_rho);
    if (a != AlgebraElement::unit(ca.BH)) rep.add("(rca4)", "(id⊗ε⊗id)(Φ_ρ)", a.to_string(), "1_B⊗1_H");
    if (b != AlgebraElement::unit(ca.BH)) rep.add("(rca4)", "(id⊗id⊗ε)(Φ_ρ)", b.to_string(), "1_B⊗1_H");
  }
  return rep;
}

VerificationReport check_comodule_algebra_morphism(const LinearMap& f, const ComoduleAlgebra& src,
                                                   const ComoduleAlgebra& dst) {
  if (f.src_dim() != src.B->dim() || f.dst_dim() != dst.B->dim())
    throw DimensionMismatch("comodule morphism shape mismatch");
  VerificationReport rep = check_algebra_morphism(f, *src.B, *dst.B);
  const LinearMap idH = LinearMap::identity(f.field(), src.H->dim());
  if (dst.coaction.compose(f) != kron(f, idH).compose(src.coaction))
    rep.add("comodule-morphism", "ρ'∘f = (f⊗id)∘ρ", dst.coaction.compose(f).to_string(),
            kron(f, idH).compose(src.coaction).to_string());
  AlgebraElement moved = apply_map(dst.BHH, kron(kron(f, idH), idH), src.phi_rho);
  if (moved != dst.phi_rho)
    rep.add("comodule-morphism", "Φ_ρ' = (f⊗id⊗id)(Φ_ρ)", moved.to_string(), dst.phi_rho.to_string());
  return rep;
}

SmashProduct smash_product(const ModuleAlgebra& ma) {
  {
    auto rep = verify_module_algebra(ma);
    if (!rep.ok()) throw VerificationError("smash_product: input is not a module algebra", rep);
  }
  const auto& H = *ma.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), m = ma.dim;
  const std::size_t dimB = m * n;
  const std::vector<std::size_t> d3{n, n, n};

  // (sm1): (a#h)(a'#h') = (x¹·a)(x²h₁·a') # x³h₂h'
  std::vector<MultTriple> mult;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t g = 0; g < n; ++g) labels.push_back(ma.labels[i] + "#" + H.H()->basis_labels()[g]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t h = 0; h < n; ++h) {
          CoordVector out(f, dimB);
          for (const auto& [flat, cx] : H.base.phi_inv.coords().terms()) {
            auto x = split_index(flat, d3);
            for (const auto& [gg, cd] : H.comul_basis(g).coords().terms()) {
              CoordVector apart = ma.amul(ma.act(H.basis(x[0]), ma.basis(i)),
                                          ma.act(multiply(H.basis(x[1]), H.basis(gg / n)), ma.basis(j)));
              AlgebraElement hpart = multiply(multiply(H.basis(x[2]), H.basis(gg % n)), H.basis(h));
              out += (cx * cd) * kron(apart, hpart.coords());
            }
          }
          for (const auto& [k, c] : out.terms()) mult.push_back({i * n + g, j * n + h, k, c});
        }
  CoordVector unitB = kron(ma.unit, H.H()->unit());
  AlgebraPtr B = BasedAlgebra::make(f, labels, mult, unitB);

  // ρ(a#h) = (x¹·a # x²h₁) ⊗ x³h₂
  LinearMap coaction(f, dimB * n, dimB);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t g = 0; g < n; ++g) {
      CoordVector col(f, dimB * n);
      for (const auto& [flat, cx] : H.base.phi_inv.coords().terms()) {
        auto x = split_index(flat, d3);
        for (const auto& [gg, cd] : H.comul_basis(g).coords().terms()) {
          CoordVector apart = ma.act(H.basis(x[0]), ma.basis(i));
          AlgebraElement h1 = multiply(H.basis(x[1]), H.basis(gg / n));
          AlgebraElement h2 = multiply(H.basis(x[2]), H.basis(gg % n));
          col += (cx * cd) * kron(kron(apart, h1.coords()), h2.coords());
        }
      }
      for (std::size_t r = 0; r < dimB * n; ++r) coaction.at(r, i * n + g) = col[r];
    }

  // Φ_ρ = (1#X¹)⊗X²⊗X³
  CoordVector phi_rho(f, dimB * n * n), phi_rho_inv(f, dimB * n * n);
  for (const auto& [flat, c] : H.base.phi.coords().terms()) {
    auto x = split_index(flat, d3);
    phi_rho += c * kron(kron(kron(ma.unit, H.basis(x[0]).coords()), H.basis(x[1]).coords()), H.basis(x[2]).coords());
  }
  for (const auto& [flat, c] : H.base.phi_inv.coords().terms()) {
    auto x = split_index(flat, d3);
    phi_rho_inv += c * kron(kron(kron(ma.unit, H.basis(x[0]).coords()), H.basis(x[1]).coords()), H.basis(x[2]).coords());
  }

  SmashProduct sp;
  sp.CA = make_comodule_algebra(ma.H, B, coaction, phi_rho, phi_rho_inv);
  sp.j = LinearMap(f, dimB, n);
  for (std::size_t h = 0; h < n; ++h) {
    CoordVector col = kron(ma.unit, H.basis(h).coords());
    for (std::size_t r = 0; r < dimB; ++r) sp.j.at(r, h) = col[r];
  }

  {
    auto rep = verify_associative_unital(*B);
    if (!rep.ok()) throw VerificationError("smash_product: A#H is not associative unital", rep);
  }
  {
    auto rep = verify_comodule_algebra(sp.CA);
    if (!rep.ok()) throw VerificationError("smash_product: A#H fails the comodule algebra axioms", rep);
  }
  {
    auto rep = check_comodule_algebra_morphism(sp.j, comodule_of_H(ma.H), sp.CA);
    if (!rep.ok()) throw VerificationError("smash_product: j is not a comodule algebra morphism", rep);
  }
  return sp;
}

ModuleAlgebra bv_construction(AlgebraPtr B, const LinearMap& v, HopfPtr H) {
  {
    auto rep = check_algebra_morphism(v, *H->H(), *B);
    if (!rep.ok()) throw VerificationError("bv_construction: v is not an algebra map H → B", rep);
  }
  const Field f = H->field();
  const std::size_t n = H->dim(), m = B->dim();
  const std::vector<std::size_t> d3{n, n, n};
  auto vH = [&](const AlgebraElement& h) { return AlgebraElement(B, v.apply(h.coords())); };
  auto belem = [&](std::size_t i) { return AlgebraElement::basis(B, i); };

  ModuleAlgebra out;
  out.H = H;
  out.dim = m;
  out.labels = B->basis_labels();
  out.unit = v.apply(H->beta.coords());

  // b∘b' = v(X¹) b v(S(x¹X²)αx²X³₁) b' v(S(x³X³₂))
  out.mult = LinearMap(f, m, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      AlgebraElement acc = AlgebraElement::zero(B);
      for (const auto& [Xf, cX] : H->base.phi.coords().terms()) {
        auto X = split_index(Xf, d3);
        for (const auto& [xf, cx] : H->base.phi_inv.coords().terms()) {
          auto x = split_index(xf, d3);
          for (const auto& [gg, cd] : H->comul_basis(X[2]).coords().terms()) {
            AlgebraElement mid = multiply(multiply(multiply(H->S(multiply(H->basis(x[0]), H->basis(X[1]))), H->alpha),
                                                   H->basis(x[1])),
                                          H->basis(gg / n));
            AlgebraElement last = H->S(multiply(H->basis(x[2]), H->basis(gg % n)));
            acc += (cX * cx * cd) *
                   multiply(multiply(multiply(multiply(vH(H->basis(X[0])), belem(i)), vH(mid)), belem(j)), vH(last));
          }
        }
      }
      for (std::size_t r = 0; r < m; ++r) out.mult.at(r, i * m + j) = acc.coords()[r];
    }

  // h ▷_v b = v(h₁) b v(S(h₂))
  out.action = LinearMap(f, m, n * m);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i < m; ++i) {
      AlgebraElement acc = AlgebraElement::zero(B);
      for (const auto& [gg, c] : H->comul_basis(h).coords().terms())
        acc += c * multiply(multiply(vH(H->basis(gg / n)), belem(i)), vH(H->S(H->basis(gg % n))));
      for (std::size_t r = 0; r < m; ++r) out.action.at(r, h * m + i) = acc.coords()[r];
    }

  {
    auto rep = verify_module_algebra(out);
    if (!rep.ok()) throw VerificationError("bv_construction: B^v fails the module algebra axioms", rep);
  }
  return out;
}

I0Result i0_map(const ModuleAlgebra& ma) {
  const auto& H = *ma.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), m = ma.dim;
  PQElements pq = compute_pq(H);

  I0Result res;
  res.map = LinearMap(f, m * n, m);
  for (std::size_t a = 0; a < m; ++a) {
    CoordVector col(f, m * n);
    for (const auto& [uv, c] : pq.p_R.coords().terms())
      col += c * kron(ma.act(H.basis(uv / n), ma.basis(a)), H.basis(uv % n).coords());
    for (std::size_t r = 0; r < m * n; ++r) res.map.at(r, a) = col[r];
  }

  if (rank(res.map) != m)
    res.report.add("i0-injective", "(rank)", std::to_string(rank(res.map)), std::to_string(m));

  // morphism of module algebras A → (A#H)^j
  SmashProduct sp = smash_product(ma);
  ModuleAlgebra bv = bv_construction(sp.CA.B, sp.j, ma.H);
  {
    CoordVector got = res.map.apply(ma.unit);
    if (got != bv.unit) res.report.add("i0-unital", "(1_A)", got.to_string(), bv.unit.to_string());
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      CoordVector lhs = res.map.apply(ma.amul(ma.basis(a), ma.basis(b)));
      CoordVector rhs = bv.amul(res.map.apply(ma.basis(a)), res.map.apply(ma.basis(b)));
      if (lhs != rhs) res.report.add("i0-multiplicative", wit2(a, b), lhs.to_string(), rhs.to_string());
    }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t a = 0; a < m; ++a) {
      CoordVector lhs = res.map.apply(ma.act(H.basis(h), ma.basis(a)));
      CoordVector rhs = bv.act(H.basis(h), res.map.apply(ma.basis(a)));
      if (lhs != rhs) res.report.add("i0-H-linear", wit2(h, a), lhs.to_string(), rhs.to_string());
    }
  return res;
}

Lemma1Result lemma1_check(const ModuleAlgebra& candidate) {
  const auto& H = *candidate.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), m = candidate.dim;
  const std::size_t dimT = m * n;
  const std::vector<std::size_t> d3{n, n, n};

  // (lulu) multiplication on A⊗H, same contraction as (sm1)
  auto lulu = [&](std::size_t i, std::size_t g, std::size_t j, std::size_t h) {
    CoordVector out(f, dimT);
    for (const auto& [flat, cx] : H.base.phi_inv.coords().terms()) {
      auto x = split_index(flat, d3);
      for (const auto& [gg, cd] : H.comul_basis(g).coords().terms()) {
        CoordVector apart = candidate.amul(candidate.act(H.basis(x[0]), candidate.basis(i)),
                                           candidate.act(multiply(H.basis(x[1]), H.basis(gg / n)), candidate.basis(j)));
        AlgebraElement hpart = multiply(multiply(H.basis(x[2]), H.basis(gg % n)), H.basis(h));
        out += (cx * cd) * kron(apart, hpart.coords());
      }
    }
    return out;
  };
  // bilinear extension of lulu to arbitrary coordinates
  auto lulu_ext = [&](const CoordVector& u, const CoordVector& w) {
    CoordVector out(f, dimT);
    for (const auto& [iu, cu] : u.terms())
      for (const auto& [iw, cw] : w.terms()) out += (cu * cw) * lulu(iu / n, iu % n, iw / n, iw % n);
    return out;
  };

  Lemma1Result res;
  res.lulu_associative = true;
  for (std::size_t p = 0; p < dimT && res.report.violations.size() < 16; ++p)
    for (std::size_t q = 0; q < dimT; ++q)
      for (std::size_t r = 0; r < dimT; ++r) {
        CoordVector ep(f, dimT), eq(f, dimT), er(f, dimT);
        ep[p] = Scalar::one(f);
        eq[q] = Scalar::one(f);
        er[r] = Scalar::one(f);
        CoordVector lhs = lulu_ext(lulu_ext(ep, eq), er);
        CoordVector rhs = lulu_ext(ep, lulu_ext(eq, er));
        if (lhs != rhs) {
          res.lulu_associative = false;
          res.report.add("(lulu)-associativity", wit3(p, q, r), lhs.to_string(), rhs.to_string());
        }
      }

  VerificationReport full = verify_module_algebra(candidate);
  res.ma1_holds = true;
  res.ma2_holds = true;
  for (const auto& v : full.violations) {
    if (v.axiom == "(ma1)") {
      res.ma1_holds = false;
      res.report.violations.push_back(v);
    } else if (v.axiom == "(ma2)") {
      res.ma2_holds = false;
      res.report.violations.push_back(v);
    }
  }
  return res;
}

} // namespace qha
