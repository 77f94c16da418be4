#include "qha/structure.hpp"

namespace qha {

namespace {

std::string wit1(std::size_t i) { return "(m=" + std::to_string(i) + ")"; }
std::string wit2(std::size_t h, std::size_t m) { return "(h=" + std::to_string(h) + ", m=" + std::to_string(m) + ")"; }

/// Express vec in the span of cols; throws when vec is outside the span
/// (impossible on verified inputs).
CoordVector in_basis(const std::vector<CoordVector>& cols, std::size_t ambient_dim, Field f, const CoordVector& vec) {
  LinearMap C = LinearMap::from_columns(f, ambient_dim, cols);
  auto sol = solve_linear(C, vec);
  if (!sol) throw DimensionMismatch("vector is not in the coinvariant span");
  return *sol;
}

} // namespace

VerificationReport verify_left_module(const LeftModule& V) {
  VerificationReport rep;
  const auto& H = *V.H;
  for (std::size_t m = 0; m < V.dim; ++m) {
    CoordVector em(H.field(), V.dim);
    em[m] = Scalar::one(H.field());
    CoordVector got = V.act(H.one(), em);
    if (got != em) rep.add("module-unit", wit1(m), got.to_string(), em.to_string());
    for (std::size_t h = 0; h < H.dim(); ++h)
      for (std::size_t g = 0; g < H.dim(); ++g) {
        CoordVector lhs = V.act(multiply(H.basis(h), H.basis(g)), em);
        CoordVector rhs = V.act(H.basis(h), V.act(H.basis(g), em));
        if (lhs != rhs)
          rep.add("module-action", "(h=" + std::to_string(h) + ", g=" + std::to_string(g) + ", m=" + std::to_string(m) + ")",
                  lhs.to_string(), rhs.to_string());
      }
  }
  return rep;
}

VerificationReport verify_bimodule(const QuasiHopfBimodule& M) {
  VerificationReport rep;
  const auto& H = *M.H;
  const std::size_t n = H.dim(), d = M.dim;
  const Field f = H.field();
  const std::vector<std::size_t> d3{n, n, n};

  for (std::size_t m = 0; m < d; ++m) {
    CoordVector em = M.basis(m);
    if (M.lact(H.one(), em) != em) rep.add("left-unital", wit1(m), M.lact(H.one(), em).to_string(), em.to_string());
    if (M.ract(em, H.one()) != em) rep.add("right-unital", wit1(m), M.ract(em, H.one()).to_string(), em.to_string());
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t g = 0; g < n; ++g) {
        if (M.lact(multiply(H.basis(h), H.basis(g)), em) != M.lact(H.basis(h), M.lact(H.basis(g), em)))
          rep.add("left-action", wit2(h, m), "", "");
        if (M.ract(em, multiply(H.basis(h), H.basis(g))) != M.ract(M.ract(em, H.basis(h)), H.basis(g)))
          rep.add("right-action", wit2(h, m), "", "");
        if (M.ract(M.lact(H.basis(h), em), H.basis(g)) != M.lact(H.basis(h), M.ract(em, H.basis(g))))
          rep.add("actions-commute", wit2(h, m), "", "");
      }
  }

  // ρ is an H-bimodule map for the diagonal structure on M⊗H:
  // ρ(h·m) = h₁·m₍₀₎ ⊗ h₂m₍₁₎ and ρ(m·h) = m₍₀₎·h₁ ⊗ m₍₁₎h₂.
  for (std::size_t m = 0; m < d; ++m) {
    CoordVector rm = M.coaction.column(m);
    for (std::size_t h = 0; h < n; ++h) {
      CoordVector lhs = M.coaction.apply(M.lact(H.basis(h), M.basis(m)));
      CoordVector rhs(f, d * n);
      for (const auto& [gg, cd] : H.comul_basis(h).coords().terms())
        for (const auto& [t, ct] : rm.terms())
          rhs += (cd * ct) * kron(M.lact(H.basis(gg / n), M.basis(t / n)),
                                  multiply(H.basis(gg % n), H.basis(t % n)).coords());
      if (lhs != rhs) rep.add("coaction-left-linear", wit2(h, m), lhs.to_string(), rhs.to_string());

      CoordVector lhs2 = M.coaction.apply(M.ract(M.basis(m), H.basis(h)));
      CoordVector rhs2(f, d * n);
      for (const auto& [gg, cd] : H.comul_basis(h).coords().terms())
        for (const auto& [t, ct] : rm.terms())
          rhs2 += (cd * ct) * kron(M.ract(M.basis(t / n), H.basis(gg / n)),
                                   multiply(H.basis(t % n), H.basis(gg % n)).coords());
      if (lhs2 != rhs2) rep.add("coaction-right-linear", wit2(h, m), lhs2.to_string(), rhs2.to_string());
    }
  }

  // (qb1)
  {
    LinearMap idM = LinearMap::identity(f, d);
    LinearMap lhs = kron(idM, H.base.counit).compose(M.coaction);
    if (lhs != idM) rep.add("(qb1)", "(id⊗ε)∘ρ", lhs.to_string(), "id");
  }

  // (qb2): Φ·(ρ⊗id)(ρ(m)) = (id⊗Δ)(ρ(m))·Φ in M⊗H⊗H, with Φ acting on the
  // M-leg through the module structure.
  for (std::size_t m = 0; m < d; ++m) {
    CoordVector rm = M.coaction.column(m);
    CoordVector t1(f, d * n * n), t2(f, d * n * n);
    for (const auto& [t, ct] : rm.terms()) {
      CoordVector inner = M.coaction.column(t / n);
      for (const auto& [u, cu] : inner.terms()) {
        CoordVector term(f, d * n * n);
        term[(u / n) * n * n + (u % n) * n + (t % n)] = ct * cu;
        t1 += term;
      }
      for (const auto& [g2, cg] : H.comul_basis(t % n).coords().terms()) {
        CoordVector term(f, d * n * n);
        term[(t / n) * n * n + (g2 / n) * n + (g2 % n)] = ct * cg;
        t2 += term;
      }
    }
    CoordVector lhs(f, d * n * n), rhs(f, d * n * n);
    for (const auto& [ph, cp] : H.base.phi.coords().terms()) {
      auto X = split_index(ph, d3);
      for (const auto& [t, ct] : t1.terms()) {
        std::size_t tm = t / (n * n), ta = (t / n) % n, tb = t % n;
        lhs += (cp * ct) * kron(kron(M.lact(H.basis(X[0]), M.basis(tm)), multiply(H.basis(X[1]), H.basis(ta)).coords()),
                                multiply(H.basis(X[2]), H.basis(tb)).coords());
      }
      for (const auto& [t, ct] : t2.terms()) {
        std::size_t tm = t / (n * n), ta = (t / n) % n, tb = t % n;
        rhs += (cp * ct) * kron(kron(M.ract(M.basis(tm), H.basis(X[0])), multiply(H.basis(ta), H.basis(X[1])).coords()),
                                multiply(H.basis(tb), H.basis(X[2])).coords());
      }
    }
    if (lhs != rhs) rep.add("(qb2)", wit1(m), lhs.to_string(), rhs.to_string());
  }
  return rep;
}

QuasiHopfBimodule vh_bimodule(const LeftModule& V) {
  {
    auto rep = verify_left_module(V);
    if (!rep.ok()) throw VerificationError("vh_bimodule: carrier is not a left module", rep);
  }
  const auto& H = *V.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), r = V.dim, d = r * n;
  const std::vector<std::size_t> d3{n, n, n};
  auto vb = [&](std::size_t i) {
    CoordVector c(f, r);
    c[i] = Scalar::one(f);
    return c;
  };

  QuasiHopfBimodule M;
  M.H = V.H;
  M.dim = d;
  M.left_action = LinearMap(f, d, n * d);
  M.right_action = LinearMap(f, d, d * n);
  M.coaction = LinearMap(f, d * n, d);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t mcol = i * n + h;
      for (std::size_t a = 0; a < n; ++a) {
        // a·(v⊗h) = (a₁·v)⊗a₂h
        CoordVector col(f, d);
        for (const auto& [gg, c] : H.comul_basis(a).coords().terms())
          col += c * kron(V.act(H.basis(gg / n), vb(i)), multiply(H.basis(gg % n), H.basis(h)).coords());
        for (std::size_t row = 0; row < d; ++row) M.left_action.at(row, a * d + mcol) = col[row];
        // (v⊗h)·b = v⊗hb
        CoordVector colr = kron(vb(i), multiply(H.basis(h), H.basis(a)).coords());
        for (std::size_t row = 0; row < d; ++row) M.right_action.at(row, mcol * n + a) = colr[row];
      }
      // ρ(v⊗h) = (x¹·v⊗x²h₁)⊗x³h₂
      CoordVector colc(f, d * n);
      for (const auto& [ph, cp] : H.base.phi_inv.coords().terms()) {
        auto x = split_index(ph, d3);
        for (const auto& [gg, cg] : H.comul_basis(h).coords().terms())
          colc += (cp * cg) * kron(kron(V.act(H.basis(x[0]), vb(i)), multiply(H.basis(x[1]), H.basis(gg / n)).coords()),
                                   multiply(H.basis(x[2]), H.basis(gg % n)).coords());
      }
      for (std::size_t row = 0; row < d * n; ++row) M.coaction.at(row, mcol) = colc[row];
    }
  {
    auto rep = verify_bimodule(M);
    if (!rep.ok()) throw VerificationError("vh_bimodule: output fails the bimodule axioms", rep);
  }
  return M;
}

QuasiHopfBimodule bimodule_from_comodule(const ComoduleAlgebra& B, const LinearMap& v) {
  const auto& H = *B.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = B.B->dim();
  VerificationReport pre = check_algebra_morphism(v, *H.H(), *B.B);
  {
    // ρ(v(h)) = v(h₁)⊗h₂
    LinearMap lhs = B.coaction.compose(v);
    LinearMap rhs = kron(v, LinearMap::identity(f, n)).compose(H.base.comul);
    if (lhs != rhs) pre.add("v-coaction", "ρ∘v = (v⊗id)∘Δ", lhs.to_string(), rhs.to_string());
    // Φ_ρ = v(X¹)⊗X²⊗X³
    LinearMap vii = kron(kron(v, LinearMap::identity(f, n)), LinearMap::identity(f, n));
    CoordVector moved = vii.apply(H.base.phi.coords());
    if (moved != B.phi_rho.coords()) pre.add("v-phi", "Φ_ρ = (v⊗id⊗id)(Φ)", moved.to_string(), B.phi_rho.to_string());
  }
  if (!pre.ok()) throw VerificationError("bimodule_from_comodule: v is not a comodule algebra morphism", pre);

  QuasiHopfBimodule M;
  M.H = B.H;
  M.dim = d;
  M.left_action = LinearMap(f, d, n * d);
  M.right_action = LinearMap(f, d, d * n);
  M.coaction = B.coaction;
  for (std::size_t h = 0; h < n; ++h) {
    AlgebraElement vh(B.B, v.column(h));
    for (std::size_t m = 0; m < d; ++m) {
      CoordVector l = multiply(vh, AlgebraElement::basis(B.B, m)).coords();
      CoordVector rr = multiply(AlgebraElement::basis(B.B, m), vh).coords();
      for (std::size_t row = 0; row < d; ++row) {
        M.left_action.at(row, h * d + m) = l[row];
        M.right_action.at(row, m * n + h) = rr[row];
      }
    }
  }
  {
    auto rep = verify_bimodule(M);
    if (!rep.ok()) throw VerificationError("bimodule_from_comodule: output fails the bimodule axioms", rep);
  }
  return M;
}

LinearMap projection_E(const QuasiHopfBimodule& M) {
  const auto& H = *M.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = M.dim;
  PQElements pq = compute_pq(H);

  LinearMap E(f, d, d);
  for (std::size_t m = 0; m < d; ++m) {
    CoordVector col(f, d);
    for (const auto& [t, ct] : M.coaction.column(m).terms())
      for (const auto& [uw, cq] : pq.q_R.coords().terms()) {
        AlgebraElement right = multiply(H.beta, H.S(multiply(H.basis(uw % n), H.basis(t % n))));
        col += (ct * cq) * M.ract(M.lact(H.basis(uw / n), M.basis(t / n)), right);
      }
    for (std::size_t row = 0; row < d; ++row) E.at(row, m) = col[row];
  }
  if (E.compose(E) != E) {
    VerificationReport rep;
    rep.add("E-idempotent", "E∘E = E", E.compose(E).to_string(), E.to_string());
    throw VerificationError("projection_E: the projection is not idempotent", rep);
  }
  return E;
}

VerificationReport verify_E_properties(const QuasiHopfBimodule& M, const LinearMap& E) {
  VerificationReport rep;
  const auto& H = *M.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = M.dim;
  const std::vector<std::size_t> d3{n, n, n};

  if (E.compose(E) != E) rep.add("E^2=E", "", E.compose(E).to_string(), E.to_string());

  for (std::size_t m = 0; m < d; ++m) {
    CoordVector em = M.basis(m), Em = E.column(m);
    for (std::size_t h = 0; h < n; ++h) {
      // E(m·h) = E(m)ε(h)
      CoordVector l1 = E.apply(M.ract(em, H.basis(h)));
      CoordVector r1 = H.base.counit.at(0, h) * Em;
      if (l1 != r1) rep.add("E(m·h)=E(m)ε(h)", wit2(h, m), l1.to_string(), r1.to_string());
      // h▷E(m) = E(h·m)
      CoordVector l2 = E.apply(M.lact(H.basis(h), Em));
      CoordVector r2 = E.apply(M.lact(H.basis(h), em));
      if (l2 != r2) rep.add("h▷E(m)=E(h·m)", wit2(h, m), l2.to_string(), r2.to_string());
      // h·E(m) = (h₁▷E(m))·h₂
      CoordVector l4 = M.lact(H.basis(h), Em);
      CoordVector r4(f, d);
      for (const auto& [gg, c] : H.comul_basis(h).coords().terms())
        r4 += c * M.ract(E.apply(M.lact(H.basis(gg / n), Em)), H.basis(gg % n));
      if (l4 != r4) rep.add("h·E(m)=(h₁▷E(m))·h₂", wit2(h, m), l4.to_string(), r4.to_string());
      // (hh')▷m = h▷(h'▷m)
      for (std::size_t g = 0; g < n; ++g) {
        CoordVector l3 = E.apply(M.lact(multiply(H.basis(h), H.basis(g)), em));
        CoordVector r3 = E.apply(M.lact(H.basis(h), E.apply(M.lact(H.basis(g), em))));
        if (l3 != r3) rep.add("(hh')▷m=h▷(h'▷m)", wit2(h, m) + "(h'=" + std::to_string(g) + ")", l3.to_string(), r3.to_string());
      }
    }
    // E(m₍₀₎)·m₍₁₎ = m
    CoordVector l5(f, d);
    for (const auto& [t, ct] : M.coaction.column(m).terms()) l5 += ct * M.ract(E.column(t / n), H.basis(t % n));
    if (l5 != em) rep.add("E(m₍₀₎)·m₍₁₎=m", wit1(m), l5.to_string(), em.to_string());
    // E(E(m)₍₀₎)⊗E(m)₍₁₎ = E(m)⊗1
    CoordVector l6(f, d * n);
    for (const auto& [t, ct] : M.coaction.apply(Em).terms()) {
      CoordVector tpart(f, n);
      tpart[t % n] = Scalar::one(f);
      l6 += ct * kron(E.column(t / n), tpart);
    }
    CoordVector r6 = kron(Em, AlgebraElement::unit(H.H()).coords());
    if (l6 != r6) rep.add("E(E(m)₍₀₎)⊗E(m)₍₁₎=E(m)⊗1", wit1(m), l6.to_string(), r6.to_string());
  }

  // third characterization on the coinvariant basis: ρ(a) = (x¹▷a)·x²⊗x³
  for (const auto& a : image_basis(E)) {
    CoordVector lhs = M.coaction.apply(a);
    CoordVector rhs(f, d * n);
    for (const auto& [ph, cp] : H.base.phi_inv.coords().terms()) {
      auto x = split_index(ph, d3);
      CoordVector xpart(f, n);
      xpart[x[2]] = Scalar::one(f);
      rhs += cp * kron(M.ract(E.apply(M.lact(H.basis(x[0]), a)), H.basis(x[1])), xpart);
    }
    if (lhs != rhs) rep.add("ρ(a)=(x¹▷a)·x²⊗x³", "(coinvariant " + a.to_string() + ")", lhs.to_string(), rhs.to_string());
  }
  return rep;
}

CoinvariantDecomposition coinvariants(const QuasiHopfBimodule& M, const LinearMap& E) {
  const auto& H = *M.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = M.dim;

  CoinvariantDecomposition cd;
  cd.E = E;
  cd.coinv_basis = image_basis(E);
  const std::size_t r = cd.coinv_basis.size();

  cd.triangle_action = LinearMap(f, r, n * r);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i < r; ++i) {
      CoordVector t = in_basis(cd.coinv_basis, d, f, E.apply(M.lact(H.basis(h), cd.coinv_basis[i])));
      for (std::size_t row = 0; row < r; ++row) cd.triangle_action.at(row, h * r + i) = t[row];
    }
  {
    LeftModule V{M.H, r, cd.triangle_action};
    auto vrep = verify_left_module(V);
    cd.report.merge(vrep);
  }
  return cd;
}

CoinvariantDecomposition bimodule_structure_iso(const QuasiHopfBimodule& M) {
  const auto& H = *M.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = M.dim;

  LinearMap E = projection_E(M);
  CoinvariantDecomposition cd = coinvariants(M, E);
  const std::size_t r = cd.coinv_basis.size();

  cd.nu = LinearMap(f, d, r * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      CoordVector col = M.ract(cd.coinv_basis[i], H.basis(h));
      for (std::size_t row = 0; row < d; ++row) cd.nu.at(row, i * n + h) = col[row];
    }
  cd.nu_inv = LinearMap(f, r * n, d);
  for (std::size_t m = 0; m < d; ++m) {
    CoordVector col(f, r * n);
    for (const auto& [t, ct] : M.coaction.column(m).terms()) {
      CoordVector hp(f, n);
      hp[t % n] = Scalar::one(f);
      col += ct * kron(in_basis(cd.coinv_basis, d, f, E.column(t / n)), hp);
    }
    for (std::size_t row = 0; row < r * n; ++row) cd.nu_inv.at(row, m) = col[row];
  }

  if (cd.nu.compose(cd.nu_inv) != LinearMap::identity(f, d))
    cd.report.add("ν∘ν⁻¹=id", "", cd.nu.compose(cd.nu_inv).to_string(), "id");
  if (cd.nu_inv.compose(cd.nu) != LinearMap::identity(f, r * n))
    cd.report.add("ν⁻¹∘ν=id", "", cd.nu_inv.compose(cd.nu).to_string(), "id");

  // ν is a morphism of quasi-Hopf bimodules from V⊗H to M
  QuasiHopfBimodule VH = vh_bimodule(LeftModule{M.H, r, cd.triangle_action});
  LinearMap idn = LinearMap::identity(f, n);
  if (M.left_action.compose(kron(idn, cd.nu)) != cd.nu.compose(VH.left_action))
    cd.report.add("ν-left-linear", "", "", "");
  if (M.right_action.compose(kron(cd.nu, idn)) != cd.nu.compose(VH.right_action))
    cd.report.add("ν-right-linear", "", "", "");
  if (M.coaction.compose(cd.nu) != kron(cd.nu, idn).compose(VH.coaction))
    cd.report.add("ν-colinear", "", "", "");
  return cd;
}

CoinvariantContext make_coinvariant_context(const ComoduleAlgebra& B, const LinearMap& v) {
  CoinvariantContext ctx;
  ctx.CA = B;
  ctx.v = v;
  ctx.M = bimodule_from_comodule(B, v);
  ctx.pq = compute_pq(*B.H);
  ctx.E = projection_E(ctx.M);
  return ctx;
}

CoordVector star_multiply(const CoinvariantContext& ctx, const CoordVector& a, const CoordVector& a2) {
  if (!ctx.is_coinvariant(a) || !ctx.is_coinvariant(a2))
    throw FieldError("star_multiply: inputs must be coinvariant (E(a) = a)");
  const auto& H = *ctx.CA.H;
  const Field f = H.field();
  const std::size_t n = H.dim();
  const std::vector<std::size_t> d3{n, n, n};

  CoordVector direct = ctx.E.apply(ctx.bmul(a, a2));

  // expanded: v(q¹)(t¹▷a)v(t²)(z¹▷a')v(z²βS(q²t³z³))
  CoordVector expanded(f, ctx.CA.B->dim());
  for (const auto& [uw, cq] : ctx.pq.q_R.coords().terms())
    for (const auto& [tf, ct] : H.base.phi_inv.coords().terms()) {
      auto t = split_index(tf, d3);
      CoordVector ta = ctx.triangle(H.basis(t[0]), a);
      for (const auto& [zf, cz] : H.base.phi_inv.coords().terms()) {
        auto z = split_index(zf, d3);
        AlgebraElement tail = multiply(multiply(H.basis(z[1]), H.beta),
                                       H.S(multiply(multiply(H.basis(uw % n), H.basis(t[2])), H.basis(z[2]))));
        CoordVector term = ctx.bmul(ctx.v.column(uw / n), ta);
        term = ctx.bmul(term, ctx.v.apply(H.basis(t[1]).coords()));
        term = ctx.bmul(term, ctx.triangle(H.basis(z[0]), a2));
        term = ctx.bmul(term, ctx.v.apply(tail.coords()));
        expanded += (cq * ct * cz) * term;
      }
    }
  if (direct != expanded) {
    VerificationReport rep;
    rep.add("star-two-routes", "E(aa') vs expanded form", direct.to_string(), expanded.to_string());
    throw VerificationError("star_multiply: the two evaluation routes disagree", rep);
  }
  return direct;
}

SmashDecomposition decompose(const ComoduleAlgebra& B, const LinearMap& v) {
  CoinvariantContext ctx = make_coinvariant_context(B, v);
  const auto& H = *B.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = B.B->dim();

  {
    auto erep = verify_E_properties(ctx.M, ctx.E);
    if (!erep.ok()) throw VerificationError("decompose: projection properties fail", erep);
  }

  SmashDecomposition D;
  D.E = ctx.E;
  D.coinv_basis = image_basis(ctx.E);
  const std::size_t r = D.coinv_basis.size();
  auto intrinsic = [&](const CoordVector& vec) { return in_basis(D.coinv_basis, d, f, vec); };

  // the recovered module algebra (A, *, 1, ▷)
  D.A.H = B.H;
  D.A.dim = r;
  for (std::size_t i = 0; i < r; ++i) D.A.labels.push_back("a" + std::to_string(i));
  if (!ctx.is_coinvariant(B.B->unit())) {
    VerificationReport rep;
    rep.add("E(1)=1", "", ctx.E.apply(B.B->unit()).to_string(), AlgebraElement::unit(B.B).to_string());
    throw VerificationError("decompose: the unit is not coinvariant", rep);
  }
  D.A.unit = intrinsic(B.B->unit());
  D.A.mult = LinearMap(f, r, r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      CoordVector s = intrinsic(star_multiply(ctx, D.coinv_basis[i], D.coinv_basis[j]));
      for (std::size_t row = 0; row < r; ++row) D.A.mult.at(row, i * r + j) = s[row];
    }
  D.A.action = LinearMap(f, r, n * r);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i < r; ++i) {
      CoordVector t = intrinsic(ctx.triangle(H.basis(h), D.coinv_basis[i]));
      for (std::size_t row = 0; row < r; ++row) D.A.action.at(row, h * r + i) = t[row];
    }
  {
    auto arep = verify_module_algebra(D.A);
    if (!arep.ok()) throw VerificationError("decompose: recovered coinvariants fail the module algebra axioms", arep);
  }

  // Ψ(a⊗h) = a·v(h), Ψ⁻¹(b) = E(b₍₀₎)⊗b₍₁₎
  D.Psi = LinearMap(f, d, r * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      CoordVector col = ctx.bmul(D.coinv_basis[i], v.column(h));
      for (std::size_t row = 0; row < d; ++row) D.Psi.at(row, i * n + h) = col[row];
    }
  D.Psi_inv = LinearMap(f, r * n, d);
  for (std::size_t m = 0; m < d; ++m) {
    CoordVector col(f, r * n);
    for (const auto& [t, ct] : B.coaction.column(m).terms()) {
      CoordVector hp(f, n);
      hp[t % n] = Scalar::one(f);
      col += ct * kron(intrinsic(ctx.E.column(t / n)), hp);
    }
    for (std::size_t row = 0; row < r * n; ++row) D.Psi_inv.at(row, m) = col[row];
  }

  if (D.Psi.compose(D.Psi_inv) != LinearMap::identity(f, d))
    D.report.add("Ψ∘Ψ⁻¹=id", "", D.Psi.compose(D.Psi_inv).to_string(), "id");
  if (D.Psi_inv.compose(D.Psi) != LinearMap::identity(f, r * n))
    D.report.add("Ψ⁻¹∘Ψ=id", "", D.Psi_inv.compose(D.Psi).to_string(), "id");

  SmashProduct sp = smash_product(D.A);
  {
    auto mrep = check_algebra_morphism(D.Psi, *sp.CA.B, *B.B);
    for (auto& viol : mrep.violations) D.report.add("Ψ-" + viol.axiom, viol.witness, viol.lhs, viol.rhs);
  }
  LinearMap idn = LinearMap::identity(f, n);
  if (B.coaction.compose(D.Psi) != kron(D.Psi, idn).compose(sp.CA.coaction))
    D.report.add("ρ_B∘Ψ=(Ψ⊗id)∘ρ", "", "", "");
  {
    CoordVector moved = kron(kron(D.Psi, idn), idn).apply(sp.CA.phi_rho.coords());
    if (moved != B.phi_rho.coords()) D.report.add("(Ψ⊗id⊗id)(Φ_{A#H})=Φ_B", "", moved.to_string(), B.phi_rho.to_string());
  }
  if (D.Psi.compose(sp.j) != v) D.report.add("Ψ∘j=v", "", D.Psi.compose(sp.j).to_string(), v.to_string());

  if (!D.report.ok()) throw VerificationError("decompose: the structure isomorphism fails verification", D.report);
  return D;
}

LinearMap theta_map(const SmashDecomposition& D, const ComoduleAlgebra& B, const LinearMap& v) {
  CoinvariantContext ctx = make_coinvariant_context(B, v);
  const auto& H = *B.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), d = B.B->dim(), r = D.A.dim;
  VerificationReport rep;

  LinearMap theta(f, d, r);
  for (std::size_t i = 0; i < r; ++i) {
    CoordVector col(f, d);
    for (const auto& [uw, cp] : ctx.pq.p_R.coords().terms())
      col += cp * ctx.bmul(ctx.triangle(H.basis(uw / n), D.coinv_basis[i]), v.column(uw % n));
    for (std::size_t row = 0; row < d; ++row) theta.at(row, i) = col[row];
  }

  // θ = Ψ∘i₀
  {
    I0Result i0 = i0_map(D.A);
    rep.merge(i0.report);
    if (theta != D.Psi.compose(i0.map))
      rep.add("θ=Ψ∘i₀", "", theta.to_string(), D.Psi.compose(i0.map).to_string());
  }
  if (rank(theta) != r) rep.add("θ-injective", "(rank)", std::to_string(rank(theta)), std::to_string(r));

  // module-algebra morphism A → B^v
  ModuleAlgebra bv = bv_construction(B.B, v, B.H);
  if (theta.apply(D.A.unit) != bv.unit)
    rep.add("θ-unital", "", theta.apply(D.A.unit).to_string(), bv.unit.to_string());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      CoordVector lhs = theta.apply(D.A.amul(D.A.basis(i), D.A.basis(j)));
      CoordVector rhs = bv.amul(theta.column(i), theta.column(j));
      if (lhs != rhs) rep.add("θ-multiplicative", "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")",
                              lhs.to_string(), rhs.to_string());
    }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t i = 0; i < r; ++i) {
      CoordVector lhs = theta.apply(D.A.act(H.basis(h), D.A.basis(i)));
      CoordVector rhs = bv.act(H.basis(h), theta.column(i));
      if (lhs != rhs) rep.add("θ-H-linear", wit2(h, i), lhs.to_string(), rhs.to_string());
    }
  if (!rep.ok()) throw VerificationError("theta_map: verification failed", rep);
  return theta;
}

VerificationReport roundtrip(const ModuleAlgebra& A0) {
  VerificationReport rep;
  const auto& H = *A0.H;
  const Field f = H.field();
  const std::size_t n = H.dim(), m = A0.dim;

  SmashProduct sp = smash_product(A0);
  SmashDecomposition D;
  try {
    D = decompose(sp.CA, sp.j);
  } catch (const VerificationError& e) {
    rep.merge(e.report);
    rep.add("decompose", e.what(), "", "");
    return rep;
  }
  CoinvariantContext ctx = make_coinvariant_context(sp.CA, sp.j);
  auto emb = [&](std::size_t a) {
    CoordVector ea(f, m);
    ea[a] = Scalar::one(f);
    return kron(ea, AlgebraElement::unit(H.H()).coords()); // a#1
  };

  // E(a#h) = ε(h)(a#1)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t h = 0; h < n; ++h) {
      CoordVector lhs = D.E.column(a * n + h);
      CoordVector rhs = H.base.counit.at(0, h) * emb(a);
      if (lhs != rhs) rep.add("E(a#h)=ε(h)(a#1)", "(a=" + std::to_string(a) + ", h=" + std::to_string(h) + ")",
                              lhs.to_string(), rhs.to_string());
    }
  // (a#1)*(a'#1) = aa'#1 and h▷(a#1) = h·a#1
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      CoordVector lhs = star_multiply(ctx, emb(a), emb(b));
      CoordVector rhs = kron(A0.amul(A0.basis(a), A0.basis(b)), AlgebraElement::unit(H.H()).coords());
      if (lhs != rhs) rep.add("(a#1)*(a'#1)=aa'#1", "(a=" + std::to_string(a) + ", a'=" + std::to_string(b) + ")",
                              lhs.to_string(), rhs.to_string());
    }
    for (std::size_t h = 0; h < n; ++h) {
      CoordVector lhs = ctx.triangle(H.basis(h), emb(a));
      CoordVector rhs = kron(A0.act(H.basis(h), A0.basis(a)), AlgebraElement::unit(H.H()).coords());
      if (lhs != rhs) rep.add("h▷(a#1)=h·a#1", wit2(h, a), lhs.to_string(), rhs.to_string());
    }
  }
  // a ↦ a#1 is an isomorphism of module algebras A0 → recovered A
  LinearMap iso(f, D.A.dim, m);
  for (std::size_t a = 0; a < m; ++a) {
    CoordVector col = in_basis(D.coinv_basis, sp.CA.B->dim(), f, emb(a));
    for (std::size_t row = 0; row < D.A.dim; ++row) iso.at(row, a) = col[row];
  }
  if (D.A.dim != m || rank(iso) != m)
    rep.add("iso-bijective", "(rank)", std::to_string(rank(iso)), std::to_string(m));
  if (iso.apply(A0.unit) != D.A.unit) rep.add("iso-unital", "", iso.apply(A0.unit).to_string(), D.A.unit.to_string());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      CoordVector lhs = iso.apply(A0.amul(A0.basis(a), A0.basis(b)));
      CoordVector rhs = D.A.amul(iso.column(a), iso.column(b));
      if (lhs != rhs) rep.add("iso-multiplicative", "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")",
                              lhs.to_string(), rhs.to_string());
    }
    for (std::size_t h = 0; h < n; ++h) {
      CoordVector lhs = iso.apply(A0.act(H.basis(h), A0.basis(a)));
      CoordVector rhs = D.A.act(H.basis(h), iso.column(a));
      if (lhs != rhs) rep.add("iso-H-linear", wit2(h, a), lhs.to_string(), rhs.to_string());
    }
  }
  return rep;
}

} // namespace qha
