#include "qha/corpus.hpp"

namespace qha::corpus {

namespace {

// Cyclic group algebra k[Z/n] with its Hopf structure (group-like basis).
HopfPtr cyclic(Field f, std::size_t n, std::vector<std::string> labels) {
  const Scalar one = Scalar::one(f);
  std::vector<MultTriple> mult;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult.push_back({i, j, (i + j) % n, one});
  CoordVector unit(f, n);
  unit[0] = one;
  AlgebraPtr H = BasedAlgebra::make(f, std::move(labels), mult, unit);

  LinearMap comul(f, n * n, n), counit(f, 1, n), antipode(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    comul.at(i * n + i, i) = one;
    counit.at(0, i) = one;
    antipode.at((n - i) % n, i) = one;
  }
  CoordVector phi(f, n * n * n);
  phi[0] = one; // 1⊗1⊗1
  CoordVector alpha = unit, beta = unit;
  return make_quasi_hopf(H, comul, counit, phi, phi, antipode, alpha, beta);
}

} // namespace

HopfPtr trivial(Field f) { return cyclic(f, 1, {"1"}); }

HopfPtr kz2(Field f) { return cyclic(f, 2, {"1", "g"}); }

HopfPtr kz4(Field f) { return cyclic(f, 4, {"1", "g", "g2", "g3"}); }

HopfPtr sweedler(Field f) {
  const Scalar one = Scalar::one(f);
  const Scalar neg = -one;
  // basis order: 1, g, x, gx
  std::vector<MultTriple> mult = {
      {0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {0, 3, 3, one},
      {1, 0, 1, one}, {1, 1, 0, one}, {1, 2, 3, one}, {1, 3, 2, one},
      {2, 0, 2, one}, {2, 1, 3, neg},
      {3, 0, 3, one}, {3, 1, 2, neg},
  };
  CoordVector unit(f, 4);
  unit[0] = one;
  AlgebraPtr H = BasedAlgebra::make(f, {"1", "g", "x", "gx"}, mult, unit);

  LinearMap comul(f, 16, 4);
  comul.at(0 * 4 + 0, 0) = one;  // Δ(1) = 1⊗1
  comul.at(1 * 4 + 1, 1) = one;  // Δ(g) = g⊗g
  comul.at(0 * 4 + 2, 2) = one;  // Δ(x) = 1⊗x + x⊗g
  comul.at(2 * 4 + 1, 2) = one;
  comul.at(1 * 4 + 3, 3) = one;  // Δ(gx) = g⊗gx + gx⊗1
  comul.at(3 * 4 + 0, 3) = one;

  LinearMap counit(f, 1, 4);
  counit.at(0, 0) = one;
  counit.at(0, 1) = one;

  LinearMap antipode(f, 4, 4);
  antipode.at(0, 0) = one; // S(1) = 1
  antipode.at(1, 1) = one; // S(g) = g
  antipode.at(3, 2) = one; // S(x) = gx
  antipode.at(2, 3) = neg; // S(gx) = -x

  CoordVector phi(f, 64);
  phi[0] = one;
  return make_quasi_hopf(H, comul, counit, phi, phi, antipode, unit, unit);
}

HopfPtr h2(Field f) {
  const Scalar one = Scalar::one(f);
  const Scalar quarter(f, 1, 4);
  std::vector<MultTriple> mult;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) mult.push_back({i, j, (i + j) % 2, one});
  CoordVector unit(f, 2);
  unit[0] = one;
  AlgebraPtr H = BasedAlgebra::make(f, {"1", "g"}, mult, unit);

  LinearMap comul(f, 4, 2), counit(f, 1, 2);
  comul.at(0, 0) = one;
  comul.at(3, 1) = one;
  counit.at(0, 0) = one;
  counit.at(0, 1) = one;
  LinearMap antipode = LinearMap::identity(f, 2);

  // Φ = 1⊗1⊗1 − 2 p⊗p⊗p, p = (1−g)/2; coefficient at g^a⊗g^b⊗g^c is
  // δ_{abc,000} − (1/4)(−1)^{a+b+c}. Self-inverse.
  CoordVector phi(f, 8);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        Scalar v = ((a + b + c) % 2 == 0) ? -quarter : quarter;
        if (a == 0 && b == 0 && c == 0) v += one;
        phi[a * 4 + b * 2 + c] = v;
      }

  CoordVector alpha(f, 2);
  alpha[1] = one; // α = g
  return make_quasi_hopf(H, comul, counit, phi, phi, antipode, alpha, unit);
}

std::vector<std::pair<std::string, HopfPtr>> all(Field f) {
  return {{"k", trivial(f)}, {"kz2", kz2(f)}, {"kz4", kz4(f)}, {"sweedler", sweedler(f)}, {"h2", h2(f)}};
}

} // namespace qha::corpus
