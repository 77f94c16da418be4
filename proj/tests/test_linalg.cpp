#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/linalg.hpp"

#include <random>

using namespace qha;

namespace {

const Field Q = Field::rationals();

CoordVector vec(std::initializer_list<int> xs) {
  std::vector<Scalar> c;
  for (int x : xs) c.emplace_back(Q, x);
  return CoordVector(Q, std::move(c));
}

LinearMap mat(std::size_t dst, std::size_t src, std::initializer_list<int> rowmajor) {
  LinearMap m(Q, dst, src);
  auto it = rowmajor.begin();
  for (std::size_t r = 0; r < dst; ++r)
    for (std::size_t c = 0; c < src; ++c) m.at(r, c) = Scalar(Q, *it++);
  return m;
}

LinearMap random_map(std::mt19937& rng, std::size_t dst, std::size_t src) {
  std::uniform_int_distribution<int> d(-3, 3);
  LinearMap m(Q, dst, src);
  for (std::size_t r = 0; r < dst; ++r)
    for (std::size_t c = 0; c < src; ++c) m.at(r, c) = Scalar(Q, d(rng));
  return m;
}

} // namespace

TEST_CASE("scalar field arithmetic") {
  Scalar half(Q, 1, 2);
  CHECK(half + half == Scalar::one(Q));
  CHECK(half * Scalar(Q, 2) == Scalar::one(Q));
  CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);

  Field g7 = Field::gf(7);
  Scalar a(g7, 3), b(g7, 5);
  CHECK(a + b == Scalar(g7, 1));
  CHECK(a * b == Scalar(g7, 1));
  CHECK(a.inverse() == b);
  CHECK(Scalar(g7, 1, 2) == Scalar(g7, 4));
  CHECK_THROWS_AS(Field::gf(6), FieldError);
  CHECK_THROWS_AS(a + half, FieldError);
}

TEST_CASE("solve_linear identity and scalar division") {
  LinearMap id = LinearMap::identity(Q, 3);
  auto x = solve_linear(id, vec({1, 0, 0}));
  REQUIRE(x);
  CHECK(*x == vec({1, 0, 0}));

  auto y = solve_linear(mat(1, 1, {2}), vec({1}));
  REQUIRE(y);
  CHECK((*y)[0] == Scalar(Q, 1, 2));
}

TEST_CASE("solve_linear inconsistent system") {
  LinearMap zero(Q, 2, 2);
  CHECK(!solve_linear(zero, vec({1, 0})));
}

TEST_CASE("solve_linear reproduces rhs exactly (property)") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    LinearMap m = random_map(rng, 4, 5);
    CoordVector rhs = m.apply(random_map(rng, 5, 1).column(0));
    auto x = solve_linear(m, rhs);
    REQUIRE(x);
    CHECK(m.apply(*x) == rhs);
  }
}

TEST_CASE("image_basis echelon normalization") {
  CHECK(image_basis(LinearMap::identity(Q, 3)).size() == 3);
  CHECK(image_basis(LinearMap::identity(Q, 3))[0] == vec({1, 0, 0}));
  CHECK(image_basis(LinearMap(Q, 2, 2)).empty());

  auto b = image_basis(mat(2, 2, {1, 2, 1, 2}));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == vec({1, 1}));
}

TEST_CASE("image_basis idempotent as subspace description (property)") {
  std::mt19937 rng(11);
  for (int it = 0; it < 30; ++it) {
    LinearMap m = random_map(rng, 4, 4);
    auto b1 = image_basis(m);
    auto b2 = image_basis(LinearMap::from_columns(Q, 4, b1));
    CHECK(b1 == b2);
  }
}

TEST_CASE("kron identities") {
  CHECK(kron(LinearMap::identity(Q, 2), LinearMap::identity(Q, 3)) == LinearMap::identity(Q, 6));

  std::mt19937 rng(13);
  for (int it = 0; it < 20; ++it) {
    LinearMap f = random_map(rng, 2, 2), g = random_map(rng, 3, 3);
    CoordVector u = random_map(rng, 2, 1).column(0), v = random_map(rng, 3, 1).column(0);
    // defining property: (f⊗g)(u⊗v) = f(u)⊗g(v)
    CHECK(kron(f, g).apply(kron(u, v)) == kron(f.apply(u), g.apply(v)));
    // mixed-product: (f⊗g)∘(f'⊗g') = (f∘f')⊗(g∘g'), direct matrix oracle
    LinearMap f2 = random_map(rng, 2, 2), g2 = random_map(rng, 3, 3);
    CHECK(kron(f, g).compose(kron(f2, g2)) == kron(f.compose(f2), g.compose(g2)));
    // associativity under the flattened index convention
    LinearMap h = random_map(rng, 2, 2);
    CHECK(kron(kron(f, g), h) == kron(f, kron(g, h)));
  }
}

TEST_CASE("invert_map") {
  auto inv = invert_map(mat(2, 2, {1, 2, 3, 4}));
  REQUIRE(inv);
  CHECK(inv->compose(mat(2, 2, {1, 2, 3, 4})) == LinearMap::identity(Q, 2));
  CHECK(!invert_map(mat(2, 2, {1, 2, 2, 4})));
}

TEST_CASE("index flattening round trip") {
  std::vector<std::size_t> dims{2, 3, 4};
  for (std::size_t i = 0; i < 24; ++i) CHECK(flatten_index(split_index(i, dims), dims) == i);
  CHECK(split_index(23, dims) == std::vector<std::size_t>{1, 2, 3});
}
