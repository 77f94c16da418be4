#pragma once

#include "qha/linalg.hpp"
#include "qha/report.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace qha {

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Structure constant: e_i · e_j contains c · e_k.
struct MultTriple {
  std::size_t i, j, k;
  Scalar c;
};

/// Finite-dimensional unital algebra presented by structure constants on a
/// labeled basis. Tensor products keep their factor list and compute basis
/// products legwise instead of materializing the product table.
class BasedAlgebra {
public:
  static AlgebraPtr make(Field f, std::vector<std::string> labels, const std::vector<MultTriple>& mult,
                         CoordVector unit);

  /// The ground field as a one-dimensional algebra.
  static AlgebraPtr ground(Field f);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const CoordVector& unit() const { return unit_; }
  const std::vector<AlgebraPtr>& factors() const { return factors_; }

  /// e_i · e_j as a sparse vector.
  SparseVec basis_product(std::size_t i, std::size_t j) const;

  /// Dense structure-constant triples (for serialization).
  std::vector<MultTriple> triples() const;

  /// Cheap compatibility check for element operations.
  bool same_as(const BasedAlgebra& o) const;

private:
  friend AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b);

  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  CoordVector unit_;
  std::vector<std::vector<SparseVec>> mult_; // mult_[i][j]; empty for tensor algebras
  std::vector<AlgebraPtr> factors_;          // nonempty for tensor algebras
};

/// basis = pairs (lex order, left factor major), (a⊗b)(a'⊗b') = aa'⊗bb'.
AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b);
AlgebraPtr tensor_power(AlgebraPtr a, std::size_t k);

class AlgebraElement {
public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr alg, CoordVector coords);

  static AlgebraElement zero(AlgebraPtr alg);
  static AlgebraElement basis(AlgebraPtr alg, std::size_t i);
  static AlgebraElement unit(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const CoordVector& coords() const { return coords_; }
  Field field() const { return coords_.field(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement x) {
    x.coords_ *= s;
    return x;
  }

  bool is_zero() const { return coords_.is_zero(); }
  bool operator==(const AlgebraElement& o) const { return coords_ == o.coords_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  AlgebraPtr alg_;
  CoordVector coords_;
};

/// Bilinear extension of the structure constants.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// x ⊗ y in tensor_algebra(x.algebra, y.algebra) (or a compatible target).
AlgebraElement tensor_elem(AlgebraPtr target, const AlgebraElement& x, const AlgebraElement& y);

/// Matrix of y ↦ x·y.
LinearMap left_mult_matrix(const AlgebraElement& x);

/// Checks associativity on all basis triples and the two-sided unit law.
VerificationReport verify_associative_unital(const BasedAlgebra& a);

/// Two-sided inverse (left inverse solved linearly, then checked), or nullopt.
std::optional<AlgebraElement> invert_element(const AlgebraElement& x);

/// f(xy) = f(x)f(y) on all basis pairs, and f(1) = 1.
VerificationReport check_algebra_morphism(const LinearMap& f, const BasedAlgebra& a, const BasedAlgebra& b);

/// Embed x ∈ F (a tensor factor block) into `target` = L ⊗ F ⊗ R at leg
/// offset `at` (counted in target legs), with units on the other legs.
AlgebraElement embed(const AlgebraElement& x, std::size_t at, AlgebraPtr target);

/// Apply a linear map to the coordinates, landing in `target`.
AlgebraElement apply_map(AlgebraPtr target, const LinearMap& f, const AlgebraElement& x);

/// Per-leg dims of a (possibly nested) tensor algebra, flattened.
std::vector<std::size_t> leg_dims(const BasedAlgebra& a);

} // namespace qha
