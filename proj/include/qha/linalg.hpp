#pragma once

#include "qha/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qha {

class DimensionMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coordinate vector over the ground field.
class CoordVector {
public:
  CoordVector() = default;
  CoordVector(Field f, std::size_t dim) : field_(f), c_(dim, Scalar::zero(f)) {}
  CoordVector(Field f, std::vector<Scalar> coords) : field_(f), c_(std::move(coords)) {}

  Field field() const { return field_; }
  std::size_t dim() const { return c_.size(); }

  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool operator==(const CoordVector& o) const;
  bool operator!=(const CoordVector& o) const { return !(*this == o); }

  CoordVector& operator+=(const CoordVector& o);
  CoordVector& operator-=(const CoordVector& o);
  CoordVector& operator*=(const Scalar& s);
  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
  friend CoordVector operator*(const Scalar& s, CoordVector v) { return v *= s; }

  /// Nonzero entries as (index, value) pairs.
  std::vector<std::pair<std::size_t, Scalar>> terms() const;

  std::string to_string() const;

private:
  Field field_;
  std::vector<Scalar> c_;
};

/// Dense linear map, dst_dim x src_dim, row-major.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(Field f, std::size_t dst, std::size_t src)
      : field_(f), dst_(dst), src_(src), e_(dst * src, Scalar::zero(f)) {}

  static LinearMap identity(Field f, std::size_t n);
  static LinearMap from_columns(Field f, std::size_t dst, const std::vector<CoordVector>& cols);

  Field field() const { return field_; }
  std::size_t src_dim() const { return src_; }
  std::size_t dst_dim() const { return dst_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * src_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * src_ + c]; }

  CoordVector apply(const CoordVector& x) const;
  CoordVector column(std::size_t c) const;

  /// this ∘ g
  LinearMap compose(const LinearMap& g) const;

  LinearMap operator-(const LinearMap& o) const;
  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string to_string() const;

private:
  Field field_;
  std::size_t dst_ = 0, src_ = 0;
  std::vector<Scalar> e_;
};

/// First solution of map·x = rhs under leftmost-pivot reduced echelon form
/// (free variables zero), or nullopt when the system is inconsistent.
std::optional<CoordVector> solve_linear(const LinearMap& map, const CoordVector& rhs);

/// Reduced-column-echelon basis of the column space; deterministic, length = rank.
std::vector<CoordVector> image_basis(const LinearMap& map);

std::size_t rank(const LinearMap& map);

/// Two-sided inverse of a square map, or nullopt when singular.
std::optional<LinearMap> invert_map(const LinearMap& map);

/// Kronecker product; basis of U⊗V ordered lexicographically, U-index major.
LinearMap kron(const LinearMap& f, const LinearMap& g);

/// Kronecker of coordinate vectors under the same convention.
CoordVector kron(const CoordVector& u, const CoordVector& v);

/// Split a flat tensor index into per-leg indices (left factor major).
std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& dims);
std::size_t flatten_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims);

} // namespace qha
