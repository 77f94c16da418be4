#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qha {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
public:
  DivisionByZero() : FieldError("division by zero") {}
};

/// Ground field: arbitrary-precision rationals (default) or GF(p), p prime < 2^31.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return mod_ == 0; }
  std::uint32_t modulus() const { return mod_; }

  bool operator==(const Field&) const = default;

  std::string to_string() const;
  static Field parse(const std::string& spec);

private:
  std::uint32_t mod_ = 0; // 0 means rationals
};

/// Exact field element. All arithmetic is exact; no rounding ever occurs.
/// For GF(p) the value is kept as the canonical residue in [0, p).
class Scalar {
public:
  Scalar() = default; // rational zero

  explicit Scalar(Field f) : mod_(f.modulus()) {}
  Scalar(Field f, const Int& n) : v_(n), mod_(f.modulus()) { canonicalize(); }
  Scalar(Field f, const Int& num, const Int& den);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return mod_ == 0 ? Field::rationals() : Field::gf(mod_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  std::string to_string() const;

private:
  Rational v_;
  std::uint32_t mod_ = 0;

  void canonicalize();
  void check_same_field(const Scalar& o) const;
};

} // namespace qha
