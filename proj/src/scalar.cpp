#include "qha/scalar.hpp"

namespace qha {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Residue of an arbitrary-precision integer mod p, in [0, p).
std::uint32_t residue(const Int& n, std::uint32_t p) {
  Int r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Inverse mod p by extended Euclid; p is prime so every nonzero residue is a unit.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

} // namespace

Field Field::gf(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError("gf modulus must be prime: " + std::to_string(p));
  Field f;
  f.mod_ = p;
  return f;
}

std::string Field::to_string() const {
  return mod_ == 0 ? "rational" : "gf:" + std::to_string(mod_);
}

Field Field::parse(const std::string& spec) {
  if (spec == "rational") return rationals();
  if (spec.rfind("gf:", 0) == 0) {
    const std::string tail = spec.substr(3);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw FieldError("bad field spec: " + spec);
    unsigned long p = std::stoul(tail);
    if (p >= (1ul << 31)) throw FieldError("gf modulus out of range: " + spec);
    return gf(static_cast<std::uint32_t>(p));
  }
  throw FieldError("bad field spec: " + spec);
}

Scalar::Scalar(Field f, const Int& num, const Int& den) : mod_(f.modulus()) {
  if (den == 0) throw DivisionByZero();
  if (mod_ == 0) {
    v_ = Rational(num, den);
  } else {
    std::uint32_t d = residue(den, mod_);
    if (d == 0) throw DivisionByZero();
    v_ = Int(std::uint64_t(residue(num, mod_)) * inv_mod(d, mod_) % mod_);
  }
}

void Scalar::canonicalize() {
  if (mod_ != 0) v_ = Int(residue(numerator(), mod_));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (mod_ != o.mod_)
    throw FieldError("mixed ground fields: " + field().to_string() + " vs " + o.field().to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.canonicalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  v_ += o.v_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  v_ -= o.v_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  v_ *= o.v_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r(field());
  if (mod_ == 0) {
    r.v_ = 1 / v_;
  } else {
    r.v_ = Int(inv_mod(static_cast<std::uint32_t>(numerator()), mod_));
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return v_ == o.v_;
}

std::string Scalar::to_string() const {
  if (mod_ != 0 || denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

} // namespace qha
