#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fia {

class Scalar;

/// Coefficient field descriptor: the rationals, or Z/p for a prime p < 2^31.
/// Small value type; two descriptors compare equal iff they denote the same
/// field configuration.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// Modulus of a prime field. Only meaningful when is_prime_field().
  std::uint32_t modulus() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long n) const;

  /// Parses the textual scalar form: "num" or "num/den" for the rationals,
  /// decimal digits (reduced mod p) for a prime field.
  Scalar parse(std::string_view text) const;

  /// "q" or "fp:<p>", matching the CLI --field syntax.
  std::string name() const;
  static Field parse_name(std::string_view name);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;  // 0 encodes the rationals

  friend class Scalar;
};

/// Immutable exact element of a fixed field. All arithmetic is exact; mixing
/// elements of different field configurations raises MixedFields.
class Scalar {
 public:
  /// Rational zero. Prefer Field::zero()/one()/from_integer() for anything
  /// field-dependent.
  Scalar() : rep_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  /// Structural equality; elements of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "n" / "n/d" with d > 0 and gcd(n,d)=1, or the residue
  /// in [0, p).
  std::string str() const;

 private:
  struct Mod {
    std::uint32_t p;
    std::uint32_t v;
    friend bool operator==(const Mod&, const Mod&) = default;
  };

  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Mod m) : rep_(m) {}

  std::variant<mpq_class, Mod> rep_;

  friend class Field;
};

}  // namespace fia
