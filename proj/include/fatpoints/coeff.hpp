#pragma once

// Exact coefficient arithmetic: the rationals Q and prime fields F_p.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace fatpoints {

/// Raised for arithmetic that has no exact answer (division by zero) or that
/// mixes elements of different fields.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raw field value. A residue in [0, p-1] for F_p, a reduced fraction for Q.
/// Which alternative is active is determined by the owning Field.
using Scalar = std::variant<std::uint32_t, mpq_class>;

bool is_prime(std::uint64_t n);

class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Default field F_32003.
  Field() : Field(Kind::PrimeField, kDefaultPrime) {}

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is prime. p must fit in 31 bits.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return modulus_; }

  bool operator==(const Field&) const = default;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// num/den with den != 0; throws ArithmeticError if den vanishes in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, unsigned e) const;

  /// Checks that the active alternative of a matches this field.
  bool owns(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  std::string name() const;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), modulus_(p) {}

  Kind kind_;
  std::uint32_t modulus_;
};

/// A field value bundled with its field; arithmetic checks that both operands
/// live in the same field.
class FieldElement {
 public:
  FieldElement(Field f, Scalar v);
  FieldElement(Field f, long long v) : FieldElement(f, f.from_int(v)) {}

  const Field& field() const { return field_; }
  const Scalar& value() const { return value_; }
  bool is_zero() const { return field_.is_zero(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }

  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_.to_string(value_); }

 private:
  Field field_;
  Scalar value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

}  // namespace fatpoints
