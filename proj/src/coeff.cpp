#include "fatpoints/coeff.hpp"

#include <sstream>

namespace fatpoints {

namespace {

std::uint32_t residue(const Scalar& a) { return std::get<std::uint32_t>(a); }
const mpq_class& rational(const Scalar& a) { return std::get<mpq_class>(a); }

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw std::invalid_argument("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  return Field(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const {
  if (is_prime_field()) return std::uint32_t{0};
  return mpq_class(0);
}

Scalar Field::one() const {
  if (is_prime_field()) return std::uint32_t{1};
  return mpq_class(1);
}

Scalar Field::from_int(long long v) const {
  if (is_prime_field()) {
    long long r = v % static_cast<long long>(modulus_);
    if (r < 0) r += modulus_;
    return static_cast<std::uint32_t>(r);
  }
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return mpq_class(z);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw ArithmeticError("zero denominator");
  if (is_prime_field()) {
    std::uint32_t d = reduce_mpz(den, modulus_);
    if (d == 0) throw ArithmeticError("denominator vanishes modulo " + std::to_string(modulus_));
    return mul(Scalar{reduce_mpz(num, modulus_)}, Scalar{inverse_mod(d, modulus_)});
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool Field::owns(const Scalar& a) const {
  return is_prime_field() ? (std::holds_alternative<std::uint32_t>(a) && residue(a) < modulus_)
                          : std::holds_alternative<mpq_class>(a);
}

bool Field::is_zero(const Scalar& a) const {
  if (is_prime_field()) return residue(a) == 0;
  return sgn(rational(a)) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (is_prime_field()) return residue(a) == 1;
  return rational(a) == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint64_t s = std::uint64_t{residue(a)} + residue(b);
    if (s >= modulus_) s -= modulus_;
    return static_cast<std::uint32_t>(s);
  }
  return mpq_class(rational(a) + rational(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint32_t x = residue(a), y = residue(b);
    return x >= y ? x - y : x + (modulus_ - y);
  }
  return mpq_class(rational(a) - rational(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field())
    return static_cast<std::uint32_t>((std::uint64_t{residue(a)} * residue(b)) % modulus_);
  return mpq_class(rational(a) * rational(b));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime_field()) {
    std::uint32_t x = residue(a);
    return x == 0 ? 0u : modulus_ - x;
  }
  return mpq_class(-rational(a));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw ArithmeticError("division by zero");
  if (is_prime_field()) return inverse_mod(residue(a), modulus_);
  return mpq_class(1 / rational(a));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, unsigned e) const {
  Scalar result = one();
  Scalar base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_prime_field()) return std::to_string(residue(a));
  return rational(a).get_str();
}

std::string Field::name() const {
  return is_prime_field() ? "F_" + std::to_string(modulus_) : "Q";
}

FieldElement::FieldElement(Field f, Scalar v) : field_(f), value_(std::move(v)) {
  if (!field_.owns(value_)) throw ArithmeticError("value does not belong to " + field_.name());
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw ArithmeticError("mixed fields: " + a.field().name() + " vs " + b.field().name());
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("unknown op");
}

}  // namespace fatpoints
