#pragma once

// The bigraded polynomial ring k[x_0..x_n, y_0..y_m] with deg x_i = (1,0) and
// deg y_j = (0,1), plus an optional auxiliary variable of degree (0,0) used
// for elimination.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/coeff.hpp"

namespace fatpoints {

struct Bidegree {
  int d1 = 0;
  int d2 = 0;

  /// Lexicographic total order on (d1, d2).
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

  /// Componentwise partial order.
  bool preceq(const Bidegree& o) const { return d1 <= o.d1 && d2 <= o.d2; }
  int total() const { return d1 + d2; }
  bool nonnegative() const { return d1 >= 0 && d2 >= 0; }

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
  friend std::ostream& operator<<(std::ostream& os, const Bidegree& b) {
    return os << '(' << b.d1 << ',' << b.d2 << ')';
  }
};

Bidegree componentwise_max(Bidegree a, Bidegree b);

/// C(a, b) as a nonnegative integer; 0 when b < 0 or b > a.
long long binomial(long long a, long long b);

inline constexpr std::size_t kMaxVars = 12;

/// Dense exponent vector. Variables are laid out x_0..x_n, y_0..y_m and then
/// the optional auxiliary variable; `split` = n+1 marks the start of the
/// y-block and `ny` = m+1 its length.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::uint8_t nvars, std::uint8_t split, std::uint8_t ny);

  std::uint8_t nvars() const { return nvars_; }
  std::uint16_t operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, std::uint16_t e);

  int total_degree() const { return deg_x_ + deg_y_ + deg_aux_; }
  Bidegree bidegree() const { return {deg_x_, deg_y_}; }
  int aux_degree() const { return deg_aux_; }
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& o) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

  std::size_t hash() const;

 private:
  friend class Ring;
  void recompute();

  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint8_t split_ = 0;
  std::uint8_t ny_ = 0;
  int deg_x_ = 0;
  int deg_y_ = 0;
  int deg_aux_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class MonomialOrder {
  /// Degree reverse lexicographic on all variables, x-block before y-block.
  GrevlexGlobal,
  /// Auxiliary-variable degree first, ties broken by grevlex on the rest.
  BlockEliminationFirstVar,
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  /// Requires n >= 1, m >= 1 and n + m + 3 <= kMaxVars.
  Ring(int n, int m, Field field, bool with_aux = false);

  static RingPtr make(int n, int m, Field field = Field{}) {
    return std::make_shared<const Ring>(n, m, field, false);
  }
  /// The same ring with one auxiliary variable adjoined, ordered by elimination.
  RingPtr with_aux() const { return std::make_shared<const Ring>(n_, m_, field_, true); }
  /// The same ring without the auxiliary variable.
  RingPtr base() const { return std::make_shared<const Ring>(n_, m_, field_, false); }

  int n() const { return n_; }
  int m() const { return m_; }
  const Field& field() const { return field_; }
  bool has_aux() const { return aux_; }
  MonomialOrder order() const {
    return aux_ ? MonomialOrder::BlockEliminationFirstVar : MonomialOrder::GrevlexGlobal;
  }
  std::size_t nvars() const { return static_cast<std::size_t>(n_ + m_ + 2 + (aux_ ? 1 : 0)); }
  std::size_t x_index(int i) const { return static_cast<std::size_t>(i); }
  std::size_t y_index(int j) const { return static_cast<std::size_t>(n_ + 1 + j); }
  std::size_t aux_index() const { return static_cast<std::size_t>(n_ + m_ + 2); }

  /// Same ambient data; rings are compared by value, not by pointer.
  bool operator==(const Ring& o) const {
    return n_ == o.n_ && m_ == o.m_ && field_ == o.field_ && aux_ == o.aux_;
  }

  Monomial one() const;
  Monomial var(std::size_t index, std::uint16_t power = 1) const;
  Monomial make_monomial(std::span<const int> xexp, std::span<const int> yexp) const;

  /// Negative if a < b, zero if equal, positive if a > b under the active order.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string var_name(std::size_t index) const;
  std::string to_string(const Monomial& mono) const;

 private:
  int n_;
  int m_;
  Field field_;
  bool aux_;
};

/// Number of monomials of bidegree t: C(t1+n, n) * C(t2+m, m).
long long dim_bigraded_piece(Bidegree t, const Ring& ring);

/// Every monomial of bidegree t in the x,y variables, sorted descending.
std::vector<Monomial> monomials_of_bidegree(Bidegree t, const Ring& ring);

/// Raised when operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Sparse polynomial, terms strictly descending under the ring's order, no
/// zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial from_monomial(RingPtr ring, Monomial mono, Scalar c);
  static Polynomial x(RingPtr ring, int i);
  static Polynomial y(RingPtr ring, int j);
  /// Parses the textual syntax produced by to_string (x0..xn, y0..ym, t).
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const Field& field() const { return ring_->field(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& mono) const;
  /// this - c * mono * g, fused.
  void sub_multiple(const Scalar& c, const Monomial& mono, const Polynomial& g);
  Polynomial monic() const;
  /// Removes and returns the leading term; requires a nonzero polynomial.
  Term take_leading();
  Polynomial pow(unsigned e) const;

  /// Common bidegree of all terms, or nullopt when f is not bihomogeneous.
  /// Throws std::invalid_argument on the zero polynomial.
  std::optional<Bidegree> bidegree() const;
  bool is_bihomogeneous() const { return is_zero() || bidegree().has_value(); }
  /// Split into bihomogeneous pieces, ordered by bidegree.
  std::vector<Polynomial> bihomogeneous_components() const;

  /// Evaluate at a point given by all coordinates in variable order.
  Scalar evaluate(std::span<const Scalar> values) const;

  /// Maps this polynomial into another ring with the same n, m and field
  /// (adding or dropping the auxiliary variable, which must not occur).
  Polynomial in_ring(RingPtr target) const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Result of bidegree_of for nonzero polynomials.
std::optional<Bidegree> bidegree_of(const Polynomial& f);

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Substitutes x_i -> sum_j A[i][j] x_j and y_i -> sum_j B[i][j] y_j.
/// Throws std::invalid_argument if A or B is singular or has the wrong shape.
Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace fatpoints
