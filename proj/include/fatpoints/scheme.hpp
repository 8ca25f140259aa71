#pragma once

// Fat point schemes Z = m_1 P_1 + ... + m_s P_s in P^n x P^m.

#include <cstddef>
#include <random>
#include <vector>

#include "fatpoints/biring.hpp"
#include "fatpoints/gbasis.hpp"

namespace fatpoints {

/// A point [a_0:...:a_n] x [b_0:...:b_m], stored with the first nonzero
/// coordinate of each factor scaled to 1.
class PPoint {
 public:
  /// Throws std::invalid_argument if a factor is all zero.
  PPoint(const Field& field, std::vector<Scalar> a, std::vector<Scalar> b);

  const std::vector<Scalar>& a() const { return a_; }
  const std::vector<Scalar>& b() const { return b_; }
  /// Index of the first nonzero coordinate of each factor.
  std::size_t x_pivot() const { return x_pivot_; }
  std::size_t y_pivot() const { return y_pivot_; }

  bool operator==(const PPoint& o) const { return a_ == o.a_ && b_ == o.b_; }

  std::string to_string(const Field& field) const;

 private:
  std::vector<Scalar> a_;
  std::vector<Scalar> b_;
  std::size_t x_pivot_ = 0;
  std::size_t y_pivot_ = 0;
};

struct FatPoint {
  PPoint point;
  int multiplicity;
};

class FatPointScheme {
 public:
  /// Validates coordinate lengths, multiplicities >= 1 and distinct points.
  FatPointScheme(RingPtr ring, std::vector<FatPoint> items);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<FatPoint>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const FatPoint& operator[](std::size_t i) const { return items_.at(i); }
  int max_multiplicity() const;

 private:
  RingPtr ring_;
  std::vector<FatPoint> items_;
};

/// (a_k x_j - a_j x_k, j != k; b_l y_j - b_j y_l, j != l) with k, l the pivots.
Ideal point_ideal(const PPoint& p, const RingPtr& ring);

/// I_{P_1}^{m_1} ∩ ... ∩ I_{P_s}^{m_s}; the unit ideal for the empty scheme.
Ideal scheme_ideal(const FatPointScheme& z);

/// Z' of the separator setting: multiplicity of point i (0-based) lowered by
/// one, dropping the point when it reaches zero. Throws std::out_of_range.
FatPointScheme reduce_multiplicity(const FatPointScheme& z, std::size_t i);

/// sum_i C(m_i + N - 1, m_i - 1) with N = n + m.
long long scheme_degree(const FatPointScheme& z);

/// Raised when the characteristic is too small for derivative conditions.
class CharacteristicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// dim_k (I_Z)_t as the nullity of the vanishing conditions of all partial
/// derivatives of order < m_i at each P_i, on the affine chart of the pivots.
/// Independent of any Gröbner computation.
long long ideal_piece_dim_oracle(const FatPointScheme& z, Bidegree t);

/// A uniformly random point with pivot coordinates 1 (affine chart x_0 = y_0 = 1).
PPoint random_point(const Ring& ring, std::mt19937_64& rng);

/// Uniform random field element (small integers for Q).
Scalar random_scalar(const Field& field, std::mt19937_64& rng);

}  // namespace fatpoints
