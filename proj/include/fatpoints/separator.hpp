#pragma once

// Separators of fat points: minimal separator sets, their degree tuples,
// good-set verification, bigraded Hilbert functions and ACM detection.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fatpoints/gbasis.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

/// A theorem check was requested on input that does not satisfy its
/// hypotheses (as opposed to the check itself failing).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeparatorSet {
  std::size_t point_index = 0;
  std::vector<Polynomial> polys;
  /// Co-sorted with polys, lexicographically ascending.
  std::vector<Bidegree> degrees;
};

struct HilbertTable {
  Bidegree rect;
  /// values[i][j] = H(i, j) for 0 <= i <= rect.d1, 0 <= j <= rect.d2.
  std::vector<std::vector<long long>> values;

  long long at(int i, int j) const { return values.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  bool operator==(const HilbertTable&) const = default;
};

/// Caches the ideals a scheme's separator computations keep reusing: I_Z,
/// each I_{Z'}, the point-ideal powers and the minimal separator sets.
class FatPointAnalysis {
 public:
  explicit FatPointAnalysis(FatPointScheme z);

  const FatPointScheme& scheme() const { return z_; }
  const RingPtr& ring_ptr() const { return z_.ring_ptr(); }
  const Ideal& ideal() const;
  const FatPointScheme& residual(std::size_t i) const;
  const Ideal& residual_ideal(std::size_t i) const;
  /// I_{P_i}^e, with e = 0 giving the unit ideal.
  const Ideal& point_power(std::size_t i, int e) const;
  const SeparatorSet& separators(std::size_t i) const;

  void check_index(std::size_t i) const;

 private:
  struct State;
  FatPointScheme z_;
  std::shared_ptr<State> state_;
};

/// F in I_{P_i}^{m_i-1}, not in I_{P_i}^{m_i}, and in I_{P_j}^{m_j} for j != i.
/// Throws std::invalid_argument for zero or non-bihomogeneous F.
bool is_separator(const Polynomial& f, const FatPointAnalysis& z, std::size_t i);
bool is_separator(const Polynomial& f, const FatPointScheme& z, std::size_t i);

/// Minimal generating set of I_{Z'}/I_Z, normal forms modulo I_Z, co-sorted
/// with their bidegrees.
SeparatorSet minimal_separators(const FatPointAnalysis& z, std::size_t i);
SeparatorSet minimal_separators(const FatPointScheme& z, std::size_t i);

/// deg_Z(P_i), sorted lexicographically.
std::vector<Bidegree> degree_of_point(const FatPointAnalysis& z, std::size_t i);
std::vector<Bidegree> degree_of_point(const FatPointScheme& z, std::size_t i);

struct CoordinateChange {
  FatPointScheme scheme;
  /// New point coordinates are point_map * old coordinates.
  ScalarMatrix x_point_map;
  ScalarMatrix y_point_map;
  /// Inverses of the point maps; pass to apply_linear_change to carry forms
  /// on the old scheme to forms on the new one.
  ScalarMatrix x_substitution;
  ScalarMatrix y_substitution;
};

/// Coordinates in which L becomes x_0 and L' becomes y_0. Throws
/// std::invalid_argument when L or L' has the wrong bidegree or vanishes at a
/// support point.
CoordinateChange normalize_coordinates(const FatPointScheme& z, const Polynomial& l, const Polynomial& l_prime);

struct Dependence {
  Bidegree degree;
  /// Indices into the separator set and their coefficients.
  std::vector<std::size_t> indices;
  std::vector<Scalar> coefficients;
  /// sum_k c_k x_0^a y_0^b F_k, which lies in I_Z.
  Polynomial relation;
};

struct GoodSetResult {
  bool good = false;
  std::optional<Dependence> witness;
};

/// Checks linear independence of the x_0/y_0-shifted separators in (R/I_Z)_t
/// for every t in [0, D], D the componentwise maximum separator degree.
/// Outside that box the participating separators are those of the clamped
/// degree and multiplication by x_0, y_0 is injective, so the box suffices.
/// Throws PreconditionError if x_0 or y_0 vanishes at a support point and
/// std::invalid_argument if S is not a separator set for (Z, i).
GoodSetResult is_good_set(const FatPointAnalysis& z, std::size_t i, const SeparatorSet& s);
GoodSetResult is_good_set(const FatPointScheme& z, std::size_t i, const SeparatorSet& s);

HilbertTable hilbert_function(const Ideal& ideal, Bidegree rect);
HilbertTable hilbert_function(const FatPointScheme& z, Bidegree rect);

/// H_{Z'}(t) = H_Z(t) - |{d_j <= t}| on the rectangle. Throws
/// PreconditionError when the minimal separators are not a good set.
bool hilbert_relation_check(const FatPointAnalysis& z, std::size_t i, Bidegree rect);
bool hilbert_relation_check(const FatPointScheme& z, std::size_t i, Bidegree rect);

/// |deg_Z(P_i)| = deg Z - deg Z' = C(m_i+N-1, m_i-1) - C(m_i+N-2, m_i-2).
/// Same precondition as hilbert_relation_check.
bool separator_count_check(const FatPointAnalysis& z, std::size_t i);
bool separator_count_check(const FatPointScheme& z, std::size_t i);

/// (I_Z, F_1..F_{j-1}) : F_j = I_{P_i} for every j, F the minimal separators.
bool separator_colon_check(const FatPointAnalysis& z, std::size_t i);

struct AcmReport {
  bool is_acm = false;
  int depth_lower_bound = 1;
  /// (L, L') of bidegrees (1,0), (0,1) forming a regular sequence on R/I_Z.
  std::optional<std::pair<Polynomial, Polynomial>> witness;
  int trials = 0;
};

inline constexpr int kDefaultAcmTrials = 3;

/// Tries random linear forms L, L'; success certifies ACM. Throws
/// std::invalid_argument for the empty scheme.
AcmReport acm_check(const FatPointAnalysis& z, int trials, std::mt19937_64& rng);
AcmReport acm_check(const FatPointScheme& z, int trials, std::mt19937_64& rng);

/// True certifies that Z is not ACM; false is inconclusive.
bool not_acm_from_degree(const FatPointAnalysis& z, std::size_t i);
bool not_acm_from_degree(const FatPointScheme& z, std::size_t i);

/// Smallest (a, b) found by growing a square window until a full row and a
/// full column of the Hilbert function repeat.
Bidegree stabilization_corner(const Ideal& ideal);

}  // namespace fatpoints
