#pragma once

// Minimal bigraded free resolutions of cyclic modules R/I, computed from a
// Schreyer frame and then minimalized, and the Betti-number checks built on
// them.

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "fatpoints/gbasis.hpp"
#include "fatpoints/scheme.hpp"
#include "fatpoints/separator.hpp"

namespace fatpoints {

/// Shifts (a, b) of a free module sum R(-a,-b), kept sorted.
using ShiftList = std::vector<Bidegree>;

/// Sparse matrix of polynomials, stored by column.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const RingPtr& ring_ptr() const { return ring_; }

  /// Zero when absent.
  Polynomial at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Polynomial value);
  const std::map<std::size_t, Polynomial>& column(std::size_t c) const { return columns_[c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_zero() const;

 private:
  friend class Minimalizer;
  RingPtr ring_;
  std::size_t rows_;
  std::vector<std::map<std::size_t, Polynomial>> columns_;
};

struct Resolution {
  RingPtr ring;
  /// modules[0] is R itself.
  std::vector<ShiftList> modules;
  /// maps[k] : F_{k+1} -> F_k; rows index F_k, columns F_{k+1}.
  std::vector<PolyMatrix> maps;
  bool minimal = false;

  /// Index of the last nonzero module.
  std::size_t length() const;
  std::size_t rank(std::size_t i) const { return i < modules.size() ? modules[i].size() : 0; }
};

/// Syzygies of GB elements g_1..g_r of an ideal as columns of an r x s
/// matrix: the S-pair reductions of Schreyer's construction.
PolyMatrix syzygies(const std::vector<Polynomial>& gb);

/// Schreyer frame of R/I, not minimalized.
Resolution schreyer_resolution(const Ideal& ideal);

/// Removes every nonzero constant entry by Gaussian pivoting, cancelling one
/// shift in two consecutive modules per pivot.
Resolution minimalize(Resolution res);

/// Minimal bigraded free resolution of R/I; I must be proper.
Resolution minimal_free_resolution(const Ideal& ideal);

/// Projective dimension of R/I.
std::size_t pdim(const Ideal& ideal);

/// Alternating sum over the resolution of dim R_{t - shift}.
long long hilbert_from_betti(const Resolution& res, Bidegree t);

/// Every composition maps[k] * maps[k+1] vanishes.
bool is_complex(const Resolution& res);

/// Every map entry is zero or bihomogeneous of degree (row shift) - (column
/// shift); with `minimal`, none is a nonzero constant.
bool degrees_consistent(const Resolution& res);

/// The resolution of a random point's ideal has length N with G_N = {(n,m)}
/// and G_{N-1} = n x (n-1, m) + m x (n, m-1).
bool point_resolution_check(const RingPtr& ring, std::mt19937_64& rng);

/// {d + (n,m) : d in deg_Z(P_i)} is contained in the shifts of F_N. Throws
/// PreconditionError unless Z and Z' are certified ACM.
bool last_syzygy_separator_check(const FatPointAnalysis& z, std::size_t i, int trials, std::mt19937_64& rng);

/// rank F_N >= C(M+N-2, N-1) with M the maximal multiplicity. Throws
/// PreconditionError unless Z and the Z' of a maximal point are ACM.
bool rank_bound_check(const FatPointAnalysis& z, int trials, std::mt19937_64& rng);

/// Sorted multiset of shifts rendered with multiplicities.
std::map<Bidegree, int> shift_counts(const ShiftList& shifts);

}  // namespace fatpoints
