#pragma once

// Gröbner bases and ideal algebra for bihomogeneous ideals.

#include <memory>
#include <mutex>
#include <vector>

#include "fatpoints/biring.hpp"

namespace fatpoints {

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, no leading
/// monomial divides another, tails fully reduced, sorted by ascending leading
/// monomial. Uses the normal selection strategy with the product and chain
/// criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

/// Remainder of f on full reduction by a Gröbner basis (any order of gb).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gb);

/// Exact quotient f / g; throws std::logic_error if the division leaves a
/// remainder.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// A bihomogeneous ideal. The reduced Gröbner basis is computed on first use
/// and shared between copies.
class Ideal {
 public:
  /// Throws std::invalid_argument if a generator is not bihomogeneous and
  /// RingMismatch if generators live in another ring.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced Gröbner basis under the ring's order. Thread-safe.
  const std::vector<Polynomial>& groebner() const;
  std::vector<Monomial> leading_monomials() const;

  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  /// Every generator of other lies in this ideal.
  bool contains(const Ideal& other) const;

  /// Standard monomials of bidegree t (those outside the leading-term ideal).
  std::vector<Monomial> standard_monomials(Bidegree t) const;
  /// dim_k (R/I)_t.
  long long quotient_dim(Bidegree t) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;

  friend Ideal ideal_intersection(const Ideal&, const Ideal&);
  void seed_groebner(std::vector<Polynomial> gb);
};

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_sum(const Ideal& i, const std::vector<Polynomial>& extra);
Ideal ideal_product(const Ideal& i, const Ideal& j);
/// All m-fold products of generators; throws std::invalid_argument for m = 0.
Ideal ideal_power(const Ideal& i, int m);
/// I ∩ J by eliminating an auxiliary variable from t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const std::vector<Ideal>& ideals);
/// (I : f) computed as (I ∩ (f)) / f.
Ideal ideal_quotient(const Ideal& i, const Polynomial& f);
bool ideal_equal(const Ideal& i, const Ideal& j);

/// Minimal homogeneous generating set, chosen greedily from the generators
/// sorted by total degree, then bidegree (lex), then leading monomial.
std::vector<Polynomial> minimal_generators(const Ideal& i);

/// Sort key used for greedy trimming.
bool trim_order_less(const Polynomial& a, const Polynomial& b);

}  // namespace fatpoints
