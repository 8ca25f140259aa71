#pragma once

#include <memory>
#include <random>
#include <vector>

#include "fatpoints/biring.hpp"
#include "fatpoints/scheme.hpp"

namespace testing {

using namespace fatpoints;

inline RingPtr ring(int n, int m, Field k = Field()) { return std::make_shared<const Ring>(n, m, k); }

inline PPoint pt(const Field& k, std::vector<long long> a, std::vector<long long> b) {
  std::vector<Scalar> sa, sb;
  for (auto v : a) sa.push_back(k.from_int(v));
  for (auto v : b) sb.push_back(k.from_int(v));
  return PPoint(k, std::move(sa), std::move(sb));
}

inline Polynomial parse(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

/// Z = 2P_1 + 2P_2 with P_1 = [1:0:0]x[1:0:0:0], P_2 = [0:0:1]x[0:0:0:1].
inline FatPointScheme two_double_points(Field k = Field()) {
  auto r = ring(2, 3, k);
  return FatPointScheme(r, {{pt(k, {1, 0, 0}, {1, 0, 0, 0}), 2}, {pt(k, {0, 0, 1}, {0, 0, 0, 1}), 2}});
}

/// {[1:0]x[1:0], [1:1]x[1:1]}.
inline FatPointScheme two_points(Field k = Field()) {
  auto r = ring(1, 1, k);
  return FatPointScheme(r, {{pt(k, {1, 0}, {1, 0}), 1}, {pt(k, {1, 1}, {1, 1}), 1}});
}

/// mP with P = [1:0]x[1:0].
inline FatPointScheme fat_point(int m, Field k = Field()) {
  return FatPointScheme(ring(1, 1, k), {{pt(k, {1, 0}, {1, 0}), m}});
}

/// Grid {[1:a_i]} x {[1:b_j]} with a common multiplicity.
inline FatPointScheme grid(const std::vector<long long>& xs, const std::vector<long long>& ys, int mult,
                           Field k = Field()) {
  std::vector<FatPoint> items;
  for (auto a : xs)
    for (auto b : ys) items.push_back({pt(k, {1, a}, {1, b}), mult});
  return FatPointScheme(ring(1, 1, k), std::move(items));
}

/// Random grid in P^1 x P^1 with distinct coordinates.
inline FatPointScheme random_grid(std::size_t rows, std::size_t cols, int mult, std::mt19937_64& rng,
                                  Field k = Field()) {
  auto distinct = [&](std::size_t count) {
    std::vector<long long> out;
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(k.characteristic()) - 1);
    while (out.size() < count) {
      long long v = d(rng);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  };
  return grid(distinct(rows), distinct(cols), mult, k);
}

inline Polynomial random_form(const RingPtr& r, Bidegree t, std::mt19937_64& rng) {
  Polynomial f(r);
  for (const auto& mono : monomials_of_bidegree(t, *r))
    f += Polynomial::from_monomial(r, mono, random_scalar(r->field(), rng));
  return f;
}

}  // namespace testing
