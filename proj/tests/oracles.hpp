#pragma once

// Test-side oracles. They share no code paths with the library's Gröbner
// or linear algebra: everything is recomputed here with plain modular
// arithmetic over F_p.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fatpoints/biring.hpp"
#include "fatpoints/scheme.hpp"

namespace oracle {

using fatpoints::Bidegree;
using u64 = std::uint64_t;

inline u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline u64 binom_mod(int a, int b, u64 p) {
  if (b < 0 || b > a) return 0;
  u64 num = 1, den = 1;
  for (int i = 0; i < b; ++i) {
    num = num * static_cast<u64>(a - i) % p;
    den = den * static_cast<u64>(i + 1) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

/// Rank over F_p by plain elimination.
inline std::size_t rank_mod(std::vector<std::vector<u64>> rows, u64 p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 inv = pow_mod(rows[rank][c], p - 2, p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const u64 f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

inline u64 residue(const fatpoints::Scalar& s) { return std::get<std::uint32_t>(s); }

/// Exponent vectors (x part, y part) of every monomial of bidegree t.
inline std::vector<std::vector<int>> exponents(Bidegree t, int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int, int, int)> rec = [&](int var, int nvars, int left, int start) {
    if (var == nvars - 1) {
      cur.push_back(left);
      if (start == 0) {
        rec(0, m + 1, t.d2, 1);
      } else {
        out.push_back(cur);
      }
      cur.pop_back();
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.push_back(e);
      rec(var + 1, nvars, left - e, start);
      cur.pop_back();
    }
  };
  rec(0, n + 1, t.d1, 0);
  return out;
}

inline u64 count_monomials(Bidegree t, int n, int m) { return exponents(t, n, m).size(); }

/// A polynomial as (coefficient, exponent vector) pairs over F_p.
using Sparse = std::vector<std::pair<u64, std::vector<int>>>;

inline Sparse sparse(const fatpoints::Polynomial& f) {
  Sparse out;
  const auto& ring = f.ring();
  const std::size_t nv = static_cast<std::size_t>(ring.n() + ring.m() + 2);
  for (const auto& t : f.terms()) {
    std::vector<int> e(nv);
    for (std::size_t v = 0; v < nv; ++v) e[v] = t.mono[v];
    out.emplace_back(residue(t.coeff), std::move(e));
  }
  return out;
}

/// Taylor coefficients of order < mult at the point, in the affine chart
/// where the pivot coordinates are 1. f lies in I_P^mult iff all vanish.
inline std::vector<u64> taylor(const Sparse& f, const fatpoints::PPoint& pt, int n, int m, int mult, u64 p) {
  std::vector<int> vars;
  std::vector<u64> vals;
  for (int j = 0; j <= n; ++j)
    if (static_cast<std::size_t>(j) != pt.x_pivot()) {
      vars.push_back(j);
      vals.push_back(residue(pt.a()[static_cast<std::size_t>(j)]));
    }
  for (int j = 0; j <= m; ++j)
    if (static_cast<std::size_t>(j) != pt.y_pivot()) {
      vars.push_back(n + 1 + j);
      vals.push_back(residue(pt.b()[static_cast<std::size_t>(j)]));
    }
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (cur.size() == vars.size()) {
      alphas.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur.push_back(a);
      rec(left - a);
      cur.pop_back();
    }
  };
  rec(mult - 1);
  std::vector<u64> out;
  for (const auto& alpha : alphas) {
    u64 total = 0;
    for (const auto& [c, e] : f) {
      u64 term = c;
      for (std::size_t v = 0; v < vars.size() && term; ++v) {
        const int ev = e[static_cast<std::size_t>(vars[v])];
        term = term * binom_mod(ev, alpha[v], p) % p;
        term = term * pow_mod(vals[v], static_cast<u64>(std::max(ev - alpha[v], 0)), p) % p;
      }
      total = (total + term) % p;
    }
    out.push_back(total);
  }
  return out;
}

/// Conditions imposed on f by every fat point of z.
inline std::vector<u64> conditions(const Sparse& f, const fatpoints::FatPointScheme& z, u64 p) {
  std::vector<u64> out;
  for (const auto& item : z.items()) {
    auto c = taylor(f, item.point, z.ring().n(), z.ring().m(), item.multiplicity, p);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

inline bool in_fat_point(const fatpoints::Polynomial& f, const fatpoints::PPoint& pt, int mult) {
  const auto p = f.ring().field().characteristic();
  for (auto v : taylor(sparse(f), pt, f.ring().n(), f.ring().m(), mult, p))
    if (v) return false;
  return true;
}

/// dim of span(fs) minus dim of its part inside I_Z; fs must be linearly
/// independent.
inline std::size_t conditions_rank(const std::vector<Sparse>& fs, const fatpoints::FatPointScheme& z, u64 p) {
  std::vector<std::vector<u64>> cols;
  for (const auto& f : fs) cols.push_back(conditions(f, z, p));
  if (cols.empty() || cols[0].empty()) return 0;
  std::vector<std::vector<u64>> rows(cols[0].size(), std::vector<u64>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) rows[r][c] = cols[c][r];
  return rank_mod(std::move(rows), p);
}

inline std::vector<Sparse> monomial_basis(Bidegree t, int n, int m) {
  std::vector<Sparse> out;
  for (auto& e : exponents(t, n, m)) out.push_back({{1, e}});
  return out;
}

/// H_Z(t) = dim (R/I_Z)_t by Taylor conditions.
inline long long hilbert(const fatpoints::FatPointScheme& z, Bidegree t) {
  const auto p = z.ring().field().characteristic();
  return static_cast<long long>(conditions_rank(monomial_basis(t, z.ring().n(), z.ring().m()), z, p));
}

/// dim (I_Z)_t.
inline long long ideal_dim(const fatpoints::FatPointScheme& z, Bidegree t) {
  return static_cast<long long>(count_monomials(t, z.ring().n(), z.ring().m())) - hilbert(z, t);
}

/// Whether multiplication by the variable with index var is injective on
/// (R/I_Z)_t: the conditions on {var * mono} have the same rank as on {mono}.
inline bool multiplication_injective(const fatpoints::FatPointScheme& z, std::size_t var, Bidegree t) {
  const auto p = z.ring().field().characteristic();
  auto basis = monomial_basis(t, z.ring().n(), z.ring().m());
  auto shifted = basis;
  for (auto& f : shifted) ++f[0].second[var];
  return conditions_rank(basis, z, p) == conditions_rank(shifted, z, p);
}

/// Count of monomials of bidegree t outside the monomial ideal generated by
/// gens (exponent vectors).
inline long long standard_count(Bidegree t, int n, int m, const std::vector<std::vector<int>>& gens) {
  long long count = 0;
  for (const auto& e : exponents(t, n, m)) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool d = true;
      for (std::size_t v = 0; v < g.size(); ++v) d = d && g[v] <= e[v];
      divisible = divisible || d;
    }
    count += divisible ? 0 : 1;
  }
  return count;
}

inline fatpoints::Scalar residue_scalar(u64 v) { return static_cast<std::uint32_t>(v); }

}  // namespace oracle
