#include "fatpoints/resol.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace fatpoints {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), columns_(cols) {}

Polynomial PolyMatrix::at(std::size_t r, std::size_t c) const {
  auto it = columns_.at(c).find(r);
  return it == columns_[c].end() ? Polynomial(ring_) : it->second;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  if (r >= rows_) throw std::out_of_range("PolyMatrix row");
  if (value.is_zero()) columns_.at(c).erase(r);
  else columns_.at(c).insert_or_assign(r, std::move(value));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("PolyMatrix shape mismatch");
  PolyMatrix out(ring_, rows_, o.cols());
  for (std::size_t c = 0; c < o.cols(); ++c) {
    std::map<std::size_t, Polynomial> acc;
    for (const auto& [k, b] : o.columns_[c])
      for (const auto& [r, a] : columns_[k]) {
        auto it = acc.try_emplace(r, Polynomial(ring_)).first;
        it->second += a * b;
      }
    for (auto& [r, v] : acc)
      if (!v.is_zero()) out.columns_[c].emplace(r, std::move(v));
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& col) { return col.empty(); });
}

std::size_t Resolution::length() const {
  std::size_t len = 0;
  for (std::size_t i = 0; i < modules.size(); ++i)
    if (!modules[i].empty()) len = i;
  return len;
}

// ---------------------------------------------------------------------------
// Schreyer frames
//
// Level L holds generators g_1..g_r of a submodule of F_{L-1}; F_L has one
// basis vector per generator. Terms of F_L elements are compared by the
// induced order: first the product of the term's monomial with the total
// leading monomial of its basis vector, then the chain of basis indices
// reached by following leading terms down to F_1, smaller index first.

namespace {

struct ModTerm {
  Scalar coeff;
  Monomial mono;
  std::uint32_t comp;
  Monomial total;
};

using ModPoly = std::vector<ModTerm>;

struct LevelBasis {
  std::vector<Monomial> total;
  std::vector<std::vector<std::uint32_t>> chain;
  std::vector<Bidegree> shift;
};

class ModOrder {
 public:
  ModOrder(const Ring& ring, const LevelBasis& basis) : ring_(ring), basis_(basis) {}

  int compare(const ModTerm& a, const ModTerm& b) const {
    int c = ring_.compare(a.total, b.total);
    if (c != 0) return c;
    const auto& ca = basis_.chain[a.comp];
    const auto& cb = basis_.chain[b.comp];
    for (std::size_t l = 0; l < ca.size(); ++l)
      if (ca[l] != cb[l]) return ca[l] < cb[l] ? 1 : -1;
    return 0;
  }

  ModTerm make(Scalar coeff, const Monomial& mono, std::uint32_t comp) const {
    return {std::move(coeff), mono, comp, mono * basis_.total[comp]};
  }

  void sort(ModPoly& p, const Field& k) const {
    std::sort(p.begin(), p.end(), [&](const ModTerm& a, const ModTerm& b) { return compare(a, b) > 0; });
    ModPoly out;
    for (auto& t : p) {
      if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
        out.back().coeff = k.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
    p = std::move(out);
  }

  // p -= c * mono * g
  void sub_multiple(ModPoly& p, const Scalar& c, const Monomial& mono, const ModPoly& g, const Field& k) const {
    ModPoly out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    const Scalar nc = k.neg(c);
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(std::move(p[i++]));
        continue;
      }
      ModTerm gt{k.mul(nc, g[j].coeff), g[j].mono * mono, g[j].comp, g[j].total * mono};
      int cmp = i == p.size() ? -1 : compare(p[i], gt);
      if (cmp > 0) {
        out.push_back(std::move(p[i++]));
      } else if (cmp < 0) {
        out.push_back(std::move(gt));
        ++j;
      } else {
        Scalar s = k.add(p[i].coeff, gt.coeff);
        if (!k.is_zero(s)) {
          gt.coeff = std::move(s);
          out.push_back(std::move(gt));
        }
        ++i;
        ++j;
      }
    }
    p = std::move(out);
  }

 private:
  const Ring& ring_;
  const LevelBasis& basis_;
};

// Lexicographic comparison of exponent vectors, variable 0 most significant.
bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

struct Level {
  std::vector<ModPoly> gens;  // elements of F_{L-1}, monic, sorted (comp, lex desc)
};

void sort_level(std::vector<ModPoly>& gens) {
  std::stable_sort(gens.begin(), gens.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
    return lex_greater(a.front().mono, b.front().mono);
  });
}

// Basis data of F_L from the sorted generators of level L and the basis of F_{L-1}.
LevelBasis make_basis(const std::vector<ModPoly>& gens, const LevelBasis& below) {
  LevelBasis basis;
  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    const auto& lead = gens[i].front();
    basis.total.push_back(lead.total);
    auto chain = below.chain[lead.comp];
    chain.push_back(i);
    basis.chain.push_back(std::move(chain));
    basis.shift.push_back(lead.mono.bidegree() + below.shift[lead.comp]);
  }
  return basis;
}

// Minimal S-pair syzygies of a Gröbner basis `gens` of a submodule of
// F_{L-1}; the result lives in F_L (basis `basis`).
std::vector<ModPoly> frame_syzygies(const Ring& ring, const std::vector<ModPoly>& gens, const LevelBasis& below,
                                    const LevelBasis& basis) {
  const Field& k = ring.field();
  ModOrder lower(ring, below);
  ModOrder upper(ring, basis);

  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_comp;
  for (std::size_t i = 0; i < gens.size(); ++i) by_comp[gens[i].front().comp].push_back(i);

  std::vector<ModPoly> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& li = gens[i].front();
    // Quotients lcm(a_i, a_j) / a_i for later j in the same component; only
    // the minimal ones are needed for the leading module.
    std::vector<std::pair<Monomial, std::size_t>> quotients;
    for (std::size_t j : by_comp[li.comp]) {
      if (j <= i) continue;
      quotients.emplace_back(Monomial::lcm(li.mono, gens[j].front().mono) / li.mono, j);
    }
    std::vector<std::pair<Monomial, std::size_t>> minimal;
    for (std::size_t a = 0; a < quotients.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < quotients.size() && !redundant; ++b) {
        if (a == b || !quotients[b].first.divides(quotients[a].first)) continue;
        // Strict divisibility, or equality with an earlier entry.
        redundant = !(quotients[b].first == quotients[a].first) || b < a;
      }
      if (!redundant) minimal.push_back(quotients[a]);
    }

    for (const auto& [qi, j] : minimal) {
      const auto& lj = gens[j].front();
      const Monomial lcm = qi * li.mono;
      const Monomial qj = lcm / lj.mono;

      ModPoly s;
      for (const auto& t : gens[i]) s.push_back({t.coeff, t.mono * qi, t.comp, t.total * qi});
      lower.sub_multiple(s, k.one(), qj, gens[j], k);

      ModPoly syz;
      syz.push_back(upper.make(k.one(), qi, static_cast<std::uint32_t>(i)));
      syz.push_back(upper.make(k.neg(k.one()), qj, static_cast<std::uint32_t>(j)));
      while (!s.empty()) {
        const ModTerm lead = s.front();
        const std::size_t* reducer = nullptr;
        for (const auto& l : by_comp[lead.comp])
          if (gens[l].front().mono.divides(lead.mono)) {
            reducer = &l;
            break;
          }
        if (!reducer) throw std::logic_error("Schreyer frame: S-pair does not reduce to zero");
        const Monomial shift = lead.mono / gens[*reducer].front().mono;
        lower.sub_multiple(s, lead.coeff, shift, gens[*reducer], k);
        syz.push_back(upper.make(k.neg(lead.coeff), shift, static_cast<std::uint32_t>(*reducer)));
      }
      upper.sort(syz, k);
      if (syz.empty() || syz.front().comp != i || !(syz.front().mono == qi))
        throw std::logic_error("Schreyer frame: unexpected syzygy leading term");
      out.push_back(std::move(syz));
    }
  }
  return out;
}

PolyMatrix to_matrix(const RingPtr& ring, const std::vector<ModPoly>& gens, std::size_t rows) {
  PolyMatrix m(ring, rows, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    std::map<std::uint32_t, std::vector<Term>> entries;
    for (const auto& t : gens[c]) entries[t.comp].push_back({t.coeff, t.mono});
    for (auto& [r, terms] : entries) m.set(r, c, Polynomial(ring, std::move(terms)));
  }
  return m;
}

LevelBasis ring_basis(const Ring& ring) {
  LevelBasis b;
  b.total.push_back(ring.one());
  b.chain.push_back({});
  b.shift.push_back({0, 0});
  return b;
}

std::vector<ModPoly> ideal_level(const std::vector<Polynomial>& gb) {
  std::vector<ModPoly> gens;
  for (const auto& g : gb) {
    ModPoly v;
    const Polynomial monic = g.monic();
    for (const auto& t : monic.terms()) v.push_back({t.coeff, t.mono, 0, t.mono});
    gens.push_back(std::move(v));
  }
  return gens;
}

}  // namespace

PolyMatrix syzygies(const std::vector<Polynomial>& gb) {
  if (gb.empty()) throw std::invalid_argument("syzygies of an empty basis");
  const RingPtr& ring = gb.front().ring_ptr();
  auto gens = ideal_level(gb);
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return lex_greater(gens[a].front().mono, gens[b].front().mono);
  });
  std::vector<ModPoly> sorted;
  for (auto p : perm) sorted.push_back(gens[p]);
  const LevelBasis below = ring_basis(*ring);
  const LevelBasis basis = make_basis(sorted, below);
  auto syz = frame_syzygies(*ring, sorted, below, basis);
  // Rows back in the caller's order; syzygies were taken of the monic basis.
  PolyMatrix m(ring, gb.size(), syz.size());
  const Field& k = ring->field();
  for (std::size_t c = 0; c < syz.size(); ++c) {
    std::map<std::uint32_t, std::vector<Term>> entries;
    for (const auto& t : syz[c]) entries[t.comp].push_back({t.coeff, t.mono});
    for (auto& [r, terms] : entries) {
      const std::size_t original = perm[r];
      Polynomial entry(ring, std::move(terms));
      m.set(original, c, entry.scaled(k.inv(gb[original].leading_coeff())));
    }
  }
  return m;
}

Resolution schreyer_resolution(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring_ptr();
  if (ideal.is_unit()) throw std::invalid_argument("resolution of R/I needs a proper ideal");
  Resolution res{ring, {ShiftList{{0, 0}}}, {}, false};
  LevelBasis below = ring_basis(*ring);
  auto gens = ideal_level(ideal.groebner());
  while (!gens.empty()) {
    sort_level(gens);
    LevelBasis basis = make_basis(gens, below);
    res.maps.push_back(to_matrix(ring, gens, below.total.size()));
    res.modules.push_back(basis.shift);
    auto next = frame_syzygies(*ring, gens, below, basis);
    below = std::move(basis);
    gens = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Minimalization

class Minimalizer {
 public:
  explicit Minimalizer(Resolution res) : res_(std::move(res)) {
    for (const auto& mod : res_.modules) alive_.emplace_back(mod.size(), true);
  }

  Resolution run() {
    const Field& k = res_.ring->field();
    for (std::size_t m = 0; m < res_.maps.size(); ++m) {
      while (auto pivot = find_constant(m)) pivot_at(m, pivot->first, pivot->second, k);
    }
    return compact();
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_constant(std::size_t m) const {
    const auto& mat = res_.maps[m];
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      if (!alive_[m + 1][c]) continue;
      for (const auto& [r, v] : mat.columns_[c])
        if (v.is_constant()) return std::make_pair(r, c);
    }
    return std::nullopt;
  }

  // maps[m] : F_{m+1} -> F_m with a unit at (r, c): F_m loses basis vector r
  // and F_{m+1} loses c.
  void pivot_at(std::size_t m, std::size_t r, std::size_t c, const Field& k) {
    auto& mat = res_.maps[m];
    const auto pivot_col = mat.columns_[c];
    const Scalar u_inv = k.inv(pivot_col.at(r).leading_coeff());
    for (std::size_t cc = 0; cc < mat.cols(); ++cc) {
      if (cc == c || !alive_[m + 1][cc]) continue;
      auto& col = mat.columns_[cc];
      auto it = col.find(r);
      if (it == col.end()) continue;
      const Polynomial factor = it->second.scaled(u_inv);
      col.erase(it);
      for (const auto& [s, val] : pivot_col) {
        if (s == r) continue;
        auto& entry = col.try_emplace(s, Polynomial(res_.ring)).first->second;
        entry -= factor * val;
        if (entry.is_zero()) col.erase(s);
      }
    }
    mat.columns_[c].clear();
    alive_[m + 1][c] = false;
    alive_[m][r] = false;
    if (m > 0) res_.maps[m - 1].columns_[r].clear();
    if (m + 1 < res_.maps.size())
      for (auto& col : res_.maps[m + 1].columns_) col.erase(c);
  }

  Resolution compact() {
    Resolution out{res_.ring, {}, {}, true};
    std::vector<std::vector<std::size_t>> index(res_.modules.size());
    for (std::size_t i = 0; i < res_.modules.size(); ++i) {
      ShiftList shifts;
      index[i].assign(res_.modules[i].size(), SIZE_MAX);
      for (std::size_t j = 0; j < res_.modules[i].size(); ++j)
        if (alive_[i][j]) {
          index[i][j] = shifts.size();
          shifts.push_back(res_.modules[i][j]);
        }
      out.modules.push_back(std::move(shifts));
    }
    for (std::size_t m = 0; m < res_.maps.size(); ++m) {
      PolyMatrix mat(res_.ring, out.modules[m].size(), out.modules[m + 1].size());
      const auto& old = res_.maps[m];
      for (std::size_t c = 0; c < old.cols(); ++c) {
        if (!alive_[m + 1][c]) continue;
        for (const auto& [r, v] : old.columns_[c])
          if (alive_[m][r]) mat.set(index[m][r], index[m + 1][c], v);
      }
      out.maps.push_back(std::move(mat));
    }
    while (out.modules.size() > 1 && out.modules.back().empty()) {
      out.modules.pop_back();
      out.maps.pop_back();
    }
    // Keep each module's shifts sorted, permuting matrix rows and columns.
    for (std::size_t i = 0; i < out.modules.size(); ++i) {
      std::vector<std::size_t> perm(out.modules[i].size());
      std::iota(perm.begin(), perm.end(), 0);
      std::stable_sort(perm.begin(), perm.end(),
                       [&](std::size_t a, std::size_t b) { return out.modules[i][a] < out.modules[i][b]; });
      std::vector<std::size_t> where(perm.size());
      for (std::size_t p = 0; p < perm.size(); ++p) where[perm[p]] = p;
      ShiftList sorted;
      for (auto p : perm) sorted.push_back(out.modules[i][p]);
      out.modules[i] = std::move(sorted);
      if (i > 0) {
        auto& mat = out.maps[i - 1];
        PolyMatrix permuted(out.ring, mat.rows(), mat.cols());
        for (std::size_t c = 0; c < mat.cols(); ++c)
          for (const auto& [r, v] : mat.column(c)) permuted.set(r, where[c], v);
        mat = std::move(permuted);
      }
      if (i < out.maps.size()) {
        auto& mat = out.maps[i];
        PolyMatrix permuted(out.ring, mat.rows(), mat.cols());
        for (std::size_t c = 0; c < mat.cols(); ++c)
          for (const auto& [r, v] : mat.column(c)) permuted.set(where[r], c, v);
        mat = std::move(permuted);
      }
    }
    return out;
  }

  Resolution res_;
  std::vector<std::vector<bool>> alive_;
};

Resolution minimalize(Resolution res) { return Minimalizer(std::move(res)).run(); }

Resolution minimal_free_resolution(const Ideal& ideal) { return minimalize(schreyer_resolution(ideal)); }

std::size_t pdim(const Ideal& ideal) { return minimal_free_resolution(ideal).length(); }

long long hilbert_from_betti(const Resolution& res, Bidegree t) {
  long long total = 0;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    long long sum = 0;
    for (const auto& s : res.modules[i]) sum += dim_bigraded_piece(t - s, *res.ring);
    total += (i % 2 == 0) ? sum : -sum;
  }
  return total;
}

bool is_complex(const Resolution& res) {
  for (std::size_t k = 0; k + 1 < res.maps.size(); ++k)
    if (!(res.maps[k] * res.maps[k + 1]).is_zero()) return false;
  return true;
}

bool degrees_consistent(const Resolution& res) {
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    const auto& mat = res.maps[k];
    for (std::size_t c = 0; c < mat.cols(); ++c)
      for (const auto& [r, v] : mat.column(c)) {
        auto d = v.bidegree();
        if (!d || *d != res.modules[k + 1][c] - res.modules[k][r]) return false;
        if (res.minimal && v.is_constant()) return false;
      }
  }
  return true;
}

std::map<Bidegree, int> shift_counts(const ShiftList& shifts) {
  std::map<Bidegree, int> counts;
  for (const auto& s : shifts) ++counts[s];
  return counts;
}

bool point_resolution_check(const RingPtr& ring, std::mt19937_64& rng) {
  const int n = ring->n(), m = ring->m(), big_n = n + m;
  const PPoint p = random_point(*ring, rng);
  const Resolution res = minimal_free_resolution(point_ideal(p, ring));
  if (res.length() != static_cast<std::size_t>(big_n)) return false;
  const auto last = shift_counts(res.modules[static_cast<std::size_t>(big_n)]);
  const auto before = shift_counts(res.modules[static_cast<std::size_t>(big_n - 1)]);
  const std::map<Bidegree, int> want_last{{{n, m}, 1}};
  std::map<Bidegree, int> want_before;
  want_before[{n - 1, m}] += n;
  want_before[{n, m - 1}] += m;
  return last == want_last && before == want_before;
}

namespace {

bool multiset_contains(const ShiftList& haystack, const ShiftList& needles) {
  auto have = shift_counts(haystack);
  for (const auto& [s, count] : shift_counts(needles))
    if (have[s] < count) return false;
  return true;
}

void require_acm(const FatPointAnalysis& z, std::size_t i, int trials, std::mt19937_64& rng) {
  if (!acm_check(z, trials, rng).is_acm) throw PreconditionError("Z is not certified ACM");
  const auto& residual = z.residual(i);
  // The empty residual scheme has R/I_{Z'} = 0 and imposes no condition.
  if (!residual.empty() && !acm_check(residual, trials, rng).is_acm)
    throw PreconditionError("Z' is not certified ACM");
}

}  // namespace

bool last_syzygy_separator_check(const FatPointAnalysis& z, std::size_t i, int trials, std::mt19937_64& rng) {
  z.check_index(i);
  require_acm(z, i, trials, rng);
  const Ring& ring = *z.ring_ptr();
  const auto big_n = static_cast<std::size_t>(ring.n() + ring.m());
  const Resolution res = minimal_free_resolution(z.ideal());
  if (res.length() != big_n) return false;
  ShiftList expected;
  for (const auto& d : degree_of_point(z, i)) expected.push_back(d + Bidegree{ring.n(), ring.m()});
  return multiset_contains(res.modules[big_n], expected);
}

bool rank_bound_check(const FatPointAnalysis& z, int trials, std::mt19937_64& rng) {
  if (z.scheme().empty()) throw PreconditionError("empty scheme");
  const int big_m = z.scheme().max_multiplicity();
  std::size_t i = 0;
  while (z.scheme()[i].multiplicity != big_m) ++i;
  require_acm(z, i, trials, rng);
  const Ring& ring = *z.ring_ptr();
  const int big_n = ring.n() + ring.m();
  const Resolution res = minimal_free_resolution(z.ideal());
  if (res.length() != static_cast<std::size_t>(big_n)) return false;
  return static_cast<long long>(res.rank(static_cast<std::size_t>(big_n))) >= binomial(big_m + big_n - 2, big_n - 1);
}

}  // namespace fatpoints
