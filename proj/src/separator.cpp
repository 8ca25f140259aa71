#include "fatpoints/separator.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "fatpoints/linalg.hpp"

namespace fatpoints {

// ---------------------------------------------------------------------------
// FatPointAnalysis

struct FatPointAnalysis::State {
  std::recursive_mutex mutex;
  std::optional<Ideal> ideal;
  std::map<std::size_t, FatPointScheme> residuals;
  std::map<std::size_t, Ideal> residual_ideals;
  std::map<std::pair<std::size_t, int>, Ideal> powers;
  std::map<std::size_t, SeparatorSet> separators;
};

FatPointAnalysis::FatPointAnalysis(FatPointScheme z) : z_(std::move(z)), state_(std::make_shared<State>()) {}

void FatPointAnalysis::check_index(std::size_t i) const {
  if (i >= z_.size())
    throw std::out_of_range("point index " + std::to_string(i + 1) + " out of range (scheme has " +
                            std::to_string(z_.size()) + " points)");
}

const Ideal& FatPointAnalysis::point_power(std::size_t i, int e) const {
  check_index(i);
  std::lock_guard lock(state_->mutex);
  auto key = std::make_pair(i, e);
  auto it = state_->powers.find(key);
  if (it != state_->powers.end()) return it->second;
  Ideal value = e == 0 ? Ideal::unit(ring_ptr()) : ideal_power(point_ideal(z_[i].point, ring_ptr()), e);
  return state_->powers.emplace(key, std::move(value)).first->second;
}

namespace {

Ideal intersect_all(const RingPtr& ring, std::vector<Ideal> parts) {
  if (parts.empty()) return Ideal::unit(ring);
  return ideal_intersection(parts);
}

}  // namespace

const Ideal& FatPointAnalysis::ideal() const {
  std::lock_guard lock(state_->mutex);
  if (!state_->ideal) {
    std::vector<Ideal> parts;
    for (std::size_t j = 0; j < z_.size(); ++j) parts.push_back(point_power(j, z_[j].multiplicity));
    state_->ideal = intersect_all(ring_ptr(), std::move(parts));
  }
  return *state_->ideal;
}

const FatPointScheme& FatPointAnalysis::residual(std::size_t i) const {
  check_index(i);
  std::lock_guard lock(state_->mutex);
  auto it = state_->residuals.find(i);
  if (it != state_->residuals.end()) return it->second;
  return state_->residuals.emplace(i, reduce_multiplicity(z_, i)).first->second;
}

const Ideal& FatPointAnalysis::residual_ideal(std::size_t i) const {
  check_index(i);
  std::lock_guard lock(state_->mutex);
  auto it = state_->residual_ideals.find(i);
  if (it != state_->residual_ideals.end()) return it->second;
  std::vector<Ideal> parts;
  for (std::size_t j = 0; j < z_.size(); ++j) {
    const int e = z_[j].multiplicity - (j == i ? 1 : 0);
    if (e > 0) parts.push_back(point_power(j, e));
  }
  return state_->residual_ideals.emplace(i, intersect_all(ring_ptr(), std::move(parts))).first->second;
}

const SeparatorSet& FatPointAnalysis::separators(std::size_t i) const {
  check_index(i);
  std::lock_guard lock(state_->mutex);
  auto it = state_->separators.find(i);
  if (it != state_->separators.end()) return it->second;
  return state_->separators.emplace(i, minimal_separators(*this, i)).first->second;
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

// Coordinates of a reduced form of bidegree t against the standard monomials
// of that bidegree.
std::vector<Scalar> coordinates(const Polynomial& reduced, const std::vector<Monomial>& standard,
                                const std::unordered_map<Monomial, std::size_t, MonomialHash>& index) {
  std::vector<Scalar> v(standard.size(), reduced.field().zero());
  for (const auto& t : reduced.terms()) {
    auto it = index.find(t.mono);
    if (it == index.end()) throw std::logic_error("reduced form has a non-standard monomial");
    v[it->second] = t.coeff;
  }
  return v;
}

std::unordered_map<Monomial, std::size_t, MonomialHash> index_of(const std::vector<Monomial>& monos) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (std::size_t k = 0; k < monos.size(); ++k) idx.emplace(monos[k], k);
  return idx;
}

Polynomial shift_monomial(const RingPtr& ring, Bidegree shift) {
  Monomial mono = ring->one();
  mono.set(ring->x_index(0), static_cast<std::uint16_t>(shift.d1));
  mono.set(ring->y_index(0), static_cast<std::uint16_t>(shift.d2));
  return Polynomial::from_monomial(ring, mono, ring->field().one());
}

Bidegree degree_or_throw(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial is not a separator");
  auto d = f.bidegree();
  if (!d) throw std::invalid_argument("separator candidate is not bihomogeneous: " + f.to_string());
  return *d;
}

void require_x0_y0_nonvanishing(const FatPointScheme& z) {
  const Field& k = z.ring().field();
  for (const auto& it : z.items())
    if (k.is_zero(it.point.a()[0]) || k.is_zero(it.point.b()[0]))
      throw PreconditionError("x0 or y0 vanishes at " + it.point.to_string(k) +
                              "; normalize coordinates first");
}

}  // namespace

// ---------------------------------------------------------------------------
// Separators

bool is_separator(const Polynomial& f, const FatPointAnalysis& z, std::size_t i) {
  degree_or_throw(f);
  z.check_index(i);
  const auto& items = z.scheme().items();
  const int mi = items[i].multiplicity;
  if (!z.point_power(i, mi - 1).contains(f)) return false;
  if (z.point_power(i, mi).contains(f)) return false;
  for (std::size_t j = 0; j < items.size(); ++j)
    if (j != i && !z.point_power(j, items[j].multiplicity).contains(f)) return false;
  return true;
}

bool is_separator(const Polynomial& f, const FatPointScheme& z, std::size_t i) {
  return is_separator(f, FatPointAnalysis(z), i);
}

SeparatorSet minimal_separators(const FatPointAnalysis& z, std::size_t i) {
  z.check_index(i);
  const Ideal& iz = z.ideal();
  const RingPtr& ring = z.ring_ptr();
  const Field& k = ring->field();

  std::vector<Polynomial> kept;
  std::vector<Bidegree> kept_deg;
  for (const auto& candidate : minimal_generators(z.residual_ideal(i))) {
    const Bidegree d = *candidate.bidegree();
    const auto standard = iz.standard_monomials(d);
    if (standard.empty()) continue;
    const auto idx = index_of(standard);

    std::vector<std::vector<Scalar>> span;
    for (std::size_t s = 0; s < kept.size(); ++s) {
      if (!kept_deg[s].preceq(d)) continue;
      for (const auto& u : monomials_of_bidegree(d - kept_deg[s], *ring)) {
        auto nf = normal_form(kept[s].times_term(k.one(), u), iz);
        if (!nf.is_zero()) span.push_back(coordinates(nf, standard, idx));
      }
    }
    Polynomial reduced = normal_form(candidate, iz);
    if (reduced.is_zero()) continue;
    const std::size_t before = span.empty() ? 0 : Matrix(k, span).rank();
    span.push_back(coordinates(reduced, standard, idx));
    if (Matrix(k, span).rank() == before) continue;
    kept.push_back(reduced.monic());
    kept_deg.push_back(d);
  }

  std::vector<std::size_t> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return kept_deg[a] < kept_deg[b]; });
  SeparatorSet out;
  out.point_index = i;
  for (auto o : order) {
    out.polys.push_back(kept[o]);
    out.degrees.push_back(kept_deg[o]);
  }
  return out;
}

SeparatorSet minimal_separators(const FatPointScheme& z, std::size_t i) { return minimal_separators(FatPointAnalysis(z), i); }

std::vector<Bidegree> degree_of_point(const FatPointAnalysis& z, std::size_t i) { return z.separators(i).degrees; }

std::vector<Bidegree> degree_of_point(const FatPointScheme& z, std::size_t i) {
  return degree_of_point(FatPointAnalysis(z), i);
}

// ---------------------------------------------------------------------------
// Coordinate normalization

namespace {

// Rows: the coefficient vector c, then unit vectors e_j for j != pivot.
ScalarMatrix completion(const Field& k, const std::vector<Scalar>& c) {
  std::size_t pivot = 0;
  while (pivot < c.size() && k.is_zero(c[pivot])) ++pivot;
  if (pivot == c.size()) throw std::invalid_argument("linear form is zero");
  ScalarMatrix rows{c};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == pivot) continue;
    std::vector<Scalar> e(c.size(), k.zero());
    e[j] = k.one();
    rows.push_back(std::move(e));
  }
  return rows;
}

std::vector<Scalar> linear_coefficients(const Polynomial& l, bool x_block) {
  const Ring& ring = l.ring();
  const int len = x_block ? ring.n() + 1 : ring.m() + 1;
  std::vector<Scalar> c(static_cast<std::size_t>(len), ring.field().zero());
  for (const auto& t : l.terms())
    for (int j = 0; j < len; ++j)
      if (t.mono[x_block ? ring.x_index(j) : ring.y_index(j)] == 1) c[static_cast<std::size_t>(j)] = t.coeff;
  return c;
}

std::vector<Scalar> apply(const Field& k, const ScalarMatrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.size(), k.zero());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] = k.add(out[r], k.mul(m[r][c], v[c]));
  return out;
}

Scalar dot(const Field& k, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar acc = k.zero();
  for (std::size_t j = 0; j < a.size(); ++j) acc = k.add(acc, k.mul(a[j], b[j]));
  return acc;
}

}  // namespace

CoordinateChange normalize_coordinates(const FatPointScheme& z, const Polynomial& l, const Polynomial& l_prime) {
  const Field& k = z.ring().field();
  if (l.is_zero() || l.bidegree() != Bidegree{1, 0}) throw std::invalid_argument("L must have bidegree (1,0)");
  if (l_prime.is_zero() || l_prime.bidegree() != Bidegree{0, 1})
    throw std::invalid_argument("L' must have bidegree (0,1)");
  const auto cx = linear_coefficients(l, true);
  const auto cy = linear_coefficients(l_prime, false);
  for (const auto& it : z.items()) {
    if (k.is_zero(dot(k, cx, it.point.a()))) throw std::invalid_argument("L vanishes at " + it.point.to_string(k));
    if (k.is_zero(dot(k, cy, it.point.b()))) throw std::invalid_argument("L' vanishes at " + it.point.to_string(k));
  }
  ScalarMatrix px = completion(k, cx);
  ScalarMatrix py = completion(k, cy);
  std::vector<FatPoint> items;
  for (const auto& it : z.items())
    items.push_back({PPoint(k, apply(k, px, it.point.a()), apply(k, py, it.point.b())), it.multiplicity});
  return CoordinateChange{
      FatPointScheme(z.ring_ptr(), std::move(items)),
      px,
      py,
      Matrix(k, px).inverse()->to_rows(),
      Matrix(k, py).inverse()->to_rows(),
  };
}

// ---------------------------------------------------------------------------
// Good sets

GoodSetResult is_good_set(const FatPointAnalysis& z, std::size_t i, const SeparatorSet& s) {
  z.check_index(i);
  if (s.point_index != i) throw std::invalid_argument("separator set belongs to another point");
  if (s.polys.size() != s.degrees.size()) throw std::invalid_argument("separator set degrees out of sync");
  for (std::size_t j = 0; j < s.polys.size(); ++j) {
    if (degree_or_throw(s.polys[j]) != s.degrees[j]) throw std::invalid_argument("separator degree mismatch");
    if (!is_separator(s.polys[j], z, i))
      throw std::invalid_argument("not a separator of point " + std::to_string(i + 1) + ": " + s.polys[j].to_string());
  }
  require_x0_y0_nonvanishing(z.scheme());

  const Ideal& iz = z.ideal();
  const RingPtr& ring = z.ring_ptr();
  const Field& k = ring->field();
  Bidegree corner{0, 0};
  for (const auto& d : s.degrees) corner = componentwise_max(corner, d);

  std::vector<Bidegree> box;
  for (int a = 0; a <= corner.d1; ++a)
    for (int b = 0; b <= corner.d2; ++b) box.push_back({a, b});
  std::stable_sort(box.begin(), box.end(), [](Bidegree p, Bidegree q) {
    return p.total() != q.total() ? p.total() < q.total() : p < q;
  });

  for (const auto& t : box) {
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < s.degrees.size(); ++j)
      if (s.degrees[j].preceq(t)) members.push_back(j);
    if (members.empty()) continue;
    const auto standard = iz.standard_monomials(t);
    const auto idx = index_of(standard);
    std::vector<Polynomial> shifted;
    Matrix columns(k, standard.size(), members.size());
    for (std::size_t c = 0; c < members.size(); ++c) {
      const auto j = members[c];
      shifted.push_back(shift_monomial(ring, t - s.degrees[j]) * s.polys[j]);
      auto v = coordinates(normal_form(shifted.back(), iz), standard, idx);
      for (std::size_t r = 0; r < standard.size(); ++r) columns.at(r, c) = v[r];
    }
    if (columns.rank() == members.size()) continue;

    auto kernel = columns.kernel();
    Dependence dep{t, {}, {}, Polynomial(ring)};
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (k.is_zero(kernel.front()[c])) continue;
      dep.indices.push_back(members[c]);
      dep.coefficients.push_back(kernel.front()[c]);
      dep.relation += shifted[c].scaled(kernel.front()[c]);
    }
    return {false, std::move(dep)};
  }
  return {true, std::nullopt};
}

GoodSetResult is_good_set(const FatPointScheme& z, std::size_t i, const SeparatorSet& s) {
  return is_good_set(FatPointAnalysis(z), i, s);
}

// ---------------------------------------------------------------------------
// Hilbert functions

HilbertTable hilbert_function(const Ideal& ideal, Bidegree rect) {
  if (!rect.nonnegative()) throw std::invalid_argument("rectangle corner must be nonnegative");
  HilbertTable table{rect, {}};
  table.values.assign(static_cast<std::size_t>(rect.d1 + 1), std::vector<long long>(static_cast<std::size_t>(rect.d2 + 1)));
  for (int a = 0; a <= rect.d1; ++a)
    for (int b = 0; b <= rect.d2; ++b)
      table.values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ideal.quotient_dim({a, b});
  return table;
}

HilbertTable hilbert_function(const FatPointScheme& z, Bidegree rect) { return hilbert_function(scheme_ideal(z), rect); }

namespace {

void require_good(const FatPointAnalysis& z, std::size_t i) {
  auto result = is_good_set(z, i, z.separators(i));
  if (!result.good)
    throw PreconditionError("minimal separators of point " + std::to_string(i + 1) + " are not a good set");
}

}  // namespace

bool hilbert_relation_check(const FatPointAnalysis& z, std::size_t i, Bidegree rect) {
  require_good(z, i);
  const auto& degrees = z.separators(i).degrees;
  const auto hz = hilbert_function(z.ideal(), rect);
  const auto hzp = hilbert_function(z.residual_ideal(i), rect);
  for (int a = 0; a <= rect.d1; ++a)
    for (int b = 0; b <= rect.d2; ++b) {
      const Bidegree t{a, b};
      const auto below = std::count_if(degrees.begin(), degrees.end(), [&](const Bidegree& d) { return d.preceq(t); });
      if (hzp.at(a, b) != hz.at(a, b) - below) return false;
    }
  return true;
}

bool hilbert_relation_check(const FatPointScheme& z, std::size_t i, Bidegree rect) {
  return hilbert_relation_check(FatPointAnalysis(z), i, rect);
}

bool separator_count_check(const FatPointAnalysis& z, std::size_t i) {
  require_good(z, i);
  const long long p = static_cast<long long>(z.separators(i).degrees.size());
  const long long diff = scheme_degree(z.scheme()) - scheme_degree(z.residual(i));
  const long long mi = z.scheme()[i].multiplicity;
  const long long big_n = z.scheme().ring().n() + z.scheme().ring().m();
  const long long formula = binomial(mi + big_n - 1, mi - 1) - binomial(mi + big_n - 2, mi - 2);
  return p == diff && p == formula;
}

bool separator_count_check(const FatPointScheme& z, std::size_t i) { return separator_count_check(FatPointAnalysis(z), i); }

bool separator_colon_check(const FatPointAnalysis& z, std::size_t i) {
  require_good(z, i);
  const auto& polys = z.separators(i).polys;
  const Ideal& ip = z.point_power(i, 1);
  Ideal partial = z.ideal();
  for (const auto& f : polys) {
    if (!ideal_equal(ideal_quotient(partial, f), ip)) return false;
    partial = ideal_sum(partial, std::vector<Polynomial>{f});
  }
  return true;
}

// ---------------------------------------------------------------------------
// ACM detection

namespace {

Polynomial random_linear_form(const RingPtr& ring, bool x_block, std::mt19937_64& rng) {
  const Field& k = ring->field();
  while (true) {
    Polynomial form(ring);
    const int len = x_block ? ring->n() : ring->m();
    for (int j = 0; j <= len; ++j) {
      auto c = random_scalar(k, rng);
      form += (x_block ? Polynomial::x(ring, j) : Polynomial::y(ring, j)).scaled(c);
    }
    if (!form.is_zero()) return form;
  }
}

}  // namespace

AcmReport acm_check(const FatPointAnalysis& z, int trials, std::mt19937_64& rng) {
  if (z.scheme().empty()) throw std::invalid_argument("acm_check: empty scheme");
  if (trials < 1) throw std::invalid_argument("acm_check: trials must be positive");
  const Ideal& iz = z.ideal();
  AcmReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Polynomial l = random_linear_form(z.ring_ptr(), true, rng);
    Polynomial lp = random_linear_form(z.ring_ptr(), false, rng);
    if (!ideal_equal(iz, ideal_quotient(iz, l))) continue;
    Ideal j = ideal_sum(iz, std::vector<Polynomial>{l});
    if (!ideal_equal(j, ideal_quotient(j, lp))) continue;
    report.is_acm = true;
    report.depth_lower_bound = 2;
    report.witness = std::make_pair(std::move(l), std::move(lp));
    return report;
  }
  return report;
}

AcmReport acm_check(const FatPointScheme& z, int trials, std::mt19937_64& rng) {
  return acm_check(FatPointAnalysis(z), trials, rng);
}

bool not_acm_from_degree(const FatPointAnalysis& z, std::size_t i) {
  const long long p = static_cast<long long>(degree_of_point(z, i).size());
  return p != scheme_degree(z.scheme()) - scheme_degree(z.residual(i));
}

bool not_acm_from_degree(const FatPointScheme& z, std::size_t i) { return not_acm_from_degree(FatPointAnalysis(z), i); }

Bidegree stabilization_corner(const Ideal& ideal) {
  for (int r = 1;; ++r) {
    const auto h = hilbert_function(ideal, {r, r});
    std::optional<int> row, col;
    for (int a = 0; a < r && !row; ++a)
      if (h.values[static_cast<std::size_t>(a)] == h.values[static_cast<std::size_t>(a + 1)]) row = a;
    for (int b = 0; b < r && !col; ++b) {
      bool same = true;
      for (int a = 0; a <= r; ++a) same = same && h.at(a, b) == h.at(a, b + 1);
      if (same) col = b;
    }
    if (row && col) return {*row, *col};
  }
}

}  // namespace fatpoints
