#include "fatpoints/gbasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  const Field& k = f.field();
  Polynomial s = f.times_term(k.div(k.one(), f.leading_coeff()), lcm / f.leading_monomial());
  s.sub_multiple(k.inv(g.leading_coeff()), lcm / g.leading_monomial(), g);
  return s;
}

// Becker–Weispfenning UPDATE: installs basis element `r` and prunes the pair
// set with the product and chain criteria.
void update_pairs(const std::vector<Polynomial>& basis, std::vector<bool>& active, std::vector<Pair>& pairs,
                  std::size_t r) {
  const Monomial& lr = basis[r].leading_monomial();

  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < r; ++i)
    if (active[i]) fresh.push_back({i, r, Monomial::lcm(basis[i].leading_monomial(), lr)});

  auto coprime = [&](const Pair& p) { return basis[p.i].leading_monomial().coprime(lr); };

  std::vector<Pair> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const Pair& p = fresh[a];
    bool keep = coprime(p);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
        if (fresh[b].lcm.divides(p.lcm)) keep = false;
      for (const auto& q : kept)
        if (keep && q.lcm.divides(p.lcm)) keep = false;
    }
    if (keep) kept.push_back(p);
  }
  std::erase_if(kept, coprime);

  std::erase_if(pairs, [&](const Pair& p) {
    if (!lr.divides(p.lcm)) return false;
    auto li = Monomial::lcm(basis[p.i].leading_monomial(), lr);
    auto lj = Monomial::lcm(basis[p.j].leading_monomial(), lr);
    return !(li == p.lcm) && !(lj == p.lcm);
  });
  pairs.insert(pairs.end(), kept.begin(), kept.end());

  for (std::size_t i = 0; i < r; ++i)
    if (active[i] && lr.divides(basis[i].leading_monomial())) active[i] = false;
  active.push_back(true);
}

const Polynomial* find_reducer(const std::vector<Polynomial>& basis, const Monomial& mono) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(mono)) return &g;
  return nullptr;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gb) {
  const Field& k = f.field();
  Polynomial work = f;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lead = work.leading_term();
    if (const Polynomial* g = find_reducer(gb, lead.mono)) {
      Scalar c = k.div(lead.coeff, g->leading_coeff());
      Monomial shift = lead.mono / g->leading_monomial();
      work.sub_multiple(c, shift, *g);
    } else {
      remainder.push_back(work.take_leading());
    }
  }
  return Polynomial(f.ring_ptr(), std::move(remainder));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  const Ring& ring = gens.front().ring();

  std::vector<Polynomial> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto install = [&](Polynomial h) {
    basis.push_back(h.monic());
    update_pairs(basis, active, pairs, basis.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial h = reduce(g, basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(g.ring_ptr(), g.field().one())};
    install(std::move(h));
  }

  while (!pairs.empty()) {
    // Normal strategy: the pair with the smallest lcm, by degree then order.
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      int da = it->lcm.total_degree(), db = best->lcm.total_degree();
      if (da < db || (da == db && ring.compare(it->lcm, best->lcm) < 0)) best = it;
    }
    Pair p = *best;
    pairs.erase(best);

    Polynomial h = reduce(s_polynomial(basis[p.i], basis[p.j], p.lcm), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial::constant(h.ring_ptr(), h.field().one())};
    install(std::move(h));
  }

  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (active[i]) minimal.push_back(basis[i]);

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial g = minimal[i];
    Term lead = g.take_leading();
    Polynomial tail = reduce(g, others);
    reduced.push_back(Polynomial::from_monomial(g.ring_ptr(), lead.mono, lead.coeff) + tail);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const Field& k = f.field();
  Polynomial quotient(f.ring_ptr());
  Polynomial rest = f;
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    if (!g.leading_monomial().divides(lead.mono))
      throw std::logic_error("exact_divide: nonzero remainder dividing " + f.to_string() + " by " + g.to_string());
    Scalar c = k.div(lead.coeff, g.leading_coeff());
    Monomial shift = lead.mono / g.leading_monomial();
    qterms.push_back({c, shift});
    rest.sub_multiple(c, shift, g);
  }
  return Polynomial(f.ring_ptr(), std::move(qterms));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == *ring_)) throw RingMismatch("generator belongs to a different ring");
    if (g.is_zero()) continue;
    if (!g.is_bihomogeneous()) throw std::invalid_argument("generator is not bihomogeneous: " + g.to_string());
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(generators_); });
  return cache_->gb;
}

void Ideal::seed_groebner(std::vector<Polynomial> gb) {
  std::call_once(cache_->once, [&] { cache_->gb = std::move(gb); });
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner()) out.push_back(g.leading_monomial());
  return out;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::contains(const Polynomial& f) const { return reduce(f, groebner()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

std::vector<Monomial> Ideal::standard_monomials(Bidegree t) const {
  auto leads = leading_monomials();
  std::vector<Monomial> out;
  for (auto& mono : monomials_of_bidegree(t, *ring_)) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(mono); });
    if (standard) out.push_back(mono);
  }
  return out;
}

long long Ideal::quotient_dim(Bidegree t) const { return static_cast<long long>(standard_monomials(t).size()); }

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch("normal_form: polynomial and ideal in different rings");
  return reduce(f, ideal.groebner());
}

namespace {
void check_same(const Ideal& i, const Ideal& j) {
  if (!(i.ring() == j.ring())) throw RingMismatch("ideals belong to different rings");
}
}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  check_same(i, j);
  return ideal_sum(i, j.generators());
}

Ideal ideal_sum(const Ideal& i, const std::vector<Polynomial>& extra) {
  auto gens = i.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(i.ring_ptr(), std::move(gens));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  check_same(i, j);
  std::vector<Polynomial> gens;
  for (const auto& f : i.generators())
    for (const auto& g : j.generators()) gens.push_back(f * g);
  return Ideal(i.ring_ptr(), std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, int m) {
  if (m < 1) throw std::invalid_argument("ideal_power requires a positive exponent");
  const auto& gens = ideal.generators();
  std::vector<Polynomial> out;
  // Products over nondecreasing index sequences i_1 <= ... <= i_m.
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  if (gens.empty()) return Ideal::zero(ideal.ring_ptr());
  while (true) {
    Polynomial prod = gens[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) prod = prod * gens[idx[k]];
    out.push_back(std::move(prod));
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < idx.size(); ++k) idx[k] = idx[pos - 1];
  }
  return Ideal(ideal.ring_ptr(), std::move(out));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  check_same(i, j);
  RingPtr base = i.ring_ptr();
  RingPtr aux = base->with_aux();
  const Field& k = base->field();
  Polynomial t = Polynomial::from_monomial(aux, aux->var(aux->aux_index()), k.one());
  Polynomial one_minus_t = Polynomial::constant(aux, k.one()) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : i.generators()) gens.push_back(t * f.in_ring(aux));
  for (const auto& g : j.generators()) gens.push_back(one_minus_t * g.in_ring(aux));

  std::vector<Polynomial> eliminated;
  for (const auto& g : buchberger(gens)) {
    if (g.leading_monomial().aux_degree() != 0) continue;
    for (auto& piece : g.in_ring(base).bihomogeneous_components()) eliminated.push_back(std::move(piece));
  }
  Ideal result(base, eliminated);
  // A t-free subset of a reduced elimination basis is the reduced basis of
  // the intersection, provided no splitting happened.
  bool split = false;
  for (const auto& g : eliminated)
    if (!g.is_bihomogeneous()) split = true;
  if (!split) {
    for (auto& g : eliminated) g = g.monic();
    result.seed_groebner(buchberger(eliminated));
  }
  return result;
}

Ideal ideal_intersection(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersection(acc, ideals[k]);
  return acc;
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal_quotient by zero");
  if (!(f.ring() == ideal.ring())) throw RingMismatch("ideal_quotient: different rings");
  if (!f.is_bihomogeneous()) throw std::invalid_argument("ideal_quotient: divisor not bihomogeneous");
  Ideal principal(ideal.ring_ptr(), {f});
  Ideal meet = ideal_intersection(ideal, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.groebner()) gens.push_back(exact_divide(g, f));
  return Ideal(ideal.ring_ptr(), std::move(gens));
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
  check_same(i, j);
  const auto& a = i.groebner();
  const auto& b = j.groebner();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

bool trim_order_less(const Polynomial& a, const Polynomial& b) {
  const auto da = *a.bidegree();
  const auto db = *b.bidegree();
  if (da.total() != db.total()) return da.total() < db.total();
  if (da != db) return da < db;
  return a.ring().compare(a.leading_monomial(), b.leading_monomial()) < 0;
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  auto candidates = ideal.groebner();
  std::stable_sort(candidates.begin(), candidates.end(), trim_order_less);
  std::vector<Polynomial> kept;
  std::vector<Polynomial> kept_gb;
  for (auto& c : candidates) {
    if (!kept.empty() && reduce(c, kept_gb).is_zero()) continue;
    kept.push_back(c);
    kept_gb = buchberger(kept);
  }
  return kept;
}

}  // namespace fatpoints
