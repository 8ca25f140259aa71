#include "fatpoints/scheme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fatpoints/linalg.hpp"

namespace fatpoints {

namespace {

std::size_t normalize_factor(const Field& k, std::vector<Scalar>& coords, const char* which) {
  auto it = std::find_if(coords.begin(), coords.end(), [&](const Scalar& c) { return !k.is_zero(c); });
  if (it == coords.end()) throw std::invalid_argument(std::string(which) + "-coordinates are all zero");
  Scalar inv = k.inv(*it);
  for (auto& c : coords) c = k.mul(c, inv);
  return static_cast<std::size_t>(it - coords.begin());
}

}  // namespace

PPoint::PPoint(const Field& field, std::vector<Scalar> a, std::vector<Scalar> b) : a_(std::move(a)), b_(std::move(b)) {
  for (const auto& c : a_)
    if (!field.owns(c)) throw ArithmeticError("point coordinate outside " + field.name());
  for (const auto& c : b_)
    if (!field.owns(c)) throw ArithmeticError("point coordinate outside " + field.name());
  x_pivot_ = normalize_factor(field, a_, "x");
  y_pivot_ = normalize_factor(field, b_, "y");
}

std::string PPoint::to_string(const Field& field) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? ":" : "") << field.to_string(a_[i]);
  os << "] x [";
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? ":" : "") << field.to_string(b_[i]);
  os << ']';
  return os.str();
}

FatPointScheme::FatPointScheme(RingPtr ring, std::vector<FatPoint> items) : ring_(std::move(ring)), items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& it = items_[i];
    if (it.multiplicity < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (it.point.a().size() != static_cast<std::size_t>(ring_->n() + 1) ||
        it.point.b().size() != static_cast<std::size_t>(ring_->m() + 1))
      throw std::invalid_argument("point has the wrong number of coordinates");
    for (std::size_t j = 0; j < i; ++j)
      if (items_[j].point == it.point)
        throw std::invalid_argument("duplicate point " + it.point.to_string(ring_->field()));
  }
}

int FatPointScheme::max_multiplicity() const {
  int m = 0;
  for (const auto& it : items_) m = std::max(m, it.multiplicity);
  return m;
}

Ideal point_ideal(const PPoint& p, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  const auto kx = static_cast<int>(p.x_pivot());
  for (int j = 0; j <= ring->n(); ++j) {
    if (j == kx) continue;
    // a_k x_j - a_j x_k with a_k = 1.
    Polynomial form = Polynomial::x(ring, j) - Polynomial::x(ring, kx).scaled(p.a()[static_cast<std::size_t>(j)]);
    gens.push_back(form);
  }
  const auto ky = static_cast<int>(p.y_pivot());
  for (int j = 0; j <= ring->m(); ++j) {
    if (j == ky) continue;
    Polynomial form = Polynomial::y(ring, j) - Polynomial::y(ring, ky).scaled(p.b()[static_cast<std::size_t>(j)]);
    gens.push_back(form);
  }
  return Ideal(ring, std::move(gens));
}

Ideal scheme_ideal(const FatPointScheme& z) {
  if (z.empty()) return Ideal::unit(z.ring_ptr());
  std::vector<Ideal> powers;
  for (const auto& it : z.items()) powers.push_back(ideal_power(point_ideal(it.point, z.ring_ptr()), it.multiplicity));
  return ideal_intersection(powers);
}

FatPointScheme reduce_multiplicity(const FatPointScheme& z, std::size_t i) {
  if (i >= z.size()) throw std::out_of_range("point index " + std::to_string(i + 1) + " out of range");
  auto items = z.items();
  if (--items[i].multiplicity == 0) items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
  return FatPointScheme(z.ring_ptr(), std::move(items));
}

long long scheme_degree(const FatPointScheme& z) {
  const int big_n = z.ring().n() + z.ring().m();
  long long deg = 0;
  for (const auto& it : z.items()) deg += binomial(it.multiplicity + big_n - 1, it.multiplicity - 1);
  return deg;
}

namespace {

// Multi-indices of length len with entries summing to at most bound.
void multi_indices(std::size_t len, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    cur.push_back(e);
    multi_indices(len, bound - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

long long ideal_piece_dim_oracle(const FatPointScheme& z, Bidegree t) {
  const Ring& ring = z.ring();
  const Field& k = ring.field();
  if (k.is_prime_field() && static_cast<long long>(k.characteristic()) <= z.max_multiplicity())
    throw CharacteristicError("derivative oracle needs characteristic 0 or p > max multiplicity");

  const auto basis = monomials_of_bidegree(t, ring);
  if (basis.empty()) return 0;

  std::vector<std::vector<Scalar>> rows;
  for (const auto& item : z.items()) {
    const PPoint& p = item.point;
    // Affine variables: all coordinates except the two pivots.
    std::vector<std::size_t> vars;
    std::vector<Scalar> values;
    for (int j = 0; j <= ring.n(); ++j)
      if (static_cast<std::size_t>(j) != p.x_pivot()) {
        vars.push_back(ring.x_index(j));
        values.push_back(p.a()[static_cast<std::size_t>(j)]);
      }
    for (int j = 0; j <= ring.m(); ++j)
      if (static_cast<std::size_t>(j) != p.y_pivot()) {
        vars.push_back(ring.y_index(j));
        values.push_back(p.b()[static_cast<std::size_t>(j)]);
      }

    std::vector<std::vector<int>> alphas;
    std::vector<int> cur;
    multi_indices(vars.size(), item.multiplicity - 1, cur, alphas);

    for (const auto& alpha : alphas) {
      std::vector<Scalar> row;
      row.reserve(basis.size());
      for (const auto& mono : basis) {
        Scalar entry = k.one();
        for (std::size_t v = 0; v < vars.size() && !k.is_zero(entry); ++v) {
          const int e = mono[vars[v]];
          const int a = alpha[v];
          if (e < a) {
            entry = k.zero();
            break;
          }
          // d^a/du^a u^e = e (e-1) ... (e-a+1) u^(e-a)
          for (int f = 0; f < a; ++f) entry = k.mul(entry, k.from_int(e - f));
          entry = k.mul(entry, k.pow(values[v], static_cast<unsigned>(e - a)));
        }
        row.push_back(entry);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return static_cast<long long>(basis.size());
  Matrix conditions(k, rows);
  return static_cast<long long>(basis.size() - conditions.rank());
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
    return std::uint32_t{dist(rng)};
  }
  std::uniform_int_distribution<int> dist(-50, 50);
  return field.from_int(dist(rng));
}

PPoint random_point(const Ring& ring, std::mt19937_64& rng) {
  const Field& k = ring.field();
  std::vector<Scalar> a{k.one()}, b{k.one()};
  for (int i = 1; i <= ring.n(); ++i) a.push_back(random_scalar(k, rng));
  for (int j = 1; j <= ring.m(); ++j) b.push_back(random_scalar(k, rng));
  return PPoint(k, std::move(a), std::move(b));
}

}  // namespace fatpoints
