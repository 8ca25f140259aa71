#include "fatpoints/biring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fatpoints/linalg.hpp"

namespace fatpoints {

Bidegree componentwise_max(Bidegree a, Bidegree b) {
  return {std::max(a.d1, b.d1), std::max(a.d2, b.d2)};
}

long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::uint8_t nvars, std::uint8_t split, std::uint8_t ny)
    : nvars_(nvars), split_(split), ny_(ny) {}

void Monomial::set(std::size_t i, std::uint16_t e) {
  exp_[i] = e;
  recompute();
}

void Monomial::recompute() {
  deg_x_ = deg_y_ = deg_aux_ = 0;
  for (std::size_t i = 0; i < split_; ++i) deg_x_ += exp_[i];
  for (std::size_t i = split_; i < std::size_t{split_} + ny_; ++i) deg_y_ += exp_[i];
  for (std::size_t i = std::size_t{split_} + ny_; i < nvars_; ++i) deg_aux_ += exp_[i];
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
  r.deg_x_ += b.deg_x_;
  r.deg_y_ += b.deg_y_;
  r.deg_aux_ += b.deg_aux_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  r.deg_x_ -= b.deg_x_;
  r.deg_y_ -= b.deg_y_;
  r.deg_aux_ -= b.deg_aux_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  r.recompute();
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] && o.exp_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exp_[i]) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(int n, int m, Field field, bool with_aux) : n_(n), m_(m), field_(field), aux_(with_aux) {
  if (n < 1 || m < 1) throw std::invalid_argument("ring requires n >= 1 and m >= 1");
  if (static_cast<std::size_t>(n + m + 3) > kMaxVars)
    throw std::invalid_argument("too many variables: n + m must be at most " + std::to_string(kMaxVars - 3));
}

Monomial Ring::one() const {
  return Monomial(static_cast<std::uint8_t>(nvars()), static_cast<std::uint8_t>(n_ + 1),
                  static_cast<std::uint8_t>(m_ + 1));
}

Monomial Ring::var(std::size_t index, std::uint16_t power) const {
  Monomial mono = one();
  mono.set(index, power);
  return mono;
}

Monomial Ring::make_monomial(std::span<const int> xexp, std::span<const int> yexp) const {
  if (xexp.size() != static_cast<std::size_t>(n_ + 1) || yexp.size() != static_cast<std::size_t>(m_ + 1))
    throw std::invalid_argument("exponent vector length mismatch");
  Monomial mono = one();
  for (int i = 0; i <= n_; ++i) mono.exp_[x_index(i)] = static_cast<std::uint16_t>(xexp[i]);
  for (int j = 0; j <= m_; ++j) mono.exp_[y_index(j)] = static_cast<std::uint16_t>(yexp[j]);
  mono.recompute();
  return mono;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (aux_) {
    if (a.deg_aux_ != b.deg_aux_) return a.deg_aux_ > b.deg_aux_ ? 1 : -1;
  }
  const int da = a.deg_x_ + a.deg_y_;
  const int db = b.deg_x_ + b.deg_y_;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = static_cast<std::size_t>(n_ + m_ + 2); i-- > 0;) {
    if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? 1 : -1;
  }
  return 0;
}

std::string Ring::var_name(std::size_t index) const {
  if (index <= static_cast<std::size_t>(n_)) return "x" + std::to_string(index);
  if (index < aux_index()) return "y" + std::to_string(index - static_cast<std::size_t>(n_ + 1));
  return "t";
}

std::string Ring::to_string(const Monomial& mono) const {
  if (mono.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!mono[i]) continue;
    if (!out.empty()) out += '*';
    out += var_name(i);
    if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
  }
  return out;
}

long long dim_bigraded_piece(Bidegree t, const Ring& ring) {
  if (!t.nonnegative()) return 0;
  return binomial(t.d1 + ring.n(), ring.n()) * binomial(t.d2 + ring.m(), ring.m());
}

namespace {

// All exponent vectors of length len summing to deg.
void compositions(int len, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(e);
    compositions(len, deg - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_bidegree(Bidegree t, const Ring& ring) {
  std::vector<Monomial> out;
  if (!t.nonnegative()) return out;
  std::vector<std::vector<int>> xs, ys;
  std::vector<int> cur;
  compositions(ring.n() + 1, t.d1, cur, xs);
  compositions(ring.m() + 1, t.d2, cur, ys);
  out.reserve(xs.size() * ys.size());
  for (const auto& xe : xs)
    for (const auto& ye : ys) out.push_back(ring.make_monomial(xe, ye));
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch("polynomials belong to different rings");
}

// Sorts descending and merges duplicate monomials, dropping zeros.
std::vector<Term> normalize_terms(const Ring& ring, std::vector<Term> terms) {
  const Field& k = ring.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms)
    if (!ring_->field().owns(t.coeff)) throw ArithmeticError("coefficient outside " + ring_->field().name());
  terms_ = normalize_terms(*ring_, std::move(terms));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({c, ring->one()});
  return p;
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial mono, Scalar c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(c), mono});
  return p;
}

Polynomial Polynomial::x(RingPtr ring, int i) {
  if (i < 0 || i > ring->n()) throw std::out_of_range("x index");
  auto mono = ring->var(ring->x_index(i));
  auto one = ring->field().one();
  return from_monomial(std::move(ring), mono, one);
}

Polynomial Polynomial::y(RingPtr ring, int j) {
  if (j < 0 || j > ring->m()) throw std::out_of_range("y index");
  auto mono = ring->var(ring->y_index(j));
  auto one = ring->field().one();
  return from_monomial(std::move(ring), mono, one);
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  const Ring& ring = f.ring();
  const Field& k = ring.field();
  Polynomial r(f.ring_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() && j < g.terms_.size()) {
    int c = ring.compare(f.terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(f.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Scalar s = k.add(f.terms_[i].coeff, g.terms_[j].coeff);
      if (!k.is_zero(s)) r.terms_.push_back({std::move(s), f.terms_[i].mono});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), f.terms_.begin() + static_cast<std::ptrdiff_t>(i), f.terms_.end());
  r.terms_.insert(r.terms_.end(), g.terms_.begin() + static_cast<std::ptrdiff_t>(j), g.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().neg(t.coeff), t.mono});
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  const Field& k = f.field();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) {
      auto prod = a.mono * b.mono;
      auto c = k.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(prod, c);
      if (!inserted) it->second = k.add(it->second, c);
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (!k.is_zero(c)) terms.push_back({std::move(c), mono});
  Polynomial r(f.ring_);
  r.terms_ = normalize_terms(f.ring(), std::move(terms));
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono});
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& mono) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono * mono});
  return r;
}

void Polynomial::sub_multiple(const Scalar& c, const Monomial& mono, const Polynomial& g) {
  check_same_ring(*this, g);
  const Ring& ring = *ring_;
  const Field& k = ring.field();
  if (k.is_zero(c) || g.is_zero()) return;
  Scalar nc = k.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial gm = g.terms_[j].mono * mono;
    int cmp = i == terms_.size() ? -1 : ring.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({k.mul(nc, g.terms_[j].coeff), gm});
      ++j;
    } else {
      Scalar s = k.add(terms_[i].coeff, k.mul(nc, g.terms_[j].coeff));
      if (!k.is_zero(s)) out.push_back({std::move(s), gm});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Term Polynomial::take_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Bidegree> Polynomial::bidegree() const {
  if (is_zero()) throw std::invalid_argument("the zero polynomial has no bidegree");
  const Bidegree d = terms_.front().mono.bidegree();
  for (const auto& t : terms_)
    if (t.mono.bidegree() != d) return std::nullopt;
  return d;
}

std::vector<Polynomial> Polynomial::bihomogeneous_components() const {
  std::vector<std::pair<Bidegree, std::vector<Term>>> buckets;
  for (const auto& t : terms_) {
    auto d = t.mono.bidegree();
    auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == d; });
    if (it == buckets.end()) {
      buckets.push_back({d, {}});
      it = buckets.end() - 1;
    }
    it->second.push_back(t);
  }
  std::sort(buckets.begin(), buckets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Polynomial> out;
  for (auto& [d, terms] : buckets) {
    Polynomial p(ring_);
    p.terms_ = std::move(terms);  // already descending: subsequence of a sorted list
    out.push_back(std::move(p));
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> values) const {
  const Field& k = field();
  if (values.size() != ring_->nvars()) throw std::invalid_argument("evaluate: wrong number of values");
  Scalar acc = k.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) v = k.mul(v, k.pow(values[i], t.mono[i]));
    acc = k.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target->n() != ring_->n() || target->m() != ring_->m() || !(target->field() == ring_->field()))
    throw RingMismatch("in_ring: incompatible rings");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  const std::size_t shared = static_cast<std::size_t>(ring_->n() + ring_->m() + 2);
  for (const auto& t : terms_) {
    if (ring_->has_aux() && t.mono[ring_->aux_index()] != 0 && !target->has_aux())
      throw RingMismatch("in_ring: auxiliary variable present");
    Monomial mono = target->one();
    for (std::size_t i = 0; i < shared; ++i) mono.set(i, t.mono[i]);
    if (ring_->has_aux() && target->has_aux()) mono.set(target->aux_index(), t.mono[ring_->aux_index()]);
    terms.push_back({t.coeff, mono});
  }
  return Polynomial(std::move(target), std::move(terms));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring() == o.ring()) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

namespace {

// Signed display of a coefficient; residues above p/2 are shown negative.
std::pair<bool, std::string> signed_coeff(const Field& k, const Scalar& c) {
  if (k.is_prime_field()) {
    auto r = std::get<std::uint32_t>(c);
    if (r > k.characteristic() / 2) return {true, std::to_string(k.characteristic() - r)};
    return {false, std::to_string(r)};
  }
  const auto& q = std::get<mpq_class>(c);
  if (sgn(q) < 0) return {true, mpq_class(-q).get_str()};
  return {false, q.get_str()};
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    auto [negative, mag] = signed_coeff(field(), t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += ring_->to_string(t.mono);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial parse() {
    Polynomial p = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what +
                                " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = product();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      auto e = integer();
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) den = integer();
      return Polynomial::constant(ring_, ring_->field().from_fraction(num, den));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      mpz_class idx = integer();
      int i = static_cast<int>(idx.get_si());
      if (c == 'x') {
        if (i > ring_->n()) fail("variable index out of range");
        return Polynomial::x(ring_, i);
      }
      if (i > ring_->m()) fail("variable index out of range");
      return Polynomial::y(ring_, i);
    }
    if (c == 't' && ring_->has_aux()) {
      ++pos_;
      return Polynomial::from_monomial(ring_, ring_->var(ring_->aux_index()), ring_->field().one());
    }
    fail(std::string("unexpected '") + c + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

std::optional<Bidegree> bidegree_of(const Polynomial& f) { return f.bidegree(); }

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  throw std::logic_error("unknown op");
}

// ---------------------------------------------------------------------------
// Linear coordinate changes

Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& a, const ScalarMatrix& b) {
  const Ring& ring = f.ring();
  const Field& k = ring.field();
  auto check = [&](const ScalarMatrix& mat, int size, const char* name) {
    if (mat.size() != static_cast<std::size_t>(size))
      throw std::invalid_argument(std::string(name) + " has the wrong shape");
    for (const auto& row : mat)
      if (row.size() != static_cast<std::size_t>(size))
        throw std::invalid_argument(std::string(name) + " has the wrong shape");
    if (!Matrix(k, mat).inverse()) throw std::invalid_argument(std::string(name) + " is singular");
  };
  check(a, ring.n() + 1, "x-block matrix");
  check(b, ring.m() + 1, "y-block matrix");

  auto ring_ptr = f.ring_ptr();
  std::vector<Polynomial> images;
  for (int i = 0; i <= ring.n(); ++i) {
    Polynomial form(ring_ptr);
    for (int j = 0; j <= ring.n(); ++j)
      form += Polynomial::from_monomial(ring_ptr, ring.var(ring.x_index(j)), a[i][j]);
    images.push_back(form);
  }
  for (int i = 0; i <= ring.m(); ++i) {
    Polynomial form(ring_ptr);
    for (int j = 0; j <= ring.m(); ++j)
      form += Polynomial::from_monomial(ring_ptr, ring.var(ring.y_index(j)), b[i][j]);
    images.push_back(form);
  }
  if (ring.has_aux()) images.push_back(Polynomial::from_monomial(ring_ptr, ring.var(ring.aux_index()), k.one()));

  Polynomial out(ring_ptr);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(ring_ptr, t.coeff);
    for (std::size_t v = 0; v < ring.nvars(); ++v)
      if (t.mono[v]) term = term * images[v].pow(t.mono[v]);
    out += term;
  }
  return out;
}

}  // namespace fatpoints
