#include <doctest.h>

#include "fatpoints/gbasis.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (auto g : gens) out.push_back(parse(r, g));
  return Ideal(r, out);
}

std::vector<std::string> strings(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace

TEST_SUITE("gbasis") {
  TEST_CASE("buchberger on monomial ideals") {
    auto r = ring(1, 1);
    CHECK(strings(ideal(r, {"x1", "y1"}).groebner()) == std::vector<std::string>{"y1", "x1"});
    auto sq = ideal_power(ideal(r, {"x1", "y1"}), 2);
    auto gb = strings(sq.groebner());
    std::sort(gb.begin(), gb.end());
    CHECK(gb == std::vector<std::string>{"x1*y1", "x1^2", "y1^2"});
  }

  TEST_CASE("intersection of two point ideals") {
    auto r = ring(1, 1);
    auto iz = ideal_intersection(ideal(r, {"x1", "y1"}), ideal(r, {"x1 - x0", "y1 - y0"}));
    CHECK(iz.contains(parse(r, "y0*x1 - x0*y1")));
    CHECK_FALSE(iz.contains(parse(r, "x1")));
  }

  TEST_CASE("normal_form") {
    auto r = ring(1, 1);
    auto i = ideal(r, {"x1 - x0", "y1 - y0"});
    CHECK(normal_form(parse(r, "x1 - x0"), i).is_zero());
    CHECK(normal_form(Polynomial::constant(r, r->field().one()), i) == Polynomial::constant(r, r->field().one()));
    const auto f = parse(r, "x1*y1");
    const auto nf = normal_form(f, i);
    CHECK(nf == parse(r, "x1*y1"));
    CHECK(normal_form(parse(r, "x0*y0"), i) == nf);
    // f - nf vanishes at [1:1]x[1:1], the zero set of the prime ideal i.
    CHECK(oracle::in_fat_point(f - nf, pt(r->field(), {1, 1}, {1, 1}), 1));
  }

  TEST_CASE("ideal_power") {
    auto r = ring(1, 1);
    auto i = ideal(r, {"x1", "y1"});
    CHECK(ideal_equal(ideal_power(i, 1), i));
    CHECK(ideal_equal(ideal_power(i, 3), ideal(r, {"x1^3", "x1^2*y1", "x1*y1^2", "y1^3"})));
    for (int m = 1; m <= 5; ++m) {
      // monomials of degree m in two variables
      CHECK(minimal_generators(ideal_power(i, m)).size() == static_cast<std::size_t>(m + 1));
    }
    CHECK_THROWS_AS(ideal_power(i, 0), std::invalid_argument);
  }

  TEST_CASE("intersection, quotient and equality") {
    auto r = ring(1, 1);
    auto i = ideal(r, {"x1", "y1"});
    CHECK(ideal_equal(ideal_intersection(i, i), i));
    auto q = ideal_quotient(ideal_power(i, 2), parse(r, "x1"));
    CHECK(q.contains(i));
    CHECK(i.contains(q));
    CHECK(ideal_equal(ideal_quotient(i, parse(r, "x0")), i));
    CHECK(ideal_equal(i, ideal(r, {"y1", "x1", "x1*y1"})));
    CHECK_FALSE(ideal_equal(ideal(r, {"x1"}), ideal(r, {"x1^2"})));
    CHECK(ideal_equal(ideal_quotient(i, parse(r, "x1")), Ideal::unit(r)));
  }

  TEST_CASE("x0 is a nonzero-divisor modulo two points") {
    auto z = two_points();
    auto iz = scheme_ideal(z);
    CHECK(ideal_equal(ideal_quotient(iz, Polynomial::x(z.ring_ptr(), 0)), iz));
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) CHECK(oracle::multiplication_injective(z, 0, {a, b}));
  }

  TEST_CASE("ideal of two coordinate double points is monomial") {
    auto iz = scheme_ideal(two_double_points());
    for (const auto& g : iz.groebner()) CHECK(g.size() == 1);
  }

  TEST_CASE("non-bihomogeneous generators are rejected") {
    auto r = ring(1, 1);
    CHECK_THROWS_AS(ideal(r, {"x1 + y1"}), std::invalid_argument);
    CHECK_THROWS_AS(exact_divide(parse(r, "x1*y1 + x0*y0"), parse(r, "x1")), std::logic_error);
  }

  TEST_CASE("properties on random ideals") {
    std::mt19937_64 rng(21);
    auto r = ring(2, 1);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Polynomial> gens;
      for (int g = 0; g < 3; ++g) {
        Bidegree t{deg(rng), deg(rng)};
        if (t.total() == 0) t = {1, 0};
        gens.push_back(random_form(r, t, rng));
      }
      const Ideal i(r, gens);
      for (const auto& g : i.groebner()) CHECK(g.is_bihomogeneous());

      // A combination of generators reduces to zero.
      const Bidegree top{3, 3};
      Polynomial f(r);
      for (const auto& g : gens) f += random_form(r, top - *g.bidegree(), rng) * g;
      CHECK(normal_form(f, i).is_zero());

      // NF is linear.
      auto a = random_form(r, {2, 2}, rng), b = random_form(r, {2, 2}, rng);
      CHECK(normal_form(a + b, i) == normal_form(normal_form(a, i) + normal_form(b, i), i));

      // Intersection with a second ideal.
      const Ideal j(r, {random_form(r, {1, 0}, rng), random_form(r, {0, 1}, rng)});
      const Ideal ij = ideal_intersection(i, j);
      for (const auto& g : i.generators())
        for (const auto& h : j.generators()) CHECK(ij.contains(g * h));
      CHECK(i.contains(ij));
      CHECK(j.contains(ij));

      // (I : f) contains I, with equality iff f is injective on R/I; the
      // injectivity is read off from quotient dimensions up to the degrees
      // of the generators of (I : f).
      const auto l = random_form(r, {1, 0}, rng);
      const Ideal q = ideal_quotient(i, l);
      CHECK(q.contains(i));
      Bidegree corner{0, 0};
      for (const auto& g : q.groebner()) corner = {std::max(corner.d1, g.bidegree()->d1), std::max(corner.d2, g.bidegree()->d2)};
      bool injective = true;
      for (int s = 0; s <= corner.d1; ++s)
        for (int t = 0; t <= corner.d2; ++t) injective = injective && q.quotient_dim({s, t}) == i.quotient_dim({s, t});
      CHECK(ideal_equal(q, i) == injective);
    }
  }
}
