#include <doctest.h>

#include "fatpoints/resol.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (auto g : gens) out.push_back(parse(r, g));
  return Ideal(r, out);
}

std::map<Bidegree, int> counts(std::initializer_list<Bidegree> ds) { return shift_counts(ShiftList(ds)); }

// Exponent vectors of a monomial ideal's generators.
std::vector<std::vector<int>> exponent_vectors(const Ideal& i) {
  std::vector<std::vector<int>> out;
  const std::size_t nv = i.ring().nvars();
  for (const auto& g : i.generators()) {
    std::vector<int> e(nv);
    for (std::size_t v = 0; v < nv; ++v) e[v] = g.leading_monomial()[v];
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_SUITE("resol") {
  TEST_CASE("syzygies") {
    auto r = ring(1, 1);
    CHECK(syzygies({parse(r, "x1")}).cols() == 0);
    auto koszul = syzygies({parse(r, "x1"), parse(r, "y1")});
    REQUIRE(koszul.cols() == 1);
    CHECK(koszul.at(0, 0) == parse(r, "y1"));
    CHECK(koszul.at(1, 0) == parse(r, "-x1"));

    const std::vector<Polynomial> cube{parse(r, "x1^3"), parse(r, "x1^2*y1"), parse(r, "x1*y1^2"), parse(r, "y1^3")};
    auto s = syzygies(cube);
    CHECK(s.cols() == 3);
    PolyMatrix gens(r, 1, 4);
    for (std::size_t c = 0; c < 4; ++c) gens.set(0, c, cube[c]);
    CHECK((gens * s).is_zero());
    // Alternating count 1 - 4 + 3 against monomials outside (x1,y1)^3.
    const auto exps = exponent_vectors(Ideal(r, cube));
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        long long alt = dim_bigraded_piece({a, b}, *r);
        for (const auto& g : cube) alt -= dim_bigraded_piece(Bidegree{a, b} - *g.bidegree(), *r);
        for (std::size_t c = 0; c < s.cols(); ++c) {
          const auto& [row, entry] = *s.column(c).begin();
          alt += dim_bigraded_piece(Bidegree{a, b} - *entry.bidegree() - *cube[row].bidegree(), *r);
        }
        CHECK(alt == oracle::standard_count({a, b}, 1, 1, exps));
      }
  }

  TEST_CASE("point resolution") {
    const Field k;
    auto r = ring(1, 1);
    auto res = minimal_free_resolution(point_ideal(pt(k, {1, 3}, {2, 1}), r));
    REQUIRE(res.length() == 2);
    CHECK(shift_counts(res.modules[1]) == counts({{1, 0}, {0, 1}}));
    CHECK(shift_counts(res.modules[2]) == counts({{1, 1}}));
    CHECK(pdim(point_ideal(pt(k, {1, 3}, {2, 1}), r)) == 2);
    CHECK(hilbert_from_betti(res, {1, 1}) == 1);

    std::mt19937_64 rng(4);
    CHECK(point_resolution_check(r, rng));
    CHECK(point_resolution_check(ring(2, 3), rng));
    CHECK(point_resolution_check(ring(3, 2, Field::rationals()), rng));
    auto r23 = ring(2, 3);
    auto a = minimal_free_resolution(point_ideal(random_point(*r23, rng), r23));
    auto b = minimal_free_resolution(point_ideal(random_point(*r23, rng), r23));
    for (std::size_t i = 0; i <= 5; ++i) CHECK(a.modules[i] == b.modules[i]);
    CHECK(shift_counts(a.modules[4]) == counts({{1, 3}, {1, 3}, {2, 2}, {2, 2}, {2, 2}}));
  }

  TEST_CASE("resolution of (x1,y1)^3") {
    auto r = ring(1, 1);
    const Ideal cube = ideal_power(ideal(r, {"x1", "y1"}), 3);
    auto res = minimal_free_resolution(cube);
    CHECK(res.length() == 2);
    CHECK(shift_counts(res.modules[1]) == counts({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
    CHECK(shift_counts(res.modules[2]) == counts({{3, 1}, {2, 2}, {1, 3}}));
    const auto exps = exponent_vectors(cube);
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) CHECK(hilbert_from_betti(res, {a, b}) == oracle::standard_count({a, b}, 1, 1, exps));
    CHECK(hilbert_from_betti(res, {2, 2}) == 6);
    CHECK(hilbert_from_betti(res, {0, 0}) == 1);
  }

  TEST_CASE("twisted ideal has shifted Betti numbers") {
    const Field k;
    auto r = ring(1, 1);
    const Ideal ip = point_ideal(pt(k, {1, 0}, {1, 0}), r);
    std::vector<Polynomial> twisted;
    for (const auto& g : ip.generators()) twisted.push_back(Polynomial::x(r, 0) * g);
    // x0 * I_P as a module is I_P(-1,0); R/(x0 I_P) gains the generator x0.
    auto a = minimal_free_resolution(ip), b = minimal_free_resolution(Ideal(r, twisted));
    REQUIRE(a.modules.size() == b.modules.size());
    for (std::size_t i = 1; i < a.modules.size(); ++i) {
      ShiftList moved;
      for (auto s : a.modules[i]) moved.push_back(s + Bidegree{1, 0});
      CHECK(b.modules[i] == moved);
    }
  }

  TEST_CASE("pdim and the ACM property") {
    CHECK(pdim(scheme_ideal(fat_point(3))) == 2);
    CHECK(pdim(scheme_ideal(two_double_points())) == 6);
    CHECK(pdim(scheme_ideal(two_points())) == 3);
    CHECK_THROWS_AS(pdim(Ideal::unit(ring(1, 1))), std::invalid_argument);
  }

  TEST_CASE("last syzygies and rank bound") {
    std::mt19937_64 rng(9);
    FatPointAnalysis z2(fat_point(2)), z3(fat_point(3)), z1(fat_point(1));
    CHECK(last_syzygy_separator_check(z2, 0, kDefaultAcmTrials, rng));
    CHECK(last_syzygy_separator_check(z3, 0, kDefaultAcmTrials, rng));
    CHECK(last_syzygy_separator_check(z1, 0, kDefaultAcmTrials, rng));
    auto f2 = minimal_free_resolution(z2.ideal());
    CHECK(shift_counts(f2.modules[2]) == counts({{1, 2}, {2, 1}}));
    CHECK(rank_bound_check(z1, kDefaultAcmTrials, rng));
    CHECK(rank_bound_check(z2, kDefaultAcmTrials, rng));
    CHECK(rank_bound_check(z3, kDefaultAcmTrials, rng));
    CHECK(minimal_free_resolution(z3.ideal()).rank(2) == 3);
    FatPointAnalysis bad(two_double_points());
    CHECK_THROWS_AS(last_syzygy_separator_check(bad, 1, kDefaultAcmTrials, rng), PreconditionError);
    CHECK_THROWS_AS(rank_bound_check(bad, kDefaultAcmTrials, rng), PreconditionError);
  }

  TEST_CASE("resolution invariants on fixtures and random schemes") {
    std::mt19937_64 rng(71);
    std::vector<FatPointScheme> schemes{two_double_points(), two_points(), fat_point(4), grid({0, 1, 2}, {0, 5}, 2)};
    for (int trial = 0; trial < 4; ++trial) {
      auto r = ring(trial % 2 ? 2 : 1, trial % 2 ? 1 : 2);
      std::vector<FatPoint> items;
      std::uniform_int_distribution<int> mult(1, 3);
      for (int i = 0; i < 3; ++i) items.push_back({random_point(*r, rng), mult(rng)});
      schemes.emplace_back(r, items);
    }
    for (const auto& z : schemes) {
      const Ideal iz = scheme_ideal(z);
      const int big_n = z.ring().n() + z.ring().m();
      const auto frame = schreyer_resolution(iz);
      CHECK(is_complex(frame));
      CHECK(degrees_consistent(frame));
      const auto res = minimalize(frame);
      CHECK(res.minimal);
      CHECK(is_complex(res));
      CHECK(degrees_consistent(res));
      long long euler = 0;
      for (std::size_t i = 0; i < res.modules.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long long>(res.rank(i));
      CHECK(euler == 0);
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
          CHECK(hilbert_from_betti(res, {a, b}) == iz.quotient_dim({a, b}));
          CHECK(hilbert_from_betti(frame, {a, b}) == iz.quotient_dim({a, b}));
          CHECK(hilbert_from_betti(res, {a, b}) == oracle::hilbert(z, {a, b}));
        }
      const auto p = res.length();
      CHECK((p == static_cast<std::size_t>(big_n) || p == static_cast<std::size_t>(big_n + 1)));
      CHECK((p == static_cast<std::size_t>(big_n)) == acm_check(z, kDefaultAcmTrials, rng).is_acm);
      const auto again = minimal_free_resolution(iz);
      CHECK(again.modules == res.modules);
    }
  }

  TEST_CASE("matrix helpers") {
    auto r = ring(1, 1);
    PolyMatrix m(r, 2, 2);
    m.set(0, 1, parse(r, "x1"));
    CHECK(m.at(0, 1) == parse(r, "x1"));
    CHECK(m.at(1, 1).is_zero());
    m.set(0, 1, Polynomial(r));
    CHECK(m.is_zero());
    CHECK_THROWS_AS(m.set(2, 0, parse(r, "x1")), std::out_of_range);
    CHECK_THROWS_AS(m * PolyMatrix(r, 3, 1), std::invalid_argument);
  }
}
