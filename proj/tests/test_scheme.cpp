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

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("point ideals") {
    const Field k;
    auto r = ring(1, 1);
    CHECK(ideal_equal(point_ideal(pt(k, {1, 0}, {1, 0}), r), ideal(r, {"x1", "y1"})));
    CHECK(ideal_equal(point_ideal(pt(k, {1, 1}, {1, 1}), r), ideal(r, {"x1 - x0", "y1 - y0"})));
    auto r23 = ring(2, 3);
    CHECK(ideal_equal(point_ideal(pt(k, {0, 0, 1}, {0, 0, 0, 1}), r23), ideal(r23, {"x0", "x1", "y0", "y1", "y2"})));
    // Representatives are normalized.
    CHECK(pt(k, {2, 4}, {0, 3}) == pt(k, {1, 2}, {0, 1}));
    CHECK_THROWS_AS(pt(k, {0, 0}, {1, 0}), std::invalid_argument);
  }

  TEST_CASE("scheme ideals") {
    auto one = fat_point(1);
    CHECK(ideal_equal(scheme_ideal(one), point_ideal(one[0].point, one.ring_ptr())));
    for (int m = 1; m <= 4; ++m) {
      auto z = fat_point(m);
      CHECK(ideal_equal(scheme_ideal(z), ideal_power(ideal(z.ring_ptr(), {"x1", "y1"}), m)));
    }
    const Ideal iz = scheme_ideal(two_double_points());
    for (const auto& g : iz.groebner()) CHECK(g.size() == 1);
    CHECK(scheme_ideal(FatPointScheme(ring(1, 1), {})).is_unit());
  }

  TEST_CASE("scheme validation") {
    const Field k;
    auto r = ring(1, 1);
    CHECK_THROWS_AS(FatPointScheme(r, {{pt(k, {1, 0}, {1, 0}), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FatPointScheme(r, {{pt(k, {1, 0}, {1, 0}), 1}, {pt(k, {3, 0}, {2, 0}), 2}}), std::invalid_argument);
    CHECK_THROWS_AS(FatPointScheme(r, {{pt(k, {1, 0, 0}, {1, 0}), 1}}), std::invalid_argument);
  }

  TEST_CASE("reduce_multiplicity") {
    auto z = two_double_points();
    auto zp = reduce_multiplicity(z, 1);
    REQUIRE(zp.size() == 2);
    CHECK(zp[0].multiplicity == 2);
    CHECK(zp[1].multiplicity == 1);
    auto gone = reduce_multiplicity(fat_point(1), 0);
    CHECK(gone.empty());
    CHECK(scheme_ideal(gone).is_unit());
    CHECK(scheme_degree(gone) == 0);
    CHECK(reduce_multiplicity(fat_point(3), 0)[0].multiplicity == 2);
    CHECK_THROWS_AS(reduce_multiplicity(z, 2), std::out_of_range);
  }

  TEST_CASE("scheme_degree") {
    CHECK(scheme_degree(grid({0, 1, 2}, {0, 5}, 1)) == 6);
    CHECK(scheme_degree(fat_point(3)) == 6);
    auto z = two_double_points();
    CHECK(scheme_degree(z) == 12);
    CHECK(scheme_degree(z) - scheme_degree(reduce_multiplicity(z, 1)) == 5);
  }

  TEST_CASE("ideal_piece_dim_oracle") {
    CHECK(ideal_piece_dim_oracle(fat_point(2), {0, 0}) == 0);
    CHECK(ideal_piece_dim_oracle(fat_point(1), {1, 1}) == 3);
    auto z = two_points();
    CHECK(ideal_piece_dim_oracle(z, {1, 1}) == 2);
    // evaluation matrix of x0y0, x0y1, x1y0, x1y1 at the two points
    CHECK(oracle::rank_mod({{1, 0, 0, 0}, {1, 1, 1, 1}}, 32003) == 2);
    CHECK(oracle::ideal_dim(z, {1, 1}) == 2);
    CHECK_THROWS_AS(ideal_piece_dim_oracle(fat_point(3, Field::prime(3)), {2, 2}), CharacteristicError);
    CHECK_NOTHROW(ideal_piece_dim_oracle(fat_point(2, Field::prime(3)), {2, 2}));
    CHECK(ideal_piece_dim_oracle(fat_point(2, Field::rationals()), {2, 2}) == ideal_piece_dim_oracle(fat_point(2), {2, 2}));
  }

  TEST_CASE("Groebner dimensions match both oracles") {
    std::mt19937_64 rng(31);
    std::vector<FatPointScheme> schemes{two_double_points(), two_points(), fat_point(3), grid({0, 1}, {0, 2}, 2)};
    for (int trial = 0; trial < 4; ++trial) {
      auto r = ring(2, 1);
      std::vector<FatPoint> items;
      std::uniform_int_distribution<int> mult(1, 3);
      for (int i = 0; i < 3; ++i) items.push_back({random_point(*r, rng), mult(rng)});
      schemes.emplace_back(r, items);
    }
    for (const auto& z : schemes) {
      const Ideal iz = scheme_ideal(z);
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          const Bidegree t{a, b};
          const long long gb = dim_bigraded_piece(t, z.ring()) - static_cast<long long>(iz.standard_monomials(t).size());
          CHECK(gb == ideal_piece_dim_oracle(z, t));
          CHECK(gb == oracle::ideal_dim(z, t));
        }
    }
  }

  TEST_CASE("residual inclusions") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 4; ++trial) {
      auto r = ring(1, 2);
      std::vector<FatPoint> items;
      std::uniform_int_distribution<int> mult(1, 3);
      for (int i = 0; i < 3; ++i) items.push_back({random_point(*r, rng), mult(rng)});
      const FatPointScheme z(r, items);
      const Ideal iz = scheme_ideal(z);
      for (std::size_t i = 0; i < z.size(); ++i) {
        const Ideal izp = scheme_ideal(reduce_multiplicity(z, i));
        CHECK(izp.contains(iz));
        const int m = z[i].multiplicity;
        if (m > 1) CHECK(ideal_power(point_ideal(z[i].point, r), m - 1).contains(izp));
      }
    }
  }

  TEST_CASE("Hilbert value reaches the degree") {
    for (const auto& z : {two_double_points(), two_points(), fat_point(4), grid({0, 1, 2}, {0, 1}, 2)}) {
      const Ideal iz = scheme_ideal(z);
      for (int a = 6; a <= 8; ++a) CHECK(iz.quotient_dim({a, a}) == scheme_degree(z));
    }
  }

  TEST_CASE("random points") {
    std::mt19937_64 rng(1);
    const Field q = Field::rationals();
    auto r = ring(2, 2, q);
    auto p = random_point(*r, rng);
    CHECK(q.is_one(p.a()[0]));
    CHECK(q.is_one(p.b()[0]));
  }
}
