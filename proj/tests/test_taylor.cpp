#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bmres/ideal_io.hpp"
#include "bmres/taylor.hpp"
#include "bmres/verify.hpp"
#include "common.hpp"

using namespace bmres;

TEST_CASE("face sign convention") {
  // removing the j-th smallest member of sigma contributes (-1)^{j+1}
  CHECK(face_sign(0b111, 0b110) == 1);   // remove 1st
  CHECK(face_sign(0b111, 0b101) == -1);  // remove 2nd
  CHECK(face_sign(0b111, 0b011) == 1);   // remove 3rd
  CHECK(face_sign(0b1010, 0b1000) == 1);
  CHECK(face_sign(0b1010, 0b0010) == -1);
  CHECK_THROWS_AS(face_sign(0b101, 0b011), std::invalid_argument);
  CHECK_THROWS_AS(face_sign(0b111, 0b001), std::invalid_argument);
}

TEST_CASE("taylor complex of the koszul ideal (x, y)") {
  auto ideal = parse_ideal_inline("x; y");
  auto c = build_taylor(ideal);
  CHECK(c.ranks() == std::vector<int>{1, 2, 1});
  REQUIRE(c.diff[2].size() == 1);
  // d2({x,y}) = -y e_x + x e_y
  REQUIRE(c.diff[2][0].size() == 2);
  CHECK(c.diff[2][0][0] == Entry{0, -1, Monomial({0, 1})});
  CHECK(c.diff[2][0][1] == Entry{1, 1, Monomial({1, 0})});
  CHECK(d_squared_is_zero(c));
}

TEST_CASE("taylor ranks are binomial coefficients") {
  auto ideal = parse_ideal_inline("xy; yz; xz; xw");
  auto c = build_taylor(ideal);
  CHECK(c.ranks() == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(d_squared_is_zero(c));
  for (int d = 1; d <= c.top_degree(); ++d)
    for (std::size_t col = 0; col < c.diff[d].size(); ++col) {
      GenSet sigma = c.basis[d][col];
      // each column has exactly |sigma| entries, one per facet
      CHECK(c.diff[d][col].size() == static_cast<std::size_t>(popcount(sigma)));
      for (const Entry& e : c.diff[d][col]) {
        GenSet tau = c.basis[d - 1][static_cast<std::size_t>(e.row)];
        CHECK(popcount(sigma & ~tau) == 1);
        CHECK(e.mono == quotient(ideal.lcm_of(sigma), ideal.lcm_of(tau)));
      }
    }
}

TEST_CASE("taylor is a resolution on random instances") {
  std::mt19937 rng(21);
  for (int t = 0; t < 50; ++t) {
    auto inst = bmres_test::random_instance(rng);
    LcmLattice lat(inst.ideal);
    auto c = build_taylor(inst.ideal);
    CHECK(d_squared_is_zero(c));
    auto rep = check_resolution(inst.ideal, lat, c);
    CHECK(rep.ok);
  }
}

TEST_CASE("d_squared_is_zero detects corruption") {
  auto ideal = parse_ideal_inline("xy; yz; xz");
  auto c = build_taylor(ideal);
  c.diff[2][0][0].coeff = -c.diff[2][0][0].coeff;
  CHECK_FALSE(d_squared_is_zero(c));
}

TEST_CASE("subset graph sizes") {
  auto ideal = parse_ideal_inline("xy; yz; xz");
  auto g = build_graph(ideal);
  CHECK(g.q == 3);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
}
