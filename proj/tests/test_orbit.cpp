#include <doctest.h>

#include "homequiv/milnor.hpp"
#include "homequiv/orbit.hpp"
#include "homequiv/text.hpp"
#include "test_support.hpp"

using namespace homequiv;
using namespace homequiv::testing;

TEST_CASE("tangent examples") {
  const std::vector<std::string> xy{"x", "y"};
  const HomPoly f = parse_poly("x^3+y^3", xy);
  const OrbitTangent t = tangent_space(f);
  CHECK(t.dim() == 4);
  CHECK(tangent_generators(f).rows() == 4);
  CHECK(euler_membership(f));
  // x^2*y: x*d_x f = 2x^2y, y*d_x f = 2xy^2, x*d_y f = x^3, y*d_y f = x^2y
  CHECK(tangent_space(parse_poly("x^2*y", xy)).dim() == 3);
}

TEST_CASE("tangent equals the ideal piece in degree d") {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const unsigned d = uniform(rng, 1, 5);
    const HomPoly f = random_poly(rng, n, d);
    const OrbitTangent t = tangent_space(f);
    CHECK(t.span == ideal_piece(jacobian(f), d));
    CHECK(check_inclusion(f));
    CHECK(tangent_equals_ideal_piece(f));
    CHECK(t.dim() <= n * n);
    CHECK(euler_membership(f));
  }
}

TEST_CASE("generator layout is i outer, j inner") {
  Rng rng(62);
  const HomPoly f = random_poly(rng, 3, 3);
  const Mat gens = tangent_generators(f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const HomPoly expect = HomPoly::variable(3, j) * derivative(f, i);
      const auto row = gens.row(i * 3 + j);
      CHECK(std::vector<Scalar>(row.begin(), row.end()) == expect.coordinates());
    }
  }
}

TEST_CASE("orbit dimension is invariant under substitution") {
  Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const HomPoly f = random_poly(rng, n, uniform(rng, 1, 4));
    const LinearMap u = random_invertible(rng, n);
    CHECK(tangent_space(substitute_linear(f, u)).dim() == tangent_space(f).dim());
  }
}
