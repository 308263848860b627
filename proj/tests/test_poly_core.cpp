#include <doctest.h>

#include "homequiv/errors.hpp"
#include "homequiv/hompoly.hpp"
#include "homequiv/text.hpp"
#include "test_support.hpp"

using namespace homequiv;
using namespace homequiv::testing;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
}  // namespace

TEST_CASE("scalar arithmetic and printing") {
  const Scalar a = Scalar::fraction(3, 2);
  CHECK(a.to_string() == "3/2");
  CHECK(Scalar::i().to_string() == "i");
  CHECK((-Scalar::i()).to_string() == "-i");
  CHECK((Scalar(2) * Scalar::i()).to_string() == "2*i");
  CHECK((Scalar(1) + Scalar(2) * Scalar::i()).to_string() == "1+2*i");
  CHECK((Scalar(1) - Scalar::i()).to_string() == "1-i");
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  const Scalar z(mpq_class(1, 3), mpq_class(-2, 5));
  CHECK((z * z.inverse()).is_one());
  CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
  CHECK(pow(Scalar(1, 1), 4) == Scalar(-4));
}

TEST_CASE("monomial basis order and index") {
  const auto basis = monomial_basis(3, 2);
  REQUIRE(basis.size() == 6);
  CHECK(basis.front() == Monomial({2, 0, 0}));
  CHECK(basis[1] == Monomial({1, 1, 0}));
  CHECK(basis.back() == Monomial({0, 0, 2}));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= 6; ++k) {
      const auto b = monomial_basis(n, k);
      CHECK(b.size() == monomial_count(n, k));
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(monomial_index(b[i]) == i);
        if (i) CHECK(b[i - 1] > b[i]);
      }
    }
  }
}

TEST_CASE("parse examples") {
  const HomPoly f = parse_poly("x^3+y^3", xy);
  CHECK(f.degree() == 3);
  CHECK(f.terms().size() == 2);
  CHECK(to_string(f, xy) == "x^3+y^3");
  CHECK(to_string(parse_poly("y^3*2+x^3*2+x^3", xy), xy) == "3*x^3+2*y^3");
  CHECK(to_string(parse_poly("(x+y)^2", xy), xy) == "x^2+2*x*y+y^2");
  CHECK(to_string(parse_poly("(1+2*i)*x^2 - i*x*y", xy), xy) == "(1+2*i)*x^2-i*x*y");
  CHECK(to_string(parse_poly("x*y/2", xy), xy) == "1/2*x*y");
  CHECK(to_string(parse_poly("-x^3-y^3", xy), xy) == "-x^3-y^3");

  const HomPoly zero = parse_poly("x - x", xy);
  CHECK(zero.is_zero());

  try {
    (void)parse_poly("x^2+y^3", xy);
    FAIL("expected NonHomogeneousError");
  } catch (const NonHomogeneousError& e) {
    CHECK(std::string(e.what()).find("non-homogeneous") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("x^2+", xy), ParseError);
  CHECK_THROWS_AS(parse_poly("x*w", xy), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y", xy), ParseError);
  CHECK_THROWS_AS(parse_poly("x/0", xy), Error);
  CHECK_THROWS_AS(split_vars("x,i"), ParseError);
  CHECK_THROWS_AS(split_vars("x,x"), ParseError);
}

TEST_CASE("print/parse round trip") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const unsigned d = uniform(rng, 1, 5);
    const HomPoly f = random_poly(rng, n, d);
    const std::vector<std::string> vars(xyz.begin(), xyz.begin() + n);
    CHECK(parse_poly(to_string(f, vars), vars) == f);
  }
}

TEST_CASE("substitution agrees with pointwise evaluation") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const HomPoly f = random_poly(rng, n, uniform(rng, 1, 4));
    const LinearMap u(random_matrix(rng, n, n));
    std::vector<Scalar> x;
    for (std::size_t k = 0; k < n; ++k) x.push_back(random_scalar(rng));
    CHECK(evaluate(substitute_linear(f, u), x) == evaluate(f, apply_map(u, x)));
  }
}

TEST_CASE("substitution composes with the matrix product") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const HomPoly f = random_poly(rng, n, uniform(rng, 1, 4));
    const LinearMap u(random_matrix(rng, n, n));
    const LinearMap v(random_matrix(rng, n, n));
    CHECK(substitute_linear(substitute_linear(f, u), v) == substitute_linear(f, u * v));
  }
}

TEST_CASE("derivative is linear and satisfies the chain rule") {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    const unsigned d = uniform(rng, 1, 4);
    const HomPoly f = random_poly(rng, n, d);
    const HomPoly g = random_poly(rng, n, d);
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const LinearMap u(random_matrix(rng, n, n));
    const HomPoly fu = substitute_linear(f, u);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(derivative(a * f + b * g, i) == a * derivative(f, i) + b * derivative(g, i));
      HomPoly rhs(n, d - 1);
      for (std::size_t j = 0; j < n; ++j) rhs += u(j, i) * substitute_linear(derivative(f, j), u);
      CHECK(derivative(fu, i) == rhs);
    }
  }
}

TEST_CASE("Euler identity on random polynomials") {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const HomPoly f = random_poly(rng, uniform(rng, 1, 4), uniform(rng, 1, 6));
    CHECK(euler_check(f));
  }
}

TEST_CASE("typing of graded operations") {
  const HomPoly f = parse_poly("x^2", xy);
  const HomPoly g = parse_poly("x^3", xy);
  CHECK_THROWS_AS(f + g, DimensionError);
  CHECK((f * g).degree() == 5);
  CHECK_THROWS_AS(derivative(HomPoly::constant(2, Scalar(3)), 0), DimensionError);
  CHECK_THROWS_AS(derivative(f, 2), DimensionError);
  CHECK(HomPoly(2, 4).is_zero());
  CHECK(HomPoly(2, 4).degree() == 4);
}
