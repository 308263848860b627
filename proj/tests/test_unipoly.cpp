#include <doctest.h>

#include <cstdlib>

#include "homequiv/errors.hpp"
#include "homequiv/unipoly.hpp"
#include "test_support.hpp"

using namespace homequiv;
using namespace homequiv::testing;

namespace {

UniPoly from_ints(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(v);
  return UniPoly(s);
}

int sign_at(const UniPoly& p, const mpq_class& x) { return sgn(p.evaluate(Scalar(x)).re()); }

// Distinct roots in (a, b] seen as sign changes or exact zeros on a uniform
// grid, refined until two successive counts agree.
std::size_t grid_count(const UniPoly& p, const mpq_class& a, const mpq_class& b) {
  std::size_t previous = SIZE_MAX;
  for (long cells = 16; cells <= 1L << 14; cells *= 2) {
    std::size_t count = 0;
    int last = sign_at(p, a);
    for (long k = 1; k <= cells; ++k) {
      const mpq_class x = a + (b - a) * mpq_class(k, cells);
      const int s = sign_at(p, x);
      if (s == 0) {
        ++count;
      } else if (last != 0 && s != last) {
        ++count;
      }
      last = s;
    }
    if (count == previous) return count;
    previous = count;
  }
  return previous;
}

std::vector<long> divisors(long v) {
  std::vector<long> out;
  v = std::labs(v);
  for (long k = 1; k <= v; ++k)
    if (v % k == 0) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("printing and arithmetic") {
  const UniPoly e = (UniPoly::t() + Scalar(1)) * (UniPoly::t() + Scalar::fraction(1, 2));
  CHECK(e.to_string() == "t^2+3/2*t+1/2");
  CHECK(UniPoly(Scalar(1)).to_string() == "1");
  CHECK(UniPoly().degree() == -1);
  CHECK((e - e).is_zero());
  const auto [q, r] = divmod(e, UniPoly::t() + Scalar(1));
  CHECK(q == UniPoly::t() + Scalar::fraction(1, 2));
  CHECK(r.is_zero());
  CHECK(e.evaluate(Scalar(-1)).is_zero());
  CHECK(e.derivative() == UniPoly::linear(Scalar::fraction(3, 2), Scalar(2)));
}

TEST_CASE("gcd and squarefree part") {
  const UniPoly a = UniPoly::t() - Scalar(1);
  const UniPoly b = UniPoly::t() + Scalar::i();
  const UniPoly c = UniPoly::t() - Scalar(3);
  CHECK(gcd(a * a * b, a * c) == a);
  CHECK(gcd(a, c) == UniPoly(Scalar(1)));
  CHECK(squarefree_part(Scalar(5) * a * a * a * b * b) == (a * b).monic());
  CHECK(gcd(UniPoly(), a) == a);
}

TEST_CASE("compose_affine") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> c;
    for (int k = 0; k < 4; ++k) c.push_back(random_scalar(rng));
    const UniPoly p(c);
    const Scalar a = random_scalar(rng);
    const Scalar v = random_scalar(rng);
    const UniPoly q = p.compose_affine(a, v);
    for (long s = -2; s <= 2; ++s) CHECK(q.evaluate(Scalar(s)) == p.evaluate(a + Scalar(s) * v));
  }
}

TEST_CASE("Sturm count against a refined sign grid") {
  Rng rng(32);
  int checked = 0;
  while (checked < 60) {
    const UniPoly p = from_ints({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, 1, 3)});
    if (gcd(p, p.derivative()).degree() > 0) continue;
    const mpq_class a(uniform(rng, -6, 0));
    const mpq_class b(uniform(rng, 1, 6));
    CHECK(sturm_count(p, a, b) == grid_count(p, a, b));
    ++checked;
  }
}

TEST_CASE("Sturm count with known roots") {
  const UniPoly t = UniPoly::t();
  const UniPoly p = (t - Scalar(1)) * (t - Scalar(1)) * (t + Scalar::fraction(1, 2)) * (t * t + Scalar(1));
  CHECK(sturm_count(p, mpq_class(-1), mpq_class(2)) == 2);
  CHECK(sturm_count(p, mpq_class(-1, 2), mpq_class(2)) == 1);  // left endpoint excluded
  CHECK(sturm_count(p, mpq_class(-1), mpq_class(1)) == 2);     // right endpoint included
  CHECK(sturm_count(p, mpq_class(2), mpq_class(3)) == 0);
  CHECK_THROWS_AS(sturm_count(t - Scalar::i(), mpq_class(0), mpq_class(1)), DimensionError);
}

TEST_CASE("Cauchy bound dominates every rational root") {
  Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> c;
    for (int k = 0; k < 4; ++k) c.push_back(uniform(rng, -8, 8));
    c[0] = uniform(rng, 1, 12) * (uniform(rng, 0, 1) ? 1 : -1);
    c[3] = uniform(rng, 1, 4);
    const UniPoly p = from_ints(c);
    const mpq_class bound = cauchy_root_bound(p);
    for (long num : divisors(c[0])) {
      for (long den : divisors(c[3])) {
        for (long s : {1L, -1L}) {
          const mpq_class root(s * num, den);
          if (p.evaluate(Scalar(root)).is_zero()) CHECK(abs(root) <= bound);
        }
      }
    }
  }
  CHECK(cauchy_root_bound(from_ints({-6, 0, 1})) >= 6);
}
