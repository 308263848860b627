#include <doctest.h>

#include "homequiv/errors.hpp"
#include "homequiv/orbit.hpp"
#include "homequiv/pencil.hpp"
#include "homequiv/text.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace homequiv;
using namespace homequiv::testing;

namespace {

const std::vector<std::string> xy{"x", "y"};

HomPoly p(const char* text) { return parse_poly(text, xy); }

// Whether z lies on the closed segment [a, b] of the plane, exactly.
bool on_segment(const Scalar& z, const Scalar& a, const Scalar& b) {
  const Scalar v = b - a;
  const Scalar w = z - a;
  const mpq_class cross = v.re() * w.im() - v.im() * w.re();
  if (cross != 0) return false;
  const mpq_class dot = v.re() * w.re() + v.im() * w.im();
  return dot >= 0 && dot <= v.re() * v.re() + v.im() * v.im();
}

UniPoly from_roots(const std::vector<Scalar>& roots) {
  UniPoly e(Scalar(1));
  for (const auto& r : roots) e *= UniPoly::t() - r;
  return e;
}

}  // namespace

TEST_CASE("Fermat pair") {
  const EquivalenceCertificate c = decide_right_equivalent(p("x^3+y^3"), p("2*x^3+3*y^3"));
  CHECK(c.verdict == Verdict::equivalent);
  CHECK(c.m == 4);
  CHECK(c.generic_rank == 4);
  CHECK(c.exceptional == (UniPoly::t() + Scalar(1)) * (UniPoly::t() + Scalar::fraction(1, 2)));
  REQUIRE(c.path);
  CHECK_FALSE(c.path->detour);
  CHECK(c.condition_a);
  CHECK(c.condition_b);
}

TEST_CASE("roots of E are exactly where the tangent dimension drops") {
  const HomPoly f = p("x^3+y^3");
  const HomPoly g = p("2*x^3+3*y^3");
  const auto f_at = [&](const Scalar& t) { return (Scalar(1) - t) * f + t * g; };
  CHECK(tangent_space(f_at(Scalar(-1))).dim() < 4);
  CHECK(tangent_space(f_at(Scalar::fraction(-1, 2))).dim() < 4);
  CHECK(tangent_space(f_at(Scalar::fraction(1, 3))).dim() == 4);
}

TEST_CASE("non-isolated pair and the hypothesis gate") {
  const EquivalenceCertificate c = decide_right_equivalent(p("x^2*y"), p("x^2*y+x^3"));
  CHECK(c.verdict == Verdict::equivalent);
  CHECK(c.exceptional == UniPoly(Scalar(1)));
  CHECK(c.m == 3);

  const EquivalenceCertificate n = decide_right_equivalent(p("x^3+y^3"), p("x^3+x^2*y"));
  CHECK(n.verdict == Verdict::hypothesis_not_met);
  CHECK(n.hypothesis == JacobianComparison::different);
  CHECK_FALSE(n.path);

  const EquivalenceCertificate m = decide_right_equivalent(p("x^3"), p("x^4"));
  CHECK(m.verdict == Verdict::hypothesis_not_met);
  CHECK(m.hypothesis == JacobianComparison::degree_mismatch);

  CHECK_THROWS_AS(build_pencil(p("x^3+y^3"), p("x^3+x^2*y")), HypothesisError);
  CHECK_THROWS_AS(decide_right_equivalent(p("x^3"), parse_poly("x^3", {"x"})), DimensionError);
}

TEST_CASE("detour for f and -f") {
  const EquivalenceCertificate c = decide_right_equivalent(p("x^3+y^3"), p("-x^3-y^3"));
  CHECK(c.verdict == Verdict::equivalent);
  CHECK(c.exceptional == UniPoly::t() - Scalar::fraction(1, 2));
  REQUIRE(c.path);
  CHECK(c.path->detour);
  CHECK(c.path->valid());
  CHECK(c.path->segments() == 3);
  for (std::size_t k = 0; k + 1 < c.path->waypoints.size(); ++k)
    CHECK_FALSE(on_segment(Scalar::fraction(1, 2), c.path->waypoints[k], c.path->waypoints[k + 1]));
}

TEST_CASE("exceptional polynomial matches the Leibniz oracle") {
  // Families with J_f = J_g by construction: diagonal forms a x^d + b y^d share
  // (x^(d-1), y^(d-1)); x^(d-1) y + a x^d all share (x^(d-1), x^(d-2) y).
  Rng rng(71);
  for (int trial = 0; trial < 16; ++trial) {
    const unsigned d = uniform(rng, 3, 5);
    const Monomial xd({d, 0});
    const Monomial yd({0, d});
    const Monomial mixed({d - 1, 1});
    HomPoly f(2, d);
    HomPoly g(2, d);
    if (trial % 2 == 0) {
      f += HomPoly::monomial(xd, random_nonzero(rng));
      f += HomPoly::monomial(yd, random_nonzero(rng));
      g += HomPoly::monomial(xd, random_nonzero(rng));
      g += HomPoly::monomial(yd, random_nonzero(rng));
    } else {
      f += HomPoly::monomial(mixed, random_nonzero(rng));
      f += HomPoly::monomial(xd, random_scalar(rng));
      g += HomPoly::monomial(mixed, random_nonzero(rng));
      g += HomPoly::monomial(xd, random_scalar(rng));
    }
    REQUIRE(jacobian_equal(f, g));
    if (f == g) continue;
    const Pencil pen = build_pencil(f, g);
    const ExceptionalPolynomial e = exceptional_polynomial(pen);
    CHECK(e.polynomial == oracle_divisor(pen.phi0, pen.phi1, pen.m()));
    CHECK(decide_right_equivalent(f, g).verdict == Verdict::equivalent);
  }
}

TEST_CASE("reversing the pencil reflects E") {
  Rng rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const HomPoly f = random_poly(rng, uniform(rng, 1, 3), uniform(rng, 3, 4));
    const Scalar c = random_nonzero(rng);
    if (c.is_one()) continue;
    const HomPoly g = c * f;
    const EquivalenceCertificate fg = decide_right_equivalent(f, g);
    const EquivalenceCertificate gf = decide_right_equivalent(g, f);
    CHECK(gf.exceptional == fg.exceptional.compose_affine(Scalar(1), Scalar(-1)).monic());
  }
}

TEST_CASE("scaling family") {
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const HomPoly f = random_poly(rng, uniform(rng, 1, 3), uniform(rng, 3, 4));
    const Scalar c = trial == 0 ? Scalar(1) : random_nonzero(rng);
    const EquivalenceCertificate cert = decide_right_equivalent(f, c * f);
    CHECK(cert.verdict == Verdict::equivalent);
    if (c.is_one()) {
      CHECK(cert.exceptional == UniPoly(Scalar(1)));
    } else {
      const UniPoly target = UniPoly::t() - (Scalar(1) - c).inverse();
      CHECK(divmod(target, cert.exceptional).second.is_zero());
    }
    REQUIRE(cert.path);
    CHECK(cert.path->valid());
  }
}

TEST_CASE("Mather check spot-checks every segment") {
  const Pencil pen = build_pencil(p("x^3+y^3"), p("-x^3-y^3"));
  const ExceptionalPolynomial e = exceptional_polynomial(pen);
  const PathCertificate path = construct_path(e.polynomial);
  const MatherCheck m = mather_check(pen, path);
  CHECK(m.condition_a);
  CHECK(m.condition_b);
  CHECK(m.f_in_ideal);
  CHECK(m.g_in_ideal);
  CHECK(m.spot_checks == kSpotChecksPerSegment * path.segments());

  // The direct segment through the root must be rejected.
  PathCertificate bad;
  bad.waypoints = {Scalar(0), Scalar(1)};
  bad.segment_root_counts = {0};
  CHECK_FALSE(mather_check(pen, bad).condition_b);
}

TEST_CASE("paths avoid prescribed roots") {
  Rng rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Scalar> roots;
    const int count = uniform(rng, 1, 4);
    for (int k = 0; k < count; ++k) {
      // Roots on the unit interval or on a would-be vertical leg are the hard cases.
      const long kind = uniform(rng, 0, 2);
      Scalar r = kind == 0   ? Scalar::fraction(uniform(rng, 1, 9), 10)
                 : kind == 1 ? Scalar(mpq_class(0), mpq_class(uniform(rng, 1, 6)))
                             : random_nonzero(rng, 3);
      if (r.is_zero() || r == Scalar(1)) r = Scalar::fraction(1, 3);
      roots.push_back(r);
    }
    const UniPoly e = squarefree_part(from_roots(roots));
    const PathCertificate path = construct_path(e);
    CHECK(path.valid());
    for (std::size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
      CHECK(segment_root_count(e, path.waypoints[k], path.waypoints[k + 1]) == 0);
      for (const auto& r : roots) CHECK_FALSE(on_segment(r, path.waypoints[k], path.waypoints[k + 1]));
    }
  }
}

TEST_CASE("segment root counts") {
  const UniPoly e = from_roots({Scalar::fraction(1, 2), Scalar(mpq_class(1, 2), mpq_class(1)), Scalar(3)});
  CHECK(segment_root_count(e, Scalar(0), Scalar(1)) == 1);
  CHECK(segment_root_count(e, Scalar(0), Scalar(4)) == 2);
  CHECK(segment_root_count(e, Scalar(mpq_class(0), mpq_class(1)), Scalar(mpq_class(1), mpq_class(1))) == 1);
  CHECK(segment_root_count(e, Scalar(mpq_class(0), mpq_class(2)), Scalar(mpq_class(1), mpq_class(2))) == 0);
}
