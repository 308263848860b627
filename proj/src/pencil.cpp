#include "homequiv/pencil.hpp"

#include <algorithm>
#include <random>

#include "homequiv/divisor.hpp"
#include "homequiv/errors.hpp"
#include "homequiv/orbit.hpp"

namespace homequiv {

namespace {

Mat coordinates_in(const Subspace& basis, const Mat& generators) {
  Mat coords(generators.rows(), basis.dim());
  for (std::size_t r = 0; r < generators.rows(); ++r) {
    auto c = basis.coordinates(generators.row(r));
    if (!c) throw InternalError("orbit tangent generator outside (J_f)_d");
    for (std::size_t k = 0; k < basis.dim(); ++k) coords(r, k) = (*c)[k];
  }
  return coords;
}

Scalar random_segment_point(std::mt19937_64& rng, const Scalar& from, const Scalar& to) {
  std::uniform_int_distribution<long> num(1, 9999);
  const Scalar s(mpq_class(num(rng), 10000));
  return from + s * (to - from);
}

PathCertificate certify(std::vector<Scalar> waypoints, const UniPoly& e) {
  PathCertificate path;
  for (std::size_t k = 0; k + 1 < waypoints.size(); ++k) {
    path.segment_root_counts.push_back(segment_root_count(e, waypoints[k], waypoints[k + 1]));
  }
  path.waypoints = std::move(waypoints);
  return path;
}

EquivalenceCertificate identical_inputs(const HomPoly& f) {
  EquivalenceCertificate cert;
  cert.verdict = Verdict::equivalent;
  cert.hypothesis = JacobianComparison::equal;
  cert.f = f;
  cert.g = f;
  if (!f.is_zero()) {
    cert.m = tangent_space(f).dim();
    cert.generic_rank = cert.m;
  }
  cert.exceptional = UniPoly(1);
  cert.path = certify({Scalar(0), Scalar(1)}, cert.exceptional);
  cert.condition_a = true;
  cert.condition_b = true;
  return cert;
}

}  // namespace

Pencil build_pencil(const HomPoly& f, const HomPoly& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("polynomials have different variable counts");
  if (f.degree() == 0 || g.degree() == 0) throw DimensionError("pencil needs degree >= 1");
  if (f.degree() != g.degree() || !jacobian_equal(f, g)) throw HypothesisError("Jacobian ideals of f and g differ");

  Subspace basis = ideal_piece(jacobian(f), f.degree());
  Mat phi0 = coordinates_in(basis, tangent_generators(f));
  Mat phi1 = coordinates_in(basis, tangent_generators(g));
  return Pencil{f, g, std::move(basis), std::move(phi0), std::move(phi1)};
}

ExceptionalPolynomial exceptional_polynomial(const Pencil& pencil) {
  const std::size_t m = pencil.m();
  if (m == 0) return {UniPoly(1), 0};
  // Equality of the tangent span with (J_f)_d at both ends fixes the generic rank.
  if (rank(pencil.phi0) != m || rank(pencil.phi1) != m) {
    throw InternalError("orbit tangent does not fill (J_f)_d at an endpoint");
  }
  UniPoly e = determinantal_divisor(pencil.phi0, pencil.phi1, m);
  if (pencil.phi0.rows() * pencil.phi0.cols() <= kMinorOracleMaxEntries &&
      !(e == determinantal_divisor(pencil.phi0, pencil.phi1, m, DivisorMethod::minors))) {
    throw InternalError("elimination and minor enumeration disagree on the exceptional polynomial");
  }
  if (e.is_zero() || e.degree() > static_cast<int>(m)) throw InternalError("exceptional polynomial out of bounds");
  if (e.evaluate(Scalar(0)).is_zero() || e.evaluate(Scalar(1)).is_zero()) {
    throw InternalError("exceptional polynomial vanishes at an endpoint");
  }
  return {std::move(e), m};
}

bool PathCertificate::valid() const {
  if (waypoints.size() < 2 || segment_root_counts.size() + 1 != waypoints.size()) return false;
  if (!waypoints.front().is_zero() || !(waypoints.back() == Scalar(1))) return false;
  for (std::size_t k = 0; k + 1 < waypoints.size(); ++k) {
    if (waypoints[k] == waypoints[k + 1]) return false;
  }
  return std::all_of(segment_root_counts.begin(), segment_root_counts.end(), [](std::size_t c) { return c == 0; });
}

std::size_t segment_root_count(const UniPoly& e, const Scalar& from, const Scalar& to) {
  if (from == to) throw DimensionError("degenerate segment");
  const UniPoly along = e.compose_affine(from, to - from);
  // For real s, E(from + s v) = 0 iff both the real and the imaginary
  // coefficient parts vanish, i.e. s is a real root of their gcd.
  const UniPoly common = gcd(along.real_part(), along.imag_part());
  if (common.is_zero()) throw InternalError("exceptional polynomial vanishes identically on a segment");
  if (common.is_constant()) return 0;
  const std::size_t at_start = common.evaluate(Scalar(0)).is_zero() ? 1 : 0;
  return at_start + sturm_count(common, 0, 1);
}

PathCertificate construct_path(const UniPoly& e) {
  if (e.is_zero()) throw InternalError("exceptional polynomial is identically zero");
  if (e.evaluate(Scalar(0)).is_zero() || e.evaluate(Scalar(1)).is_zero()) {
    throw InternalError("exceptional polynomial vanishes at an endpoint");
  }
  PathCertificate direct = certify({Scalar(0), Scalar(1)}, e);
  if (direct.valid()) return direct;

  // Every root has modulus <= bound, so the horizontal leg at height H is
  // always clear. A root can block a slanted leg only for one delta, hence
  // at most deg E retries per leg.
  const mpq_class bound = cauchy_root_bound(e);
  const long max_attempts = 2L * (e.degree() + 1) + 1;
  for (long k = 0; k < max_attempts; ++k) {
    const mpq_class height = bound + 1 + k;
    const mpq_class delta(k, 2);
    PathCertificate path = certify({Scalar(0), Scalar(-delta, height), Scalar(1 + delta, height), Scalar(1)}, e);
    path.detour = true;
    path.height = height;
    if (path.valid()) return path;
  }
  throw InternalError("no root-free detour found");
}

MatherCheck mather_check(const Pencil& pencil, const PathCertificate& path) {
  MatherCheck out;
  const Subspace& ideal = pencil.basis;
  out.f_in_ideal = ideal.contains(pencil.f.coordinates());
  out.g_in_ideal = ideal.contains(pencil.g.coordinates());
  // The path tangent is a multiple of g - f; on the path the orbit tangent is (J_f)_d.
  out.condition_a = out.f_in_ideal && out.g_in_ideal && ideal.contains((pencil.g - pencil.f).coordinates());

  const ExceptionalPolynomial e = exceptional_polynomial(pencil);
  bool avoids = path.valid();
  for (std::size_t k = 0; avoids && k < path.segments(); ++k) {
    avoids = segment_root_count(e.polynomial, path.waypoints[k], path.waypoints[k + 1]) == 0;
  }

  std::mt19937_64 rng(0xA11CE);
  bool constant_rank = avoids;
  for (std::size_t k = 0; constant_rank && k < path.segments(); ++k) {
    for (std::size_t s = 0; s < kSpotChecksPerSegment; ++s) {
      const Scalar q = random_segment_point(rng, path.waypoints[k], path.waypoints[k + 1]);
      ++out.spot_checks;
      if (rank(evaluate_pencil(pencil.phi0, pencil.phi1, q)) != e.generic_rank) {
        constant_rank = false;
        break;
      }
    }
  }
  out.condition_b = constant_rank;
  return out;
}

EquivalenceCertificate decide_right_equivalent(const HomPoly& f, const HomPoly& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("polynomials have different variable counts");
  if (f.degree() == 0 || g.degree() == 0) throw DimensionError("right-equivalence needs degree >= 1");
  if (f == g) return identical_inputs(f);

  EquivalenceCertificate cert;
  cert.f = f;
  cert.g = g;
  cert.hypothesis = f.degree() != g.degree() ? JacobianComparison::degree_mismatch : compare_jacobians(f, g);
  if (cert.hypothesis != JacobianComparison::equal) {
    cert.verdict = Verdict::hypothesis_not_met;
    return cert;
  }

  const Pencil pencil = build_pencil(f, g);
  ExceptionalPolynomial e = exceptional_polynomial(pencil);
  PathCertificate path = construct_path(e.polynomial);
  const MatherCheck mather = mather_check(pencil, path);
  if (!mather.condition_a || !mather.condition_b) {
    throw InternalError("Mather conditions failed although J_f = J_g");
  }

  cert.verdict = Verdict::equivalent;
  cert.m = pencil.m();
  cert.generic_rank = e.generic_rank;
  cert.exceptional = std::move(e.polynomial);
  cert.path = std::move(path);
  cert.condition_a = mather.condition_a;
  cert.condition_b = mather.condition_b;
  return cert;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "equivalent";
    case Verdict::hypothesis_not_met:
      return "hypothesis-not-met";
    case Verdict::not_equivalent:
      return "not-equivalent";
  }
  return "unknown";
}

}  // namespace homequiv
