#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homequiv/hompoly.hpp"
#include "homequiv/milnor.hpp"
#include "homequiv/subspace.hpp"
#include "homequiv/unipoly.hpp"

namespace homequiv {

/// The segment f_t = (1 - t) f + t g together with the coordinates of the n^2
/// orbit-tangent generators x_j * df_t/dx_i in the canonical basis e_1..e_m of
/// (J_f)_d. Row i*n + j of phi0 (phi1) holds the coordinates at t = 0 (t = 1),
/// so the coordinate matrix at t is (1 - t) phi0 + t phi1.
struct Pencil {
  HomPoly f;
  HomPoly g;
  Subspace basis;
  Mat phi0;
  Mat phi1;

  std::size_t m() const noexcept { return basis.dim(); }
};

/// Throws HypothesisError when J_f != J_g, DimensionError on shape mismatch
/// or degree 0.
Pencil build_pencil(const HomPoly& f, const HomPoly& g);

struct ExceptionalPolynomial {
  UniPoly polynomial;  ///< monic squarefree; roots are the t where the tangent rank drops
  std::size_t generic_rank = 0;
};

/// Determinantal divisor of order m of the pencil's coordinate matrix. Small
/// pencils are cross-checked against the minor-enumeration oracle.
/// Throws InternalError if any structural guarantee fails.
ExceptionalPolynomial exceptional_polynomial(const Pencil& pencil);

/// Polyline in C from 0 to 1 on which the exceptional polynomial has no zero.
struct PathCertificate {
  std::vector<Scalar> waypoints;
  /// Zeros of E on each segment; a certified path has all zeros here.
  std::vector<std::size_t> segment_root_counts;
  bool detour = false;
  /// Height of the detour's horizontal leg (0 for the direct segment).
  mpq_class height = 0;

  std::size_t segments() const noexcept { return segment_root_counts.size(); }
  bool valid() const;
};

/// Number of distinct zeros of e on the closed segment [from, to] of C: the
/// real roots in [0, 1] of gcd(Re E(from + s v), Im E(from + s v)).
std::size_t segment_root_count(const UniPoly& e, const Scalar& from, const Scalar& to);

/// Direct segment [0, 1] when root-free, otherwise the detour
/// 0 -> -delta + iH -> 1 + delta + iH -> 1 with H above the root bound.
/// Requires e nonzero with e(0) != 0 and e(1) != 0.
PathCertificate construct_path(const UniPoly& e);

struct MatherCheck {
  bool condition_a = false;  ///< path tangent (g - f) lies in the orbit tangent
  bool condition_b = false;  ///< orbit tangent dimension is constant on the path
  bool f_in_ideal = false;
  bool g_in_ideal = false;
  std::size_t spot_checks = 0;  ///< exact rank evaluations performed for condition (b)
};

inline constexpr std::size_t kSpotChecksPerSegment = 10;

/// Re-verifies the path against the pencil's own exceptional polynomial and
/// spot-checks rank Phi(q) = m at seeded rational points of every segment.
MatherCheck mather_check(const Pencil& pencil, const PathCertificate& path);

enum class Verdict { equivalent, hypothesis_not_met, not_equivalent };

struct EquivalenceCertificate {
  Verdict verdict = Verdict::hypothesis_not_met;
  JacobianComparison hypothesis = JacobianComparison::different;
  HomPoly f{0, 0};
  HomPoly g{0, 0};  ///< pencil endpoint; g o u when produced through a substitution
  std::size_t m = 0;
  std::size_t generic_rank = 0;
  UniPoly exceptional;
  std::optional<PathCertificate> path;
  bool condition_a = false;
  bool condition_b = false;
  std::optional<LinearMap> substitution;
  std::optional<HomPoly> original_g;
};

/// Full pencil pipeline. A failed hypothesis yields Verdict::hypothesis_not_met,
/// which says nothing about equivalence. f == g short-circuits to equivalent.
/// Throws DimensionError on variable-count mismatch or degree 0, and
/// InternalError if a step that cannot fail under the hypothesis fails.
EquivalenceCertificate decide_right_equivalent(const HomPoly& f, const HomPoly& g);

const char* to_string(Verdict v);

}  // namespace homequiv
