#pragma once

#include <iosfwd>

#include "homequiv/hompoly.hpp"
#include "homequiv/pencil.hpp"

namespace homequiv {

/// Degree-one part of a candidate graded isomorphism M(g) -> M(f): x_i is sent
/// to row i of the matrix applied to the variables.
class IsoCandidate {
 public:
  /// Throws SingularMatrixError if the map is not invertible.
  explicit IsoCandidate(LinearMap u);

  const LinearMap& map() const noexcept { return u_; }

 private:
  LinearMap u_;
};

/// Whether u*(J_g) = J_f, i.e. span{(dg/dx_j) o u} = span{df/dx_i} in H^{d-1}.
/// Requires equal n and d with d >= 3 (lower degrees go through
/// special_low_degree); throws DimensionError otherwise.
bool verify_iso(const HomPoly& f, const HomPoly& g, const IsoCandidate& cand);

/// Runs the pencil between f and g o u once the candidate is verified. The
/// certificate records u and the original g. Throws IsoVerificationError if
/// verify_iso fails and InternalError if J_{g o u} != J_f afterwards.
EquivalenceCertificate conclude_equivalence(const HomPoly& f, const HomPoly& g, const IsoCandidate& cand);

/// Right-equivalence for d = 1 (nonzero linear forms are all equivalent) and
/// d = 2 (rank of the symmetric coefficient matrix is a complete invariant
/// over C). Returns equivalent or not_equivalent.
Verdict special_low_degree(const HomPoly& f, const HomPoly& g);

/// Symmetric matrix A with f(x) = x^T A x for a quadratic form f.
Mat quadratic_form_matrix(const HomPoly& f);

/// Whether J_{f o u} = u*(J_f): span{d(f o u)/dx_i} equals span{(df/dx_j) o u}.
/// Throws SingularMatrixError for singular u.
bool pullback_check(const HomPoly& f, const LinearMap& u);

/// Reads "n" followed by n rows of n exact entries (whitespace separated,
/// '#' starts a comment). Throws ParseError on malformed input; the matrix
/// may still be singular.
LinearMap read_linear_map(std::istream& is);

}  // namespace homequiv
