#pragma once

#include <cstddef>
#include <cstdint>

#include "homequiv/matrix.hpp"
#include "homequiv/unipoly.hpp"

namespace homequiv {

using PolyMat = Matrix<UniPoly>;

/// Phi(t) = (1 - t) * phi0 + t * phi1, entrywise of degree <= 1.
PolyMat affine_pencil(const Mat& phi0, const Mat& phi1);

/// Phi(at), exactly.
Mat evaluate_pencil(const Mat& phi0, const Mat& phi1, const Scalar& at);

enum class DivisorMethod {
  elimination,  ///< Smith-form elimination over Q(i)[t] (default)
  minors,       ///< gcd of every r x r minor, each by cofactor expansion (reference oracle)
};

/// Monic squarefree part of the r-th determinantal divisor of Phi(t), the gcd
/// of all r x r minors. Its roots are exactly the t with rank Phi(t) < r.
/// Returns 1 when that set is empty and 0 when rank Phi(t) < r for every t.
/// Throws DimensionError unless 1 <= r <= min(rows, cols).
UniPoly determinantal_divisor(const Mat& phi0, const Mat& phi1, std::size_t r,
                              DivisorMethod method = DivisorMethod::elimination);

/// The minor-enumeration route is exponential; callers cross-checking with it
/// should stay at or below this many entries.
inline constexpr std::size_t kMinorOracleMaxEntries = 36;

/// Rank of Phi(t) at a generic t: exact rank at a seeded random rational
/// point, confirmed at a second one, resampling on disagreement.
std::size_t generic_rank(const Mat& phi0, const Mat& phi1, std::uint64_t seed = 0x5eed);

}  // namespace homequiv
