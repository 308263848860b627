#pragma once

#include <cstddef>

#include "homequiv/hompoly.hpp"
#include "homequiv/subspace.hpp"

namespace homequiv {

/// Tangent space at f to its GL(n)-orbit inside H^d: the span of the n^2
/// products x_j * df/dx_i.
struct OrbitTangent {
  HomPoly at;
  Subspace span;

  std::size_t dim() const noexcept { return span.dim(); }
};

/// Generators enter the reduction in the order i outer, j inner.
/// Throws DimensionError for d = 0.
OrbitTangent tangent_space(const HomPoly& f);

/// The n^2 products x_j * df/dx_i as coordinate rows of H^d, row i*n + j.
Mat tangent_generators(const HomPoly& f);

/// Whether the orbit tangent lies inside (J_f)_d.
bool check_inclusion(const HomPoly& f);

/// Whether the orbit tangent equals (J_f)_d (always expected to hold).
bool tangent_equals_ideal_piece(const HomPoly& f);

/// Whether f itself lies in its orbit tangent (Euler's identity).
bool euler_membership(const HomPoly& f);

}  // namespace homequiv
