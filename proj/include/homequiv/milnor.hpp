#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "homequiv/hompoly.hpp"
#include "homequiv/subspace.hpp"

namespace homequiv {

/// Jacobian ideal of a homogeneous f, generated by its n partials in degree d-1.
struct JacobianIdeal {
  HomPoly source;
  std::vector<HomPoly> generators;
  Subspace gen_span;  ///< span of the partials inside H^{d-1}
};

/// Throws DimensionError for d = 0.
JacobianIdeal jacobian(const HomPoly& f);

/// Degree-k piece of the ideal inside H^k: span of m * df/dx_i over monomials
/// m of degree k - (d - 1). The zero subspace when k < d - 1.
Subspace ideal_piece(const JacobianIdeal& ideal, unsigned k);

/// dim M(f)_k = dim H^k - dim (J_f)_k.
std::size_t hilbert_function(const HomPoly& f, unsigned k);

struct MilnorSummary {
  /// dim M(f)_k for k = 0 .. n(d-2)+1 (k = 0 .. 1 when d = 1).
  std::vector<std::size_t> hilbert;
  bool artinian = false;
  /// Total dimension; nullopt means infinite (non-isolated singularity).
  std::optional<std::uint64_t> milnor_number;
  /// d = 1: the ideal contains 1 (for f != 0) and M(f) vanishes.
  bool degenerate_linear = false;
};

/// Throws DimensionError for d = 0.
MilnorSummary milnor_summary(const HomPoly& f);

/// Hilbert function on k = 0 .. max_degree.
std::vector<std::size_t> hilbert_series(const HomPoly& f, unsigned max_degree);

enum class JacobianComparison { equal, different, degree_mismatch };

/// Compares J_f and J_g through their generating pieces in degree d-1.
/// Throws DimensionError when the variable counts differ.
JacobianComparison compare_jacobians(const HomPoly& f, const HomPoly& g);

inline bool jacobian_equal(const HomPoly& f, const HomPoly& g) {
  return compare_jacobians(f, g) == JacobianComparison::equal;
}

}  // namespace homequiv
