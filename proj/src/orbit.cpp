#include "homequiv/orbit.hpp"

#include "homequiv/errors.hpp"
#include "homequiv/milnor.hpp"

namespace homequiv {

Mat tangent_generators(const HomPoly& f) {
  if (f.degree() == 0) throw DimensionError("orbit tangent needs degree >= 1");
  const std::size_t n = f.nvars();
  Mat rows(n * n, monomial_count(n, f.degree()));
  for (std::size_t i = 0; i < n; ++i) {
    const HomPoly partial = derivative(f, i);
    for (std::size_t j = 0; j < n; ++j) {
      const HomPoly product = HomPoly::variable(n, j) * partial;
      for (const auto& [m, c] : product.terms()) rows(i * n + j, monomial_index(m)) = c;
    }
  }
  return rows;
}

OrbitTangent tangent_space(const HomPoly& f) { return OrbitTangent{f, Subspace::span(tangent_generators(f))}; }

bool check_inclusion(const HomPoly& f) {
  return ideal_piece(jacobian(f), f.degree()).contains(tangent_space(f).span);
}

bool tangent_equals_ideal_piece(const HomPoly& f) {
  return ideal_piece(jacobian(f), f.degree()) == tangent_space(f).span;
}

bool euler_membership(const HomPoly& f) { return tangent_space(f).span.contains(f.coordinates()); }

}  // namespace homequiv
