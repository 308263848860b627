#include "homequiv/milnor.hpp"

#include <numeric>

#include "homequiv/errors.hpp"

namespace homequiv {

namespace {

Subspace span_of(std::size_t n, unsigned degree, const std::vector<HomPoly>& polys) {
  const std::size_t ambient = monomial_count(n, degree);
  Mat rows(polys.size(), ambient);
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [m, c] : polys[r].terms()) rows(r, monomial_index(m)) = c;
  }
  return Subspace::span(rows);
}

bool ideal_is_zero(const HomPoly& f) { return f.is_zero() || f.degree() == 0; }

}  // namespace

JacobianIdeal jacobian(const HomPoly& f) {
  if (f.degree() == 0) throw DimensionError("Jacobian ideal needs degree >= 1");
  std::vector<HomPoly> partials = gradient(f);
  Subspace span = span_of(f.nvars(), f.degree() - 1, partials);
  return JacobianIdeal{f, std::move(partials), std::move(span)};
}

Subspace ideal_piece(const JacobianIdeal& ideal, unsigned k) {
  const std::size_t n = ideal.source.nvars();
  const unsigned gen_degree = ideal.source.degree() - 1;
  if (k < gen_degree) return Subspace(monomial_count(n, k));
  if (k == gen_degree) return ideal.gen_span;

  std::vector<HomPoly> products;
  for (const auto& m : monomial_basis(n, k - gen_degree)) {
    const HomPoly shift = HomPoly::monomial(m);
    for (const auto& g : ideal.generators) products.push_back(shift * g);
  }
  return span_of(n, k, products);
}

std::size_t hilbert_function(const HomPoly& f, unsigned k) {
  const std::size_t whole = monomial_count(f.nvars(), k);
  if (ideal_is_zero(f)) return whole;
  return whole - ideal_piece(jacobian(f), k).dim();
}

std::vector<std::size_t> hilbert_series(const HomPoly& f, unsigned max_degree) {
  std::vector<std::size_t> out;
  out.reserve(max_degree + 1);
  if (ideal_is_zero(f)) {
    for (unsigned k = 0; k <= max_degree; ++k) out.push_back(monomial_count(f.nvars(), k));
    return out;
  }
  const JacobianIdeal ideal = jacobian(f);
  for (unsigned k = 0; k <= max_degree; ++k) out.push_back(monomial_count(f.nvars(), k) - ideal_piece(ideal, k).dim());
  return out;
}

MilnorSummary milnor_summary(const HomPoly& f) {
  if (f.degree() == 0) throw DimensionError("Milnor algebra needs degree >= 1");
  MilnorSummary s;
  const std::size_t n = f.nvars();
  const unsigned d = f.degree();

  if (d == 1) {
    s.degenerate_linear = !f.is_zero();
    s.hilbert = hilbert_series(f, 1);
    s.artinian = s.hilbert.back() == 0;
    if (s.artinian) s.milnor_number = 0;
    return s;
  }

  // An Artinian quotient by n forms of degree d-1 is a complete intersection
  // whose socle sits in degree n(d-2); one degree beyond decides finiteness.
  const auto top = static_cast<unsigned>(n * (d - 2));
  s.hilbert = hilbert_series(f, top + 1);
  s.artinian = s.hilbert.back() == 0;
  if (s.artinian) {
    s.milnor_number = std::accumulate(s.hilbert.begin(), s.hilbert.end() - 1, std::uint64_t{0});
  }
  return s;
}

JacobianComparison compare_jacobians(const HomPoly& f, const HomPoly& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("polynomials have different variable counts");
  const bool f_zero = ideal_is_zero(f);
  const bool g_zero = ideal_is_zero(g);
  if (f_zero || g_zero) return f_zero && g_zero ? JacobianComparison::equal : JacobianComparison::different;
  if (f.degree() != g.degree()) return JacobianComparison::degree_mismatch;
  return jacobian(f).gen_span == jacobian(g).gen_span ? JacobianComparison::equal : JacobianComparison::different;
}

}  // namespace homequiv
