#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "homequiv/hompoly.hpp"
#include "homequiv/pencil.hpp"

namespace homequiv {

using Complex = std::complex<double>;

/// n x n complex matrix in double precision with a 2-norm condition estimate.
class FloatMatrix {
 public:
  FloatMatrix() = default;
  FloatMatrix(std::size_t n, std::vector<Complex> entries);

  static FloatMatrix identity(std::size_t n);
  static FloatMatrix from_exact(const LinearMap& u);

  std::size_t dim() const noexcept { return n_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }
  /// sigma_max / sigma_min; infinity when singular.
  double condition() const noexcept { return condition_; }

  /// Throws SingularMatrixError when numerically singular.
  FloatMatrix inverse() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
  double condition_ = 1.0;
};

struct WitnessResult {
  FloatMatrix u;         ///< g o u ~ f
  double residual = 0;   ///< max coefficient modulus of g o u - f
  std::size_t steps = 0; ///< RK4 steps over the whole path
};

/// Integrates dM/ds = C(s) M along the certified path, where C(s) is the
/// minimal-norm solution of sum_ij C_ij x_j d_i f_t = -(dt/ds)(g - f), using
/// classical RK4 with `steps_per_segment` equal steps on every segment.
/// Throws WitnessError when a tangent solve is ill-conditioned.
WitnessResult integrate_witness(const HomPoly& f, const HomPoly& g, const EquivalenceCertificate& cert,
                                std::size_t steps_per_segment);

/// Doubles the step count until the residual is <= tol. Throws WitnessError
/// with the best residual if max_steps total steps would be exceeded.
WitnessResult find_witness(const HomPoly& f, const HomPoly& g, const EquivalenceCertificate& cert, double tol,
                           std::size_t max_steps);

/// max |coeff(g o u - f)| by floating-point substitution.
double verify_witness(const HomPoly& f, const HomPoly& g, const FloatMatrix& u);

/// Text block: format line, n, residual, steps, then the rows of u and of
/// u^{-1}, each entry "(re,im)" with 17 significant digits.
void write_witness(std::ostream& os, const WitnessResult& w);

struct LoadedWitness {
  FloatMatrix u;
  double residual = 0;
};

/// Reads a block produced by write_witness. Throws ParseError.
LoadedWitness read_witness(std::istream& is);

}  // namespace homequiv
