#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "homequiv/hompoly.hpp"
#include "homequiv/matrix.hpp"
#include "homequiv/monomial.hpp"
#include "homequiv/scalar.hpp"

namespace homequiv::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Small Gaussian integer, real with probability 1/2.
inline Scalar random_scalar(Rng& rng, long bound = 4) {
  const long re = uniform(rng, -bound, bound);
  const long im = uniform(rng, 0, 1) ? uniform(rng, -bound, bound) : 0;
  return Scalar(re, im);
}

inline Scalar random_nonzero(Rng& rng, long bound = 4) {
  Scalar s;
  while (s.is_zero()) s = random_scalar(rng, bound);
  return s;
}

// Nonzero homogeneous polynomial; each monomial present with probability 1/2.
inline HomPoly random_poly(Rng& rng, std::size_t n, unsigned d) {
  for (;;) {
    HomPoly f(n, d);
    for (const auto& m : monomial_basis(n, d)) {
      if (uniform(rng, 0, 1)) f += HomPoly::monomial(m, random_scalar(rng));
    }
    if (!f.is_zero()) return f;
  }
}

inline Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 4) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, bound);
  return m;
}

inline LinearMap random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    LinearMap u(random_matrix(rng, n, n, 3));
    if (u.invertible()) return u;
  }
}

// Direct evaluation, independent of substitute_linear.
inline Scalar evaluate(const HomPoly& f, const std::vector<Scalar>& x) {
  Scalar sum;
  for (const auto& [m, c] : f.terms()) {
    Scalar term = c;
    for (std::size_t k = 0; k < x.size(); ++k) term *= pow(x[k], m[k]);
    sum += term;
  }
  return sum;
}

inline std::vector<Scalar> apply_map(const LinearMap& u, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(x.size());
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += u(r, c) * x[c];
  return y;
}

}  // namespace homequiv::testing
