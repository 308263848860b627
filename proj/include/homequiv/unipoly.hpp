#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homequiv/scalar.hpp"

namespace homequiv {

/// Univariate polynomial in t over Q(i), coefficients of t^0..t^deg.
/// Trailing zeros are never stored; the zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(const Scalar& c);                // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Scalar> coeffs);

  /// c0 + c1*t
  static UniPoly linear(const Scalar& c0, const Scalar& c1) { return UniPoly(std::vector<Scalar>{c0, c1}); }
  static UniPoly t() { return linear(Scalar(0), Scalar(1)); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  /// Leading coefficient; zero for the zero polynomial.
  Scalar leading() const { return coeffs_.empty() ? Scalar() : coeffs_.back(); }

  bool is_real() const;
  UniPoly real_part() const;
  UniPoly imag_part() const;

  Scalar evaluate(const Scalar& at) const;
  UniPoly derivative() const;
  /// Leading coefficient scaled to 1; zero stays zero.
  UniPoly monic() const;
  /// p(a + v*s) as a polynomial in s.
  UniPoly compose_affine(const Scalar& a, const Scalar& v) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "t^2+3/2*t+1/2" style text, "0" for zero.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws DivisionByZero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Monic polynomial with the same roots as p, each simple. Zero stays zero.
UniPoly squarefree_part(const UniPoly& p);

/// Number of distinct real roots of p in (a, b]. p must be nonzero with real
/// coefficients and a < b.
std::size_t sturm_count(const UniPoly& p, const mpq_class& a, const mpq_class& b);

/// B >= 0 bounding the modulus of every complex root: 1 + max |a_k / a_deg|
/// with |.| replaced by the over-estimate |re| + |im|.
mpq_class cauchy_root_bound(const UniPoly& p);

}  // namespace homequiv
