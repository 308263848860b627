#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "homequiv/matrix.hpp"
#include "homequiv/monomial.hpp"
#include "homequiv/scalar.hpp"

namespace homequiv {

/// Homogeneous polynomial of degree d in n variables over Q(i).
///
/// Only nonzero coefficients are stored and every stored monomial has degree
/// exactly d. The zero polynomial still carries its (n, d) so that graded
/// operations remain well typed. Iteration order over terms() is descending
/// graded-lex, i.e. the canonical print order.
class HomPoly {
 public:
  using Terms = std::map<Monomial, Scalar, std::greater<>>;

  HomPoly(std::size_t n, unsigned d) : n_(n), d_(d) {}
  /// Throws DimensionError if a monomial has the wrong arity or degree.
  HomPoly(std::size_t n, unsigned d, const Terms& terms);

  static HomPoly monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static HomPoly variable(std::size_t n, std::size_t index);
  static HomPoly constant(std::size_t n, const Scalar& c);
  /// Inverse of coordinates().
  static HomPoly from_coordinates(std::size_t n, unsigned d, std::span<const Scalar> coords);

  std::size_t nvars() const noexcept { return n_; }
  unsigned degree() const noexcept { return d_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Coefficient vector in the canonical basis monomial_basis(n, d).
  std::vector<Scalar> coordinates() const;

  HomPoly operator-() const;
  HomPoly& operator+=(const HomPoly& rhs);
  HomPoly& operator-=(const HomPoly& rhs);
  HomPoly& operator*=(const Scalar& c);

  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(HomPoly a, const Scalar& c) { return a *= c; }
  friend HomPoly operator*(const Scalar& c, HomPoly a) { return a *= c; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);

  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const Scalar& c);
  void require_same_space(const HomPoly& other) const;

  std::size_t n_;
  unsigned d_;
  Terms terms_;
};

/// Square matrix acting on variables by x_i -> sum_j entries(i, j) x_j.
/// A singular matrix is representable; invertible() reports the flag.
class LinearMap {
 public:
  explicit LinearMap(Mat entries);

  static LinearMap identity(std::size_t n) { return LinearMap(Mat::identity(n)); }

  std::size_t dim() const noexcept { return entries_.rows(); }
  const Mat& entries() const noexcept { return entries_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  bool invertible() const noexcept { return invertible_; }

  /// Throws SingularMatrixError when not invertible.
  LinearMap inverse() const;

  /// Matrix product. substitute_linear(substitute_linear(f, u), v) == substitute_linear(f, u * v).
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.entries_ * b.entries_); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.entries_ == b.entries_; }

 private:
  Mat entries_;
  bool invertible_;
};

/// Partial derivative with respect to the variable at 0-based `index`.
HomPoly derivative(const HomPoly& f, std::size_t index);

/// All n partials, in variable order.
std::vector<HomPoly> gradient(const HomPoly& f);

/// f o u: every x_i replaced by sum_j u(i, j) x_j and expanded exactly.
HomPoly substitute_linear(const HomPoly& f, const LinearMap& u);

/// Whether d*f == sum_i x_i * df/dx_i holds exactly.
bool euler_check(const HomPoly& f);

}  // namespace homequiv
