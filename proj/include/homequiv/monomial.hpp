#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace homequiv {

/// Exponent vector x_1^e_1 ... x_n^e_n. Ordered graded-lexicographically
/// with x_1 > x_2 > ... > x_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents) : Monomial(std::vector<unsigned>(exponents)) {}

  static Monomial variable(std::size_t n, std::size_t index);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t k) const { return exponents_[k]; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// dim H^k = number of monomials of degree k in n variables.
std::size_t monomial_count(std::size_t n, unsigned k);

/// Monomials of degree k in n variables in descending graded-lex order.
/// This is the canonical coordinate basis of H^k.
std::vector<Monomial> monomial_basis(std::size_t n, unsigned k);

/// Position of m in monomial_basis(m.nvars(), m.degree()).
std::size_t monomial_index(const Monomial& m);

}  // namespace homequiv
