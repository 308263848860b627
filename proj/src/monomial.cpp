#include "homequiv/monomial.hpp"

#include <numeric>

#include "homequiv/errors.hpp"

namespace homequiv {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

Monomial Monomial::variable(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("variable index out of range");
  Monomial m(n);
  m.exponents_[index] = 1;
  m.degree_ = 1;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("monomials over different variable counts");
  Monomial p = a;
  for (std::size_t k = 0; k < b.nvars(); ++k) p.exponents_[k] += b.exponents_[k];
  p.degree_ += b.degree_;
  return p;
}

std::size_t monomial_count(std::size_t n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  // C(k + n - 1, n - 1), computed incrementally to stay exact.
  std::size_t result = 1;
  for (std::size_t j = 1; j < n; ++j) result = result * (k + j) / j;
  return result;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& current, std::vector<Monomial>& out) {
  const std::size_t n = current.size();
  if (var + 1 == n) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (k == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  out.reserve(monomial_count(n, k));
  std::vector<unsigned> current(n, 0);
  enumerate(0, k, current, out);
  return out;
}

std::size_t monomial_index(const Monomial& m) {
  const std::size_t n = m.nvars();
  unsigned remaining = m.degree();
  std::size_t index = 0;
  for (std::size_t var = 0; var + 1 < n; ++var) {
    // Every monomial with a larger exponent at this position comes first.
    for (unsigned e = remaining; e > m[var]; --e) index += monomial_count(n - var - 1, remaining - e);
    remaining -= m[var];
  }
  return index;
}

}  // namespace homequiv
