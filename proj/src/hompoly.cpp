#include "homequiv/hompoly.hpp"

#include "homequiv/errors.hpp"

namespace homequiv {

HomPoly::HomPoly(std::size_t n, unsigned d, const Terms& terms) : n_(n), d_(d) {
  for (const auto& [m, c] : terms) {
    if (m.nvars() != n_) throw DimensionError("monomial has the wrong number of variables");
    if (m.degree() != d_) throw DimensionError("monomial degree differs from the polynomial degree");
    if (!c.is_zero()) terms_.emplace(m, c);
  }
}

HomPoly HomPoly::monomial(const Monomial& m, const Scalar& c) {
  HomPoly p(m.nvars(), m.degree());
  p.add_term(m, c);
  return p;
}

HomPoly HomPoly::variable(std::size_t n, std::size_t index) { return monomial(Monomial::variable(n, index)); }

HomPoly HomPoly::constant(std::size_t n, const Scalar& c) { return monomial(Monomial(n), c); }

HomPoly HomPoly::from_coordinates(std::size_t n, unsigned d, std::span<const Scalar> coords) {
  const std::vector<Monomial> basis = monomial_basis(n, d);
  if (coords.size() != basis.size()) throw DimensionError("coordinate vector length does not match dim H^d");
  HomPoly p(n, d);
  for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k], coords[k]);
  return p;
}

Scalar HomPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::vector<Scalar> HomPoly::coordinates() const {
  std::vector<Scalar> coords(monomial_count(n_, d_));
  for (const auto& [m, c] : terms_) coords[monomial_index(m)] = c;
  return coords;
}

void HomPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HomPoly::require_same_space(const HomPoly& other) const {
  if (n_ != other.n_ || d_ != other.d_) throw DimensionError("polynomials live in different spaces H^d");
}

HomPoly HomPoly::operator-() const {
  HomPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

HomPoly& HomPoly::operator+=(const HomPoly& rhs) {
  require_same_space(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& rhs) {
  require_same_space(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

HomPoly& HomPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.n_ != b.n_) throw DimensionError("product of polynomials in different variable counts");
  HomPoly p(a.n_, a.d_ + b.d_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

LinearMap::LinearMap(Mat entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("linear map must be square");
  invertible_ = rank(entries_) == entries_.rows();
}

LinearMap LinearMap::inverse() const {
  if (!invertible_) throw SingularMatrixError("linear map is singular");
  return LinearMap(homequiv::inverse(entries_));
}

HomPoly derivative(const HomPoly& f, std::size_t index) {
  if (index >= f.nvars()) throw DimensionError("derivative variable index out of range");
  if (f.degree() == 0) throw DimensionError("derivative of a degree-0 polynomial");
  HomPoly::Terms out;
  for (const auto& [m, c] : f.terms()) {
    if (m[index] == 0) continue;
    std::vector<unsigned> e = m.exponents();
    const long power = e[index];
    --e[index];
    out.emplace(Monomial(std::move(e)), c * Scalar(power));
  }
  return HomPoly(f.nvars(), f.degree() - 1, out);
}

std::vector<HomPoly> gradient(const HomPoly& f) {
  std::vector<HomPoly> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(derivative(f, i));
  return out;
}

HomPoly substitute_linear(const HomPoly& f, const LinearMap& u) {
  const std::size_t n = f.nvars();
  if (u.dim() != n) throw DimensionError("linear map dimension does not match the variable count");

  std::vector<HomPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    HomPoly li(n, 1);
    for (std::size_t j = 0; j < n; ++j) li += HomPoly::variable(n, j) * u(i, j);
    images.push_back(std::move(li));
  }
  // powers[i][e] = L_i^e, filled lazily up to the largest exponent needed.
  std::vector<std::vector<HomPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(HomPoly::constant(n, Scalar(1)));
  auto power = [&](std::size_t i, unsigned e) -> const HomPoly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][e];
  };

  HomPoly result(n, f.degree());
  for (const auto& [m, c] : f.terms()) {
    HomPoly term = HomPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) term = term * power(i, m[i]);
    }
    result += term;
  }
  return result;
}

bool euler_check(const HomPoly& f) {
  if (f.degree() == 0) return true;
  HomPoly sum(f.nvars(), f.degree());
  for (std::size_t i = 0; i < f.nvars(); ++i) sum += HomPoly::variable(f.nvars(), i) * derivative(f, i);
  return sum == f * Scalar(static_cast<long>(f.degree()));
}

}  // namespace homequiv
