#include "homequiv/unipoly.hpp"

#include <algorithm>

#include "homequiv/errors.hpp"
#include "homequiv/text.hpp"

namespace homequiv {

UniPoly::UniPoly(const Scalar& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UniPoly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_real(); });
}

UniPoly UniPoly::real_part() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.re());
  return UniPoly(std::move(out));
}

UniPoly UniPoly::imag_part() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.im());
  return UniPoly(std::move(out));
}

Scalar UniPoly::evaluate(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  const Scalar inv = leading().inverse();
  UniPoly p = *this;
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

UniPoly UniPoly::compose_affine(const Scalar& a, const Scalar& v) const {
  // Horner in the ring: acc = acc * (a + v s) + c_k.
  const UniPoly step = linear(a, v);
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step;
    acc += UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string mono;
    if (k == 1) {
      mono = var;
    } else if (k > 1) {
      mono = var + '^' + std::to_string(k);
    }
    append_term(out, coeffs_[k], mono);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Scalar lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar factor = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return UniPoly(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace {

int sign_at(const UniPoly& p, const mpq_class& x) { return sgn(p.evaluate(Scalar(x)).re()); }

std::size_t sign_variations(const std::vector<UniPoly>& chain, const mpq_class& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_count(const UniPoly& p, const mpq_class& a, const mpq_class& b) {
  if (p.is_zero()) throw DimensionError("sturm_count of the zero polynomial");
  if (!p.is_real()) throw DimensionError("sturm_count requires real coefficients");
  if (!(a < b)) throw DimensionError("sturm_count requires a < b");

  UniPoly q = squarefree_part(p);
  std::size_t count = 0;
  // Deflate rational endpoint roots so the chain is evaluated at non-roots.
  if (q.evaluate(Scalar(b)).is_zero()) {
    ++count;
    q = divmod(q, UniPoly::linear(Scalar(-b), Scalar(1))).first;
  }
  if (q.evaluate(Scalar(a)).is_zero()) q = divmod(q, UniPoly::linear(Scalar(-a), Scalar(1))).first;
  if (q.degree() <= 0) return count;

  std::vector<UniPoly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return count + sign_variations(chain, a) - sign_variations(chain, b);
}

mpq_class cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero()) throw DimensionError("root bound of the zero polynomial");
  const Scalar inv = p.leading().inverse();
  mpq_class worst = 0;
  for (int k = 0; k < p.degree(); ++k) {
    const mpq_class mag = (p.coefficient(static_cast<std::size_t>(k)) * inv).magnitude_bound();
    if (mag > worst) worst = mag;
  }
  return worst + 1;
}

}  // namespace homequiv
