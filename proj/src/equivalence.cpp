#include "homequiv/equivalence.hpp"

#include <istream>
#include <sstream>

#include "homequiv/errors.hpp"
#include "homequiv/milnor.hpp"
#include "homequiv/subspace.hpp"
#include "homequiv/text.hpp"

namespace homequiv {

namespace {

Subspace span_in(std::size_t n, unsigned degree, const std::vector<HomPoly>& polys) {
  Mat rows(polys.size(), monomial_count(n, degree));
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [m, c] : polys[r].terms()) rows(r, monomial_index(m)) = c;
  }
  return Subspace::span(rows);
}

// span{(dg/dx_j) o u : j}
Subspace pulled_back_jacobian(const HomPoly& g, const LinearMap& u) {
  std::vector<HomPoly> images;
  for (const auto& partial : gradient(g)) images.push_back(substitute_linear(partial, u));
  return span_in(g.nvars(), g.degree() - 1, images);
}

}  // namespace

IsoCandidate::IsoCandidate(LinearMap u) : u_(std::move(u)) {
  if (!u_.invertible()) throw SingularMatrixError("candidate substitution is singular");
}

bool verify_iso(const HomPoly& f, const HomPoly& g, const IsoCandidate& cand) {
  if (f.nvars() != g.nvars() || cand.map().dim() != f.nvars()) throw DimensionError("variable counts differ");
  if (f.degree() != g.degree()) throw DimensionError("degrees differ");
  if (f.degree() < 3) throw DimensionError("degrees 1 and 2 are decided by special_low_degree");
  return pulled_back_jacobian(g, cand.map()) == jacobian(f).gen_span;
}

EquivalenceCertificate conclude_equivalence(const HomPoly& f, const HomPoly& g, const IsoCandidate& cand) {
  if (!verify_iso(f, g, cand)) throw IsoVerificationError("substitution does not carry J_g onto J_f");
  const HomPoly moved = substitute_linear(g, cand.map());
  if (!jacobian_equal(f, moved)) throw InternalError("J_{g o u} differs from u*(J_g)");
  EquivalenceCertificate cert = decide_right_equivalent(f, moved);
  if (cert.verdict != Verdict::equivalent) throw InternalError("pencil rejected f and g o u");
  cert.substitution = cand.map();
  cert.original_g = g;
  return cert;
}

Mat quadratic_form_matrix(const HomPoly& f) {
  if (f.degree() != 2) throw DimensionError("quadratic form expected");
  const std::size_t n = f.nvars();
  Mat a(n, n);
  const Scalar half = Scalar::fraction(1, 2);
  for (const auto& [m, c] : f.terms()) {
    std::size_t first = n;
    std::size_t second = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k] == 2) first = second = k;
      if (m[k] == 1) (first == n ? first : second) = k;
    }
    if (first == second) {
      a(first, first) = c;
    } else {
      a(first, second) = c * half;
      a(second, first) = c * half;
    }
  }
  return a;
}

Verdict special_low_degree(const HomPoly& f, const HomPoly& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("variable counts differ");
  if (f.degree() != g.degree()) throw DimensionError("degrees differ");
  switch (f.degree()) {
    case 1:
      return f.is_zero() == g.is_zero() ? Verdict::equivalent : Verdict::not_equivalent;
    case 2:
      return rank(quadratic_form_matrix(f)) == rank(quadratic_form_matrix(g)) ? Verdict::equivalent
                                                                               : Verdict::not_equivalent;
    default:
      throw DimensionError("special_low_degree handles degrees 1 and 2 only");
  }
}

bool pullback_check(const HomPoly& f, const LinearMap& u) {
  if (!u.invertible()) throw SingularMatrixError("substitution is singular");
  if (u.dim() != f.nvars()) throw DimensionError("variable counts differ");
  if (f.degree() == 0) throw DimensionError("Jacobian ideal needs degree >= 1");
  return jacobian(substitute_linear(f, u)).gen_span == pulled_back_jacobian(f, u);
}

LinearMap read_linear_map(std::istream& is) {
  std::vector<std::string> tokens;
  for (std::string line; std::getline(is, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    for (std::string tok; in >> tok;) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError(0, "empty matrix file");
  const std::string& head = tokens.front();
  if (head.find_first_not_of("0123456789") != std::string::npos) throw ParseError(0, "expected the dimension n first");
  const std::size_t n = std::stoul(head);
  if (n == 0) throw ParseError(0, "dimension must be positive");
  if (tokens.size() != 1 + n * n) {
    throw ParseError(0, "expected " + std::to_string(n * n) + " entries, found " + std::to_string(tokens.size() - 1));
  }
  Mat m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = parse_scalar(tokens[1 + k]);
  return LinearMap(std::move(m));
}

}  // namespace homequiv
