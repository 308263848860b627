#include "homequiv/witness.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "homequiv/errors.hpp"
#include "homequiv/orbit.hpp"

namespace homequiv {

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

constexpr double kRankGap = 1e-12;

Complex to_complex(const Scalar& s) { return {s.real_double(), s.imag_double()}; }

CMatrix to_eigen(const FloatMatrix& m) {
  CMatrix out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

FloatMatrix from_eigen(const CMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<Complex> entries(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = m(r, c);
  return {n, std::move(entries)};
}

CMatrix to_eigen(const Mat& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = to_complex(m(r, c));
  return out;
}

// Polynomial with double-precision complex coefficients, any degree.
using FloatPoly = std::map<Monomial, Complex>;

FloatPoly multiply(const FloatPoly& a, const FloatPoly& b) {
  FloatPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out[ma * mb] += ca * cb;
  return out;
}

FloatPoly substitute(const HomPoly& g, const FloatMatrix& u) {
  const std::size_t n = g.nvars();
  std::vector<FloatPoly> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i][Monomial::variable(n, j)] += u(i, j);

  std::vector<std::vector<FloatPoly>> powers(n, std::vector<FloatPoly>{FloatPoly{{Monomial(n), Complex(1)}}});
  auto power = [&](std::size_t i, unsigned e) -> const FloatPoly& {
    while (powers[i].size() <= e) powers[i].push_back(multiply(powers[i].back(), images[i]));
    return powers[i][e];
  };

  FloatPoly out;
  for (const auto& [m, c] : g.terms()) {
    FloatPoly term{{Monomial(n), to_complex(c)}};
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) term = multiply(term, power(i, m[i]));
    }
    for (const auto& [mm, cc] : term) out[mm] += cc;
  }
  return out;
}

// Solves the orbit-tangent system at parameter t for the velocity field C.
class TangentSolver {
 public:
  TangentSolver(const HomPoly& f, const HomPoly& g, std::size_t rank)
      : n_(f.nvars()),
        rank_(rank),
        start_(to_eigen(tangent_generators(f)).transpose()),
        end_(to_eigen(tangent_generators(g)).transpose()),
        difference_(to_eigen_vector(g.coordinates(), f.coordinates())) {}

  // Minimal-norm C with sum_ij C_ij x_j d_i f_t = -(dt/ds) (g - f).
  CMatrix velocity(Complex t, Complex dt) const {
    const CMatrix a = (1.0 - t) * start_ + t * end_;
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    if (rank_ == 0 || sigma(0) == 0.0) return CMatrix::Zero(n_, n_);
    const auto r = static_cast<Eigen::Index>(rank_);
    if (sigma(r - 1) < kRankGap * sigma(0)) {
      throw WitnessError("ill-conditioned tangent solve at t = (" + std::to_string(t.real()) + "," +
                             std::to_string(t.imag()) + "), sigma ratio " +
                             std::to_string(sigma(r - 1) / sigma(0)),
                         std::numeric_limits<double>::infinity());
    }
    const CVector rhs = -dt * difference_;
    const CVector projected = svd.matrixU().leftCols(r).adjoint() * rhs;
    const CVector scaled = projected.cwiseQuotient(sigma.head(r).cast<Complex>());
    const CVector c = svd.matrixV().leftCols(r) * scaled;
    CMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = c(static_cast<Eigen::Index>(i * n_ + j));
    return out;
  }

 private:
  static CVector to_eigen_vector(const std::vector<Scalar>& g, const std::vector<Scalar>& f) {
    CVector v(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) v(static_cast<Eigen::Index>(k)) = to_complex(g[k] - f[k]);
    return v;
  }

  std::size_t n_;
  std::size_t rank_;
  CMatrix start_;
  CMatrix end_;
  CVector difference_;
};

void check_certificate(const HomPoly& f, const HomPoly& g, const EquivalenceCertificate& cert) {
  if (cert.verdict != Verdict::equivalent || !cert.path || !cert.path->valid()) {
    throw DimensionError("witness integration needs an equivalent verdict with a certified path");
  }
  if (!(cert.f == f) || !(cert.g == g)) throw DimensionError("certificate was issued for different polynomials");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_matrix(std::ostream& os, const FloatMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << ' ';
    for (std::size_t c = 0; c < m.dim(); ++c) {
      os << " (" << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag()) << ')';
    }
    os << '\n';
  }
}

double parse_double(const std::string& text, std::size_t at) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError(at, "expected a number, got '" + text + "'");
  }
  if (used != text.size()) throw ParseError(at, "trailing characters in number '" + text + "'");
  return v;
}

Complex parse_complex(const std::string& tok, std::size_t at) {
  if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') throw ParseError(at, "expected (re,im)");
  const std::size_t comma = tok.find(',');
  if (comma == std::string::npos) throw ParseError(at, "expected (re,im)");
  return {parse_double(tok.substr(1, comma - 1), at), parse_double(tok.substr(comma + 1, tok.size() - comma - 2), at)};
}

}  // namespace

FloatMatrix::FloatMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw DimensionError("matrix data does not match its shape");
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) throw DimensionError("non-finite matrix entry");
  }
  if (n_ == 0) return;
  Eigen::JacobiSVD<CMatrix> svd(to_eigen(*this));
  const auto& sigma = svd.singularValues();
  const double smallest = sigma(sigma.size() - 1);
  condition_ = smallest == 0.0 ? std::numeric_limits<double>::infinity() : sigma(0) / smallest;
}

FloatMatrix FloatMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t k = 0; k < n; ++k) e[k * n + k] = 1.0;
  return {n, std::move(e)};
}

FloatMatrix FloatMatrix::from_exact(const LinearMap& u) {
  const std::size_t n = u.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e[r * n + c] = to_complex(u(r, c));
  return {n, std::move(e)};
}

FloatMatrix FloatMatrix::inverse() const {
  if (!std::isfinite(condition_) || condition_ > 1e15) throw SingularMatrixError("matrix is numerically singular");
  return from_eigen(to_eigen(*this).inverse());
}

double verify_witness(const HomPoly& f, const HomPoly& g, const FloatMatrix& u) {
  if (f.nvars() != g.nvars() || u.dim() != f.nvars()) throw DimensionError("dimensions do not match");
  if (f.degree() != g.degree()) throw DimensionError("degrees differ");
  FloatPoly diff = substitute(g, u);
  for (const auto& [m, c] : f.terms()) diff[m] -= to_complex(c);
  double worst = 0;
  for (const auto& [m, c] : diff) worst = std::max(worst, std::abs(c));
  return worst;
}

WitnessResult integrate_witness(const HomPoly& f, const HomPoly& g, const EquivalenceCertificate& cert,
                                std::size_t steps_per_segment) {
  check_certificate(f, g, cert);
  const std::size_t n = f.nvars();
  if (f == g) return {FloatMatrix::identity(n), verify_witness(f, g, FloatMatrix::identity(n)), 0};
  if (steps_per_segment == 0) throw DimensionError("at least one step per segment");

  const TangentSolver solver(f, g, cert.generic_rank);
  CMatrix m = CMatrix::Identity(n, n);
  const auto& points = cert.path->waypoints;
  const double h = 1.0 / static_cast<double>(steps_per_segment);
  std::size_t steps = 0;

  for (std::size_t seg = 0; seg + 1 < points.size(); ++seg) {
    const Complex from = to_complex(points[seg]);
    const Complex dt = to_complex(points[seg + 1]) - from;
    auto at = [&](double s) { return solver.velocity(from + s * dt, dt); };
    CMatrix c_start = at(0.0);
    for (std::size_t k = 0; k < steps_per_segment; ++k) {
      const double s = static_cast<double>(k) * h;
      const CMatrix c_mid = at(s + 0.5 * h);
      const CMatrix c_end = at(s + h);
      const CMatrix k1 = c_start * m;
      const CMatrix k2 = c_mid * (m + 0.5 * h * k1);
      const CMatrix k3 = c_mid * (m + 0.5 * h * k2);
      const CMatrix k4 = c_end * (m + h * k3);
      m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      c_start = c_end;
      ++steps;
    }
  }
  FloatMatrix u = from_eigen(m);
  const double residual = verify_witness(f, g, u);
  return {std::move(u), residual, steps};
}

WitnessResult find_witness(const HomPoly& f, const HomPoly& g, const EquivalenceCertificate& cert, double tol,
                           std::size_t max_steps) {
  if (!(tol > 0)) throw DimensionError("tolerance must be positive");
  check_certificate(f, g, cert);
  if (f == g) return integrate_witness(f, g, cert, 0);

  const std::size_t segments = cert.path->segments();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t per_segment = 8; per_segment * segments <= max_steps; per_segment *= 2) {
    WitnessResult w = integrate_witness(f, g, cert, per_segment);
    if (w.residual <= tol) return w;
    best = std::min(best, w.residual);
  }
  throw WitnessError("tolerance not reached within " + std::to_string(max_steps) + " steps (best residual " +
                         format_double(best) + ")",
                     best);
}

void write_witness(std::ostream& os, const WitnessResult& w) {
  os << "format: homequiv-witness 1\n";
  os << "n: " << w.u.dim() << '\n';
  os << "residual: " << format_double(w.residual) << '\n';
  os << "steps: " << w.steps << '\n';
  os << "u:\n";
  write_matrix(os, w.u);
  os << "u_inverse:\n";
  write_matrix(os, w.u.inverse());
}

LoadedWitness read_witness(std::istream& is) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(is, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  auto expect_key = [&](std::size_t k, const std::string& key) -> std::string {
    if (k >= lines.size() || lines[k].rfind(key + ":", 0) != 0) throw ParseError(k, "expected '" + key + ":'");
    std::string v = lines[k].substr(key.size() + 1);
    if (!v.empty() && v.front() == ' ') v.erase(0, 1);
    return v;
  };
  if (expect_key(0, "format") != "homequiv-witness 1") throw ParseError(0, "unsupported witness format");
  const std::string n_text = expect_key(1, "n");
  if (n_text.empty() || n_text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(1, "expected the dimension n");
  }
  const std::size_t n = std::stoul(n_text);
  LoadedWitness out;
  out.residual = parse_double(expect_key(2, "residual"), 2);
  expect_key(3, "steps");
  expect_key(4, "u");
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < n; ++r) {
    if (5 + r >= lines.size()) throw ParseError(5 + r, "missing matrix row");
    std::istringstream in(lines[5 + r]);
    std::size_t count = 0;
    for (std::string tok; in >> tok; ++count) entries.push_back(parse_complex(tok, 5 + r));
    if (count != n) throw ParseError(5 + r, "row has the wrong number of entries");
  }
  out.u = FloatMatrix(n, std::move(entries));
  return out;
}

}  // namespace homequiv
