#include "homequiv/divisor.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace homequiv {

PolyMat affine_pencil(const Mat& phi0, const Mat& phi1) {
  if (phi0.rows() != phi1.rows() || phi0.cols() != phi1.cols()) throw DimensionError("pencil endpoints differ in shape");
  PolyMat m(phi0.rows(), phi0.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = UniPoly::linear(phi0(r, c), phi1(r, c) - phi0(r, c));
  return m;
}

Mat evaluate_pencil(const Mat& phi0, const Mat& phi1, const Scalar& at) {
  if (phi0.rows() != phi1.rows() || phi0.cols() != phi1.cols()) throw DimensionError("pencil endpoints differ in shape");
  const Scalar one_minus = Scalar(1) - at;
  Mat m(phi0.rows(), phi0.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = one_minus * phi0(r, c) + at * phi1(r, c);
  return m;
}

namespace {

// Position of a nonzero entry of least degree in the trailing block [k.., k..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const PolyMat& a, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_degree = 0;
  for (std::size_t r = k; r < a.rows(); ++r)
    for (std::size_t c = k; c < a.cols(); ++c) {
      const int deg = a(r, c).degree();
      if (deg < 0) continue;
      if (!best || deg < best_degree) {
        best = {r, c};
        best_degree = deg;
        if (deg == 0) return best;
      }
    }
  return best;
}

void normalize_pivot_row(PolyMat& a, std::size_t k) {
  const Scalar lead = a(k, k).leading();
  if (lead.is_one()) return;
  const UniPoly inv(lead.inverse());
  for (std::size_t c = k; c < a.cols(); ++c) a(k, c) = a(k, c) * inv;
}

// Clears column k below and row k right of the pivot with Euclidean steps.
// Returns false if some remainder survived and a new pivot must be chosen.
bool reduce_cross(PolyMat& a, std::size_t k) {
  bool clean = true;
  for (std::size_t r = k + 1; r < a.rows(); ++r) {
    if (a(r, k).is_zero()) continue;
    const UniPoly q = divmod(a(r, k), a(k, k)).first;
    for (std::size_t c = k; c < a.cols(); ++c) {
      if (!a(k, c).is_zero()) a(r, c) -= q * a(k, c);
    }
    if (!a(r, k).is_zero()) clean = false;
  }
  for (std::size_t c = k + 1; c < a.cols(); ++c) {
    if (a(k, c).is_zero()) continue;
    const UniPoly q = divmod(a(k, c), a(k, k)).first;
    for (std::size_t r = k; r < a.rows(); ++r) {
      if (!a(r, k).is_zero()) a(r, c) -= q * a(r, k);
    }
    if (!a(k, c).is_zero()) clean = false;
  }
  return clean;
}

// Smith normal form over the Euclidean domain Q(i)[t], stopped after `r`
// invariant factors. Returns their product, or zero if fewer than r exist.
UniPoly smith_divisor(PolyMat a, std::size_t r) {
  UniPoly product(1);
  for (std::size_t k = 0; k < r; ++k) {
    auto pos = smallest_entry(a, k);
    if (!pos) return {};
    a.swap_rows(k, pos->first);
    a.swap_cols(k, pos->second);
    for (;;) {
      normalize_pivot_row(a, k);
      if (!reduce_cross(a, k)) {
        // A remainder of smaller degree appeared in the cross; promote it.
        auto cross_best = smallest_entry(a, k);
        a.swap_rows(k, cross_best->first);
        a.swap_cols(k, cross_best->second);
        continue;
      }
      // Divisibility: every trailing entry must be a multiple of the pivot.
      std::optional<std::size_t> offending;
      for (std::size_t rr = k + 1; rr < a.rows() && !offending; ++rr)
        for (std::size_t cc = k + 1; cc < a.cols(); ++cc) {
          if (!a(rr, cc).is_zero() && !divmod(a(rr, cc), a(k, k)).second.is_zero()) {
            offending = rr;
            break;
          }
        }
      if (!offending) break;
      for (std::size_t cc = k; cc < a.cols(); ++cc) a(k, cc) += a(*offending, cc);
    }
    product = product * a(k, k);
  }
  return product;
}

UniPoly cofactor_determinant(const PolyMat& a, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return a(rows[0], cols[0]);
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  UniPoly det;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const UniPoly& entry = a(rows[0], cols[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    const UniPoly term = entry * cofactor_determinant(a, sub_rows, sub_cols);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

UniPoly minors_divisor(const PolyMat& a, std::size_t r) {
  std::vector<std::size_t> rows(r);
  UniPoly acc;
  for (std::size_t k = 0; k < r; ++k) rows[k] = k;
  do {
    std::vector<std::size_t> cols(r);
    for (std::size_t k = 0; k < r; ++k) cols[k] = k;
    do {
      acc = gcd(acc, cofactor_determinant(a, rows, cols));
      if (acc.is_constant() && !acc.is_zero()) return UniPoly(1);
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return acc;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

UniPoly determinantal_divisor(const Mat& phi0, const Mat& phi1, std::size_t r, DivisorMethod method) {
  const PolyMat a = affine_pencil(phi0, phi1);
  if (r == 0 || r > std::min(a.rows(), a.cols())) throw DimensionError("minor size out of range");
  const UniPoly divisor = method == DivisorMethod::minors ? minors_divisor(a, r) : smith_divisor(a, r);
  return squarefree_part(divisor);
}

std::size_t generic_rank(const Mat& phi0, const Mat& phi1, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t best = rank(evaluate_pencil(phi0, phi1, Scalar(random_rational(rng))));
  // Only finitely many t lower the rank, so two random points agree quickly.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t next = rank(evaluate_pencil(phi0, phi1, Scalar(random_rational(rng))));
    if (next == best) return best;
    best = std::max(best, next);
  }
  return best;
}

}  // namespace homequiv
