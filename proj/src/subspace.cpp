#include "homequiv/subspace.hpp"

namespace homequiv {

Subspace Subspace::span(const Mat& generators) {
  Subspace s(generators.cols());
  RrefResult reduced = rref(generators);
  s.basis_ = Mat(reduced.rank, generators.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r)
    for (std::size_t c = 0; c < generators.cols(); ++c) s.basis_(r, c) = reduced.reduced(r, c);
  s.pivots_ = std::move(reduced.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& generators) {
  Mat m(generators.size(), ambient_dim);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    if (generators[r].size() != ambient_dim) throw DimensionError("generator length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = generators[r][c];
  }
  return span(m);
}

Subspace Subspace::whole(std::size_t ambient_dim) { return span(Mat::identity(ambient_dim)); }

std::optional<std::vector<Scalar>> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  // Pivot columns of a reduced basis form an identity block, so the
  // candidate coordinates are read off directly and then verified.
  std::vector<Scalar> coeffs(dim());
  for (std::size_t k = 0; k < dim(); ++k) coeffs[k] = v[pivots_[k]];
  for (std::size_t c = 0; c < ambient_; ++c) {
    Scalar combo;
    for (std::size_t k = 0; k < dim(); ++k) {
      if (!coeffs[k].is_zero() && !basis_(k, c).is_zero()) combo += coeffs[k] * basis_(k, c);
    }
    if (!(combo == v[c])) return std::nullopt;
  }
  return coeffs;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspaces live in different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

bool span_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different ambient spaces");
  return a == b;
}

bool member(std::span<const Scalar> v, const Subspace& s) { return s.contains(v); }

}  // namespace homequiv
