#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homequiv/matrix.hpp"

namespace homequiv {

/// Linear subspace of Q(i)^ambient held by its canonical reduced row-echelon
/// basis. Two subspaces are equal as sets iff their bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row space of `generators` (its column count is the ambient dimension).
  static Subspace span(const Mat& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& generators);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v with respect to basis(); nullopt when v is not in the span.
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Set equality of two subspaces of the same ambient space.
bool span_equal(const Subspace& a, const Subspace& b);

/// Whether v lies in s; v must have length s.ambient_dim().
bool member(std::span<const Scalar> v, const Subspace& s);

}  // namespace homequiv
