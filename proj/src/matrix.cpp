#include "homequiv/matrix.hpp"

namespace homequiv {

RrefResult rref(Mat m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead_row);

    const Scalar scale = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= scale;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.rank = lead_row;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = Scalar(1);
  }
  RrefResult reduced = rref(std::move(augmented));
  if (reduced.rank < n || (n > 0 && reduced.pivots[n - 1] != n - 1)) {
    throw SingularMatrixError("matrix is singular");
  }
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced.reduced(r, n + c);
  return inv;
}

}  // namespace homequiv
