#include "gapvir/linalg.hpp"

namespace gapvir {

std::vector<std::vector<Scalar>> kernel_basis(RationalMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;

  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const Scalar inv = Scalar(1) / a[rank][col];
    for (std::size_t c = col; c < cols; ++c) a[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        a[r][c] -= factor * a[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gapvir
