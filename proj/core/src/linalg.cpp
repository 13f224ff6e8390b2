#include "qvir/linalg.hpp"

namespace qvir {

int row_reduce(Matrix& aug, int cols) {
  int rows = static_cast<int>(aug.size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!aug[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(aug[rank], aug[pivot]);
    Coeff inv = aug[rank][col].inverse();
    for (auto& x : aug[rank]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || aug[r][col].is_zero()) continue;
      Coeff factor = aug[r][col];
      for (std::size_t c = col; c < aug[r].size(); ++c)
        aug[r][c] -= factor * aug[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Coeff>> solve_linear(Matrix A, std::vector<Coeff> b,
                                               int* rank_out) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  Matrix aug = std::move(A);
  for (int r = 0; r < rows; ++r) aug[r].push_back(std::move(b[r]));
  int rank = row_reduce(aug, cols);
  if (rank_out) *rank_out = rank;
  if (rank < cols) return std::nullopt;  // underdetermined
  // consistency: zero rows must have zero rhs
  for (int r = 0; r < rows; ++r) {
    bool allzero = true;
    for (int c = 0; c < cols; ++c)
      if (!aug[r][c].is_zero()) {
        allzero = false;
        break;
      }
    if (allzero && !aug[r][cols].is_zero()) return std::nullopt;
  }
  // rank == cols: the pivot block is the identity on the first `cols` rows.
  std::vector<Coeff> x(cols);
  for (int col = 0; col < cols; ++col) x[col] = aug[col][cols];
  return x;
}

Matrix invert_matrix(Matrix A) {
  int n = static_cast<int>(A.size());
  Matrix aug = std::move(A);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r].push_back(Coeff(r == c ? 1 : 0));
  }
  int rank = row_reduce(aug, n);
  if (rank < n) throw MathError("singular matrix");
  Matrix inv(n, std::vector<Coeff>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

}  // namespace qvir
