#pragma once

#include <optional>
#include <vector>

#include "qvir/coeff.hpp"

namespace qvir {

using Matrix = std::vector<std::vector<Coeff>>;

// Row-reduces the augmented system [A | b] in place and returns the rank of A.
int row_reduce(Matrix& aug, int cols);

// Solves A x = b exactly. Returns nullopt if the system is inconsistent or
// underdetermined; rank_out (when given) receives rank(A).
std::optional<std::vector<Coeff>> solve_linear(Matrix A,
                                               std::vector<Coeff> b,
                                               int* rank_out = nullptr);

// Inverse of a square matrix; throws MathError if singular.
Matrix invert_matrix(Matrix A);

}  // namespace qvir
