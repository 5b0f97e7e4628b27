#pragma once

#include <vector>

#include "urset/qsarith.hpp"

namespace urset::linalg {

using Matrix = std::vector<std::vector<qs::Rational>>;

/// Determinant of a square matrix by exact elimination.
qs::Rational determinant(Matrix m);

/// Basis of {c : M c = 0}. Each vector is scaled to a primitive integer
/// vector whose first nonzero entry is positive; vectors are ordered by
/// their free column.
std::vector<std::vector<qs::Rational>> nullspace(const Matrix& m, std::size_t cols);

}  // namespace urset::linalg
