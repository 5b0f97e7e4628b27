#include "urset/linalg.hpp"

#include "urset/errors.hpp"

namespace urset::linalg {

using qs::Rational;

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& input, std::size_t cols) {
  Matrix m = input;
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("ragged matrix");

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const Rational lead = m[rank][col];
    for (auto& v : m[rank]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];

    // Primitive integer scaling, first nonzero entry positive.
    qs::Integer l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    for (auto& x : v) {
      x *= Rational(l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
    }
    Rational scale(1, g);
    for (const auto& x : v)
      if (!x.is_zero()) {
        if (x.sign() < 0) scale = -scale;
        break;
      }
    for (auto& x : v) x *= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace urset::linalg
