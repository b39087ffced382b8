#include "projcalc/linear_algebra.hpp"

#include <stdexcept>

namespace projcalc {

namespace {

void require_square(const RationalMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

}  // namespace

RationalMatrix identity_matrix(int n) {
  RationalMatrix id(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < id.size(); ++i) id[i][i] = Rational(1);
  return id;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  if (a.front().size() != b.size()) throw std::invalid_argument("matrix shapes do not match");
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RationalMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RationalMatrix invert(const RationalMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  RationalMatrix work = a;
  RationalMatrix inv = identity_matrix(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = Rational(1) / work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      const Rational f = work[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& a) {
  require_square(a);
  RationalMatrix work = a;
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(work[pivot], work[col]);
      det = -det;
    }
    det *= work[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work[r][col].is_zero()) continue;
      const Rational f = work[r][col] / work[col][col];
      for (std::size_t j = col; j < n; ++j) work[r][j] -= f * work[col][j];
    }
  }
  return det;
}

}  // namespace projcalc
