#include "kac/matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace kac {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVec& target, Int factor, const IntVec& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& gens) {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < gens.rows(); ++i) rows.push_back(gens.row_vector(i));
  const std::size_t cols = gens.cols();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Euclid on the column until a single nonzero entry remains at pivot_row.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t k = pivot_row; k < rows.size(); ++k) {
        if (rows[k][col] == 0) continue;
        if (best == rows.size() || std::abs(rows[k][col]) < std::abs(rows[best][col])) best = k;
      }
      if (best == rows.size()) break;
      std::swap(rows[best], rows[pivot_row]);
      bool done = true;
      for (std::size_t k = pivot_row + 1; k < rows.size(); ++k) {
        if (rows[k][col] == 0) continue;
        axpy(rows[k], floor_div(rows[k][col], rows[pivot_row][col]), rows[pivot_row]);
        if (rows[k][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    const Int pivot = rows[pivot_row][col];
    for (std::size_t k = 0; k < pivot_row; ++k)
      axpy(rows[k], floor_div(rows[k][col], pivot), rows[pivot_row]);
    ++pivot_row;
  }

  IntMatrix out(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  return out;
}

RatMatrix hermite_basis(const RatMatrix& gens) {
  Int scale = 1;
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (const auto& x : gens.row(i)) scale = std::lcm(scale, x.denominator());
  IntMatrix scaled(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      const Rational v = gens(i, j) * scale;
      scaled(i, j) = v.numerator();
    }
  const IntMatrix h = hermite_normal_form(scaled);
  if (h.rows() != gens.cols()) throw std::domain_error("lattice generators are not of full rank");
  RatMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = Rational(h(i, j), scale);
  return out;
}

}  // namespace kac
