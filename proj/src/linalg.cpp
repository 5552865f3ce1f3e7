#include "qplanes/linalg.hpp"

#include <stdexcept>

namespace qplanes {

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RMatrix RMatrix::without_column(std::size_t col) const
{
  RMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != col) {
        out(r, k++) = (*this)(r, c);
      }
    }
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RMatrix &m)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(pivot, c), m(row, c));
      }
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != 0) {
        const Rational factor = m(r, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          m(r, c) -= factor * m(row, c);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(RMatrix m)
{
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
      }
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) != 0) {
        const Rational factor = m(r, col) / m(col, col);
        for (std::size_t c = col; c < n; ++c) {
          m(r, c) -= factor * m(col, c);
        }
      }
    }
  }
  return det;
}

std::size_t rank(RMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RMatrix m)
{
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qplanes
