#pragma once

// Small dense exact matrices over the rationals.

#include "qplanes/rational.hpp"

#include <vector>

namespace qplanes {

class RMatrix {
public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RMatrix without_column(std::size_t col) const;

  friend bool operator==(const RMatrix &, const RMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(RMatrix m);
std::size_t rank(RMatrix m);

// Basis of {x : m x = 0}, one vector per free column of the reduced row
// echelon form, with that free entry equal to 1.
std::vector<std::vector<Rational>> nullspace(RMatrix m);

}  // namespace qplanes
