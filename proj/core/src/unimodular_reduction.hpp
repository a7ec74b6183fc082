#pragma once

#include "latconv/int_linalg.hpp"

namespace latconv::detail {

// Elementary row operations on a working matrix W with a unimodular
// accumulator X kept in sync so that X * W == original at every step.
class RowReducer {
 public:
  explicit RowReducer(IntMatrix w) : w_(std::move(w)), x_(IntMatrix::identity(w_.rows())) {}

  const IntMatrix& working() const { return w_; }
  const IntMatrix& unimodular() const { return x_; }
  Int entry(std::size_t i, std::size_t j) const { return w_.at(i, j); }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < w_.cols(); ++c) std::swap(w_.at(i, c), w_.at(j, c));
    for (std::size_t r = 0; r < x_.rows(); ++r) std::swap(x_.at(r, i), x_.at(r, j));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < w_.cols(); ++c) w_.at(i, c) = -w_.at(i, c);
    for (std::size_t r = 0; r < x_.rows(); ++r) x_.at(r, i) = -x_.at(r, i);
  }

  // row i += k * row j   (and column j of X -= k * column i)
  void add_row(std::size_t i, std::size_t j, Int k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < w_.cols(); ++c)
      w_.at(i, c) = checked_add(w_.at(i, c), checked_mul(k, w_.at(j, c)));
    for (std::size_t r = 0; r < x_.rows(); ++r)
      x_.at(r, j) = checked_sub(x_.at(r, j), checked_mul(k, x_.at(r, i)));
  }

  // Euclid on column c: leaves gcd of the two entries in row i, zero in row j.
  void eliminate(std::size_t c, std::size_t i, std::size_t j) {
    while (w_.at(j, c) != 0) {
      Int q = w_.at(i, c) / w_.at(j, c);
      add_row(i, j, -q);
      swap_rows(i, j);
    }
  }

  void make_pivot_positive(std::size_t i, std::size_t c) {
    if (w_.at(i, c) < 0) negate_row(i);
  }

 private:
  IntMatrix w_;
  IntMatrix x_;
};

// Column-operation twin: maintains original == W * X.
class ColumnReducer {
 public:
  explicit ColumnReducer(IntMatrix w) : w_(std::move(w)), x_(IntMatrix::identity(w_.cols())) {}

  const IntMatrix& working() const { return w_; }
  const IntMatrix& unimodular() const { return x_; }
  Int entry(std::size_t i, std::size_t j) const { return w_.at(i, j); }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < w_.rows(); ++r) std::swap(w_.at(r, i), w_.at(r, j));
    for (std::size_t c = 0; c < x_.cols(); ++c) std::swap(x_.at(i, c), x_.at(j, c));
  }

  void negate_col(std::size_t i) {
    for (std::size_t r = 0; r < w_.rows(); ++r) w_.at(r, i) = -w_.at(r, i);
    for (std::size_t c = 0; c < x_.cols(); ++c) x_.at(i, c) = -x_.at(i, c);
  }

  // col i += k * col j   (and row j of X -= k * row i)
  void add_col(std::size_t i, std::size_t j, Int k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < w_.rows(); ++r)
      w_.at(r, i) = checked_add(w_.at(r, i), checked_mul(k, w_.at(r, j)));
    for (std::size_t c = 0; c < x_.cols(); ++c)
      x_.at(j, c) = checked_sub(x_.at(j, c), checked_mul(k, x_.at(i, c)));
  }

  // Euclid on row r: gcd lands in column i, zero in column j.
  void eliminate(std::size_t r, std::size_t i, std::size_t j) {
    while (w_.at(r, j) != 0) {
      Int q = w_.at(r, i) / w_.at(r, j);
      add_col(i, j, -q);
      swap_cols(i, j);
    }
  }

  void make_pivot_positive(std::size_t r, std::size_t c) {
    if (w_.at(r, c) < 0) negate_col(c);
  }

 private:
  IntMatrix w_;
  IntMatrix x_;
};

}  // namespace latconv::detail
