#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bicomlab/rational.hpp"

namespace bicomlab {

/// Dense matrix of exact rationals. Elimination is fraction-free (Bareiss)
/// over denominator-cleared rows with deterministic pivoting: columns left to
/// right, first row with a nonzero entry.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;

  /// Basis of the null space {x : M x = 0}, one vector per row.
  RationalMatrix kernel() const;

  /// Whether v lies in the row space.
  bool in_span(std::span<const Rational> v) const;

  /// This matrix with the other's rows appended.
  RationalMatrix stacked(const RationalMatrix& other) const;

  /// Row-space equality, decided as rank(A) == rank(B) == rank(A stacked B).
  bool same_row_space(const RationalMatrix& other) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace bicomlab
