#include "bicomlab/exactlin.hpp"

#include <stdexcept>

namespace bicomlab {

namespace {

// Rows as denominator-cleared big integers.
std::vector<std::vector<Int>> cleared_rows(const RationalMatrix& m) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      l = boost::multiprecision::lcm(l, denominator(m.at(r, c)));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      rows[r][c] = numerator(q) * (l / denominator(q));
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<Int>> rows;  // nonzero echelon rows, in pivot order
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free elimination (Bareiss). Deterministic: for each column takes
// the first remaining row with a nonzero entry.
Echelon bareiss(std::vector<std::vector<Int>> a, std::size_t cols) {
  Echelon e;
  Int prev = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < a.size(); ++col) {
    std::size_t sel = top;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[top], a[sel]);
    const Int pivot = a[top][col];
    for (std::size_t r = top + 1; r < a.size(); ++r) {
      const Int factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        a[r][c] = (a[r][c] * pivot - factor * a[top][c]) / prev;
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++top;
  }
  a.resize(top);
  e.rows = std::move(a);
  return e;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("ragged rows");
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

std::size_t RationalMatrix::rank() const {
  return bareiss(cleared_rows(*this), cols_).pivot_cols.size();
}

RationalMatrix RationalMatrix::kernel() const {
  Echelon e = bareiss(cleared_rows(*this), cols_);
  const std::size_t r = e.pivot_cols.size();

  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  RationalMatrix out(cols_ - r, cols_);
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    // Solve for the pivot variables with x[free_col] = 1 by back substitution.
    std::vector<Rational> x(cols_, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = r; i-- > 0;) {
      const auto& row = e.rows[i];
      Rational s = 0;
      for (std::size_t c = e.pivot_cols[i] + 1; c < cols_; ++c)
        if (row[c] != 0 && x[c] != 0) s += Rational(row[c]) * x[c];
      x[e.pivot_cols[i]] = -s / Rational(row[e.pivot_cols[i]]);
    }
    for (std::size_t c = 0; c < cols_; ++c) out.at(k, c) = x[c];
    ++k;
  }
  return out;
}

bool RationalMatrix::in_span(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("in_span: dimension mismatch");
  RationalMatrix ext(rows_ + 1, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) ext.at(r, c) = at(r, c);
  for (std::size_t c = 0; c < cols_; ++c) ext.at(rows_, c) = v[c];
  return ext.rank() == rank();
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (other.cols_ != cols_) throw std::invalid_argument("stacked: dimension mismatch");
  RationalMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = other.at(r, c);
  return m;
}

bool RationalMatrix::same_row_space(const RationalMatrix& other) const {
  std::size_t ra = rank(), rb = other.rank();
  if (ra != rb) return false;
  return stacked(other).rank() == ra;
}

}  // namespace bicomlab
