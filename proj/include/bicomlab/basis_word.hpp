#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bicomlab/generator.hpp"

namespace bicomlab {

/// Canonical monomial of the free bicommutative algebra: either a single
/// generator, or a Young pair (column multiset | row multiset), both stored
/// sorted and nonempty. The pair (x_1..x_k | y_1..y_l) stands for the
/// monomial x_k(...(x_2((...((x_1 y_1) y_2)...) y_l))...).
class BasisWord {
 public:
  static BasisWord generator(const Generator& g);
  /// Sorts the inputs; both parts must be nonempty.
  static BasisWord pair(std::vector<Generator> col, std::vector<Generator> row);

  bool is_generator() const { return row_.empty(); }
  const Generator& gen() const;
  const std::vector<Generator>& col() const { return col_; }
  const std::vector<Generator>& row() const { return row_; }

  int degree() const { return static_cast<int>(col_.size() + row_.size()); }
  Multidegree multidegree() const;
  bool is_multilinear() const;

  BasisWord involute() const;

  /// "x" for generators, "Y[a,b|c,d]" for pairs.
  std::string str() const;

  /// Deterministic order: degree, then |col|, then col lex, then row lex.
  friend std::strong_ordering operator<=>(const BasisWord& a, const BasisWord& b);
  friend bool operator==(const BasisWord& a, const BasisWord& b) {
    return a.col_ == b.col_ && a.row_ == b.row_;
  }

  friend BasisWord word_product(const BasisWord& u, const BasisWord& v);

 private:
  BasisWord() = default;
  std::vector<Generator> col_, row_;
};

/// Canonical product of two basis words. The left factor contributes to the
/// column, the right factor to the row; pair-times-pair takes both unions.
BasisWord word_product(const BasisWord& u, const BasisWord& v);

}  // namespace bicomlab
