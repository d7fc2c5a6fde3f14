#include "bicomlab/basis_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicomlab {

BasisWord BasisWord::generator(const Generator& g) {
  BasisWord w;
  w.col_ = {g};
  return w;
}

BasisWord BasisWord::pair(std::vector<Generator> col, std::vector<Generator> row) {
  if (col.empty() || row.empty())
    throw std::invalid_argument("basis word pair needs nonempty column and row");
  std::sort(col.begin(), col.end());
  std::sort(row.begin(), row.end());
  BasisWord w;
  w.col_ = std::move(col);
  w.row_ = std::move(row);
  return w;
}

const Generator& BasisWord::gen() const {
  if (!is_generator()) throw std::logic_error("gen() on a pair word");
  return col_.front();
}

Multidegree BasisWord::multidegree() const {
  Multidegree md;
  for (const auto& g : col_) ++md[g];
  for (const auto& g : row_) ++md[g];
  return md;
}

bool BasisWord::is_multilinear() const {
  for (const auto& [g, c] : multidegree())
    if (c != 1) return false;
  return true;
}

BasisWord BasisWord::involute() const {
  if (is_generator()) return *this;
  BasisWord w;
  w.col_ = row_;
  w.row_ = col_;
  return w;
}

std::string BasisWord::str() const {
  if (is_generator()) return gen().name();
  std::string s = "Y[";
  for (std::size_t i = 0; i < col_.size(); ++i) {
    if (i) s += ',';
    s += col_[i].name();
  }
  s += '|';
  for (std::size_t i = 0; i < row_.size(); ++i) {
    if (i) s += ',';
    s += row_[i].name();
  }
  s += ']';
  return s;
}

std::strong_ordering operator<=>(const BasisWord& a, const BasisWord& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.col_.size() <=> b.col_.size(); c != 0) return c;
  if (auto c = a.col_ <=> b.col_; c != 0) return c;
  return a.row_ <=> b.row_;
}

BasisWord word_product(const BasisWord& u, const BasisWord& v) {
  auto merged = [](const std::vector<Generator>& a, const std::vector<Generator>& b) {
    std::vector<Generator> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  BasisWord w;
  if (u.is_generator() && v.is_generator()) {
    w.col_ = {u.gen()};
    w.row_ = {v.gen()};
  } else if (v.is_generator()) {
    w.col_ = u.col_;
    w.row_ = merged(u.row_, {v.gen()});
  } else if (u.is_generator()) {
    w.col_ = merged(v.col_, {u.gen()});
    w.row_ = v.row_;
  } else {
    w.col_ = merged(u.col_, v.col_);
    w.row_ = merged(u.row_, v.row_);
  }
  return w;
}

}  // namespace bicomlab
