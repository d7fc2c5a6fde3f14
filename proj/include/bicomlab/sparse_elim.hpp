#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bicomlab/rational.hpp"

namespace bicomlab {

/// Sparse vector over integer column indices, strictly increasing, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline void sparse_add_scaled(SparseVec& a, const SparseVec& b, const Rational& s) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

/// Incremental exact row-space accumulator: rows are reduced against stored
/// pivot rows (pivot = smallest column index, coefficient normalized to 1)
/// and inserted when a new pivot survives. Deterministic for a fixed
/// insertion order.
class SparseEliminator {
 public:
  /// Returns true if the row was independent of the current span.
  bool insert(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    pivots_.emplace(row.front().first, std::move(row));
    return true;
  }

  SparseVec reduce(SparseVec row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      sparse_add_scaled(row, it->second, -row.front().second);
    }
    return row;
  }

  bool contains(SparseVec row) const { return reduce(std::move(row)).empty(); }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, SparseVec> pivots_;
};

}  // namespace bicomlab
