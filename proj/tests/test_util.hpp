#pragma once

#include <random>
#include <vector>

#include "bicomlab/bicom_element.hpp"
#include "bicomlab/magma_tree.hpp"

namespace bicomlab::testutil {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x9e3779b97f4a7c15ull);
  return r;
}

inline int rand_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

inline Rational rand_coeff() {
  int num = 0;
  while (num == 0) num = rand_int(-4, 4);
  return Rational(num, rand_int(1, 3));
}

inline std::vector<Generator> small_pool() {
  return {Generator("x"), Generator("y"), Generator("z"), Generator("t"), Generator("u")};
}

inline BasisWord rand_word(int degree, const std::vector<Generator>& pool) {
  auto pick = [&] { return pool[rand_int(0, static_cast<int>(pool.size()) - 1)]; };
  if (degree == 1) return BasisWord::generator(pick());
  int k = rand_int(1, degree - 1);
  std::vector<Generator> col, row;
  for (int i = 0; i < k; ++i) col.push_back(pick());
  for (int i = k; i < degree; ++i) row.push_back(pick());
  return BasisWord::pair(std::move(col), std::move(row));
}

inline BicomElement rand_element(int max_degree, int terms, const std::vector<Generator>& pool) {
  BicomElement e;
  for (int i = 0; i < terms; ++i)
    e += BicomElement::term(rand_coeff(), rand_word(rand_int(1, max_degree), pool));
  return e;
}

// random multilinear plain tree on the given variables
inline MagmaTree rand_tree(std::vector<Generator> vars) {
  std::shuffle(vars.begin(), vars.end(), rng());
  auto build = [&](auto&& self, int lo, int hi) -> MagmaTree {
    if (hi - lo == 1) return MagmaTree::leaf(vars[lo]);
    int mid = rand_int(lo + 1, hi - 1);
    return MagmaTree::product(self(self, lo, mid), self(self, mid, hi));
  };
  return build(build, 0, static_cast<int>(vars.size()));
}

}  // namespace bicomlab::testutil
