#include <doctest.h>

#include "bicomlab/exactlin.hpp"
#include "bicomlab/sparse_elim.hpp"
#include "test_util.hpp"

using namespace bicomlab;
using testutil::rand_int;

namespace {

RationalMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return RationalMatrix::from_rows(q);
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).rank() == 3);
  CHECK(from_ints({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(RationalMatrix(0, 5).rank() == 0);
}

TEST_CASE("the seven-by-seven lambda system is nonsingular") {
  // coefficient matrix of the degree-4 anticommutator span against the seven
  // independent symmetric words
  RationalMatrix m = from_ints({{1, 1, 1, 0, 0, 0, 0},
                                {0, 1, 1, 1, 1, 0, 0},
                                {1, 0, 1, 1, 0, 1, 2},
                                {1, 1, 0, 0, 1, 1, 2},
                                {0, 0, 1, 0, 1, 1, 0},
                                {0, 1, 0, 1, 0, 1, 0},
                                {1, 0, 0, 1, 1, 0, 0}});
  CHECK(m.rank() == 7);
  CHECK(m.kernel().rows() == 0);
}

TEST_CASE("rank-nullity and kernel vectors annihilate the matrix") {
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t rows = rand_int(1, 6), cols = rand_int(1, 6);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rand_int(-3, 3);
    RationalMatrix k = m.kernel();
    CHECK(m.rank() + k.rows() == cols);
    for (std::size_t v = 0; v < k.rows(); ++v)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += m.at(r, c) * k.at(v, c);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("in_span") {
  RationalMatrix m = from_ints({{1, 1, 0}, {0, 1, 1}});
  std::vector<Rational> yes{1, 2, 1};  // row0 + row1
  std::vector<Rational> no{1, 0, 1};
  CHECK(m.in_span(yes));
  CHECK(!m.in_span(no));
  std::vector<Rational> wrong_size{1, 2};
  CHECK_THROWS_AS(m.in_span(wrong_size), std::invalid_argument);
}

TEST_CASE("same_row_space") {
  RationalMatrix a = from_ints({{1, 0}, {0, 1}});
  RationalMatrix b = from_ints({{1, 1}, {1, -1}});
  RationalMatrix c = from_ints({{1, 1}});
  CHECK(a.same_row_space(b));
  CHECK(!a.same_row_space(c));
}

TEST_CASE("sparse eliminator matches dense rank") {
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t rows = rand_int(1, 8), cols = rand_int(1, 8);
    RationalMatrix m(rows, cols);
    SparseEliminator elim;
    for (std::size_t r = 0; r < rows; ++r) {
      SparseVec row;
      for (std::size_t c = 0; c < cols; ++c) {
        int v = rand_int(-2, 2);
        m.at(r, c) = v;
        if (v != 0) row.emplace_back(static_cast<int>(c), Rational(v));
      }
      elim.insert(std::move(row));
    }
    CHECK(elim.rank() == m.rank());
  }
}

TEST_CASE("sparse eliminator membership") {
  SparseEliminator elim;
  elim.insert({{0, Rational(1)}, {1, Rational(1)}});
  elim.insert({{1, Rational(1)}, {2, Rational(1)}});
  CHECK(elim.contains({{0, Rational(1)}, {2, Rational(-1)}}));  // row0 - row1
  CHECK(!elim.contains({{0, Rational(1)}}));
}
