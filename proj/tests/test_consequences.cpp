#include <doctest.h>

#include <unordered_set>

#include "bicomlab/consequences.hpp"
#include "bicomlab/identities.hpp"
#include "test_util.hpp"

using namespace bicomlab;
using namespace bicomlab::consequences;

namespace {

const Generator X("x"), Y("y"), Z("z"), T("t");

BasisWord P(std::vector<Generator> col, std::vector<Generator> row) {
  return BasisWord::pair(std::move(col), std::move(row));
}
BicomElement gen(const Generator& g) { return BicomElement::generator(g); }

// every distinct instance row of every generator, as dense coordinates over
// all multilinear monomials (the slow reference route)
RationalMatrix dense_instance_matrix(const std::vector<MagmaPoly>& gens, int n) {
  auto vars = standard_vars(n);
  auto monomials = monomials_on(vars);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    index.emplace(monomials[i].str(), static_cast<int>(i));
  std::vector<std::vector<Rational>> rows;
  std::unordered_set<std::string> seen;
  for (const auto& g : gens) {
    if (static_cast<int>(g.variables().size()) > n) continue;
    for_each_instance(g, vars, [&](const MagmaPoly& inst) {
      std::vector<Rational> row(monomials.size(), Rational(0));
      for (const auto& [t, c] : inst.terms()) row[index.at(t.str())] = c;
      std::string key;
      const Rational* lead = nullptr;
      for (const auto& v : row)
        if (v != 0) {
          lead = &v;
          break;
        }
      if (!lead) return true;
      for (const auto& v : row) key += to_string(v / *lead) + ",";
      if (seen.insert(key).second) rows.push_back(std::move(row));
      return true;
    });
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("monomial counts") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(monomials_on(standard_vars(n)).size()) ==
          multilinear_monomial_count(n));
  CHECK(multilinear_monomial_count(4) == 120);
  CHECK(multilinear_monomial_count(6) == 30240);
}

TEST_CASE("flip class space") {
  FlipClassSpace c3(standard_vars(3), FlipMode::commutative);
  CHECK(c3.monomial_count() == 12);
  CHECK(c3.class_count() == 3);

  FlipClassSpace c4(standard_vars(4), FlipMode::anticommutative);
  CHECK(c4.monomial_count() == 120);
  CHECK(c4.class_count() == 15);

  FlipClassSpace none(standard_vars(3), FlipMode::none);
  CHECK(none.class_count() == 12);

  // signs multiply across flips
  auto vars = standard_vars(3);
  MagmaTree m = MagmaTree::product(MagmaTree::leaf(vars[1]),
                                   MagmaTree::product(MagmaTree::leaf(vars[2]),
                                                      MagmaTree::leaf(vars[0])));
  auto [cls, sign] = c3.project_monomial(m);
  auto [cls2, sign2] = c3.project_monomial(
      MagmaTree::product(MagmaTree::product(MagmaTree::leaf(vars[2]), MagmaTree::leaf(vars[0])),
                         MagmaTree::leaf(vars[1])));
  CHECK(cls == cls2);
  CHECK(sign * sign2 == -1);  // the two trees differ by a single root flip
}

TEST_CASE("image ranks") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(image_rank(n, NodeOp::com) == n - 1);
    CHECK(image_rank(n, NodeOp::anti) == (1ll << (n - 1)) - 1);
    CHECK(image_rank(n, NodeOp::plain) == (1ll << n) - 2);
  }
}

TEST_CASE("consequence span examples") {
  auto span2 = consequence_span({identities::commutativity_plain()}, 2);
  CHECK(span2.ambient_dim() == 2);
  CHECK(span2.dim() == 1);

  auto span3 = consequence_span({identities::anticommutativity_plain(),
                                 identities::jacobi_plain(), identities::metabelian_plain()},
                                3);
  CHECK(span3.ambient_dim() == 12);
  CHECK(span3.dim() == 10);  // codimension 2, the free-Lie multilinear dimension

  auto span4 = consequence_span({identities::commutativity_plain(),
                                 identities::minus_tortken_plain(),
                                 identities::weak_right_commutativity_plain()},
                                4);
  CHECK(span4.ambient_dim() == 120);
  CHECK(span4.dim() == 113);  // codimension 7

  CHECK(span3.contains(identities::jacobi_plain().substitute(
      {{Generator("a"), MagmaTree::leaf(Generator("x1"))},
       {Generator("b"), MagmaTree::leaf(Generator("x2"))},
       {Generator("c"), MagmaTree::leaf(Generator("x3"))}})));
}

TEST_CASE("evaluation kernel") {
  auto k2 = evaluation_kernel(2, NodeOp::com);
  CHECK(k2.ambient_dim() == 2);
  CHECK(k2.image_rank() == 1);
  CHECK(k2.contains(identities::anticommutativity_plain()));

  auto k4c = evaluation_kernel(4, NodeOp::com);
  CHECK(k4c.image_rank() == 3);
  CHECK(k4c.dim() == 117);

  auto k4a = evaluation_kernel(4, NodeOp::anti);
  CHECK(k4a.image_rank() == 7);

  // basis rows really lie in the kernel
  auto vars = standard_vars(3);
  auto monomials = monomials_on(vars);
  auto basis = evaluation_kernel(3, NodeOp::com).basis();
  CHECK(basis.rows() == 10);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    MagmaPoly p;
    for (std::size_t c = 0; c < basis.cols(); ++c)
      if (basis.at(r, c) != 0) p += basis.at(r, c) * MagmaPoly::from_tree(monomials[c]);
    CHECK(holds_in_bicom(p, NodeOp::com));
  }
}

TEST_CASE("sparse and dense consequence routes agree at low degree") {
  // theorem 1 generators at degree 3, theorem 2 generators at degree 4
  std::vector<MagmaPoly> gens1{identities::anticommutativity_plain(), identities::jacobi_plain(),
                               identities::metabelian_plain()};
  auto span1 = consequence_span(gens1, 3);
  auto dense1 = dense_instance_matrix(gens1, 3);
  CHECK(static_cast<long long>(dense1.rank()) == span1.dim());
  auto kernel1 = evaluation_kernel(3, NodeOp::com).basis();
  CHECK(dense1.same_row_space(kernel1));

  std::vector<MagmaPoly> gens2{identities::commutativity_plain(),
                               identities::minus_tortken_plain(),
                               identities::weak_right_commutativity_plain()};
  auto span2 = consequence_span(gens2, 4);
  auto dense2 = dense_instance_matrix(gens2, 4);
  CHECK(static_cast<long long>(dense2.rank()) == span2.dim());
  auto kernel2 = evaluation_kernel(4, NodeOp::anti).basis();
  CHECK(dense2.same_row_space(kernel2));
}

TEST_CASE("spanning images") {
  auto mets = metabelian_images(3);
  REQUIRE(mets.size() == 2);
  std::vector<Generator> v123{Generator("x1"), Generator("x2"), Generator("x3")};
  CHECK(mets[0] == left_normed(NodeOp::com, std::vector<Generator>{v123[0], v123[1], v123[2]}));
  CHECK(mets[1] == left_normed(NodeOp::com, std::vector<Generator>{v123[0], v123[2], v123[1]}));

  CHECK(jordan_spanning_images(3).size() == 3);
  CHECK(jordan_spanning_images(5).size() == 15);
  CHECK(coordinate_matrix(metabelian_images(6)).rank() == 5);
}

TEST_CASE("paper expansion table for the anticommutator span") {
  // {{{x,y},z},t} expands to the plus parts of (((xy)zt)), z((xy)t),
  // t((xy)z), t(z(xy))
  BicomElement m1 = anticommutator(
      anticommutator(anticommutator(gen(X), gen(Y)), gen(Z)), gen(T));
  BicomElement expected = plus_part(BicomElement::word(P({X}, {Y, Z, T}))) +
                          plus_part(BicomElement::word(P({X, Z}, {Y, T}))) +
                          plus_part(BicomElement::word(P({X, T}, {Y, Z}))) +
                          plus_part(BicomElement::word(P({X, Z, T}, {Y})));
  CHECK(m1 == expected);

  // [[[x,y],z],t] expands to the matching minus parts with alternating signs
  BicomElement c1 = commutator(commutator(commutator(gen(X), gen(Y)), gen(Z)), gen(T));
  BicomElement cexp = minus_part(BicomElement::word(P({X}, {Y, Z, T}))) -
                      minus_part(BicomElement::word(P({X, Z}, {Y, T}))) -
                      minus_part(BicomElement::word(P({X, T}, {Y, Z}))) +
                      minus_part(BicomElement::word(P({X, Z, T}, {Y})));
  CHECK(c1 == cexp);
}

TEST_CASE("theorem verifiers at low degree") {
  for (int n = 2; n <= 4; ++n) {
    auto r1 = verify_theorem1(n);
    CHECK(r1.pass);
    auto r2 = verify_theorem2(n);
    CHECK(r2.pass);
  }
  auto r = verify_theorem2(4);
  std::map<std::string, long long> dims(r.dims.begin(), r.dims.end());
  CHECK(dims["magma"] == 120);
  CHECK(dims["kernel"] == 113);
  CHECK(dims["consequences"] == 113);
  CHECK(dims["image_rank"] == 7);
  CHECK(r.to_json()["dims"]["image_rank"] == 7);
}

TEST_CASE("degree-4 independence verifier") {
  auto r = verify_degree4_independence();
  CHECK(r.pass);
  std::map<std::string, long long> dims(r.dims.begin(), r.dims.end());
  CHECK(dims["anti_system_rank"] == 7);
  CHECK(dims["com_system_rank"] == 3);
  CHECK(dims["deg3_com_span"] == dims["deg3_com_kernel"]);
  CHECK(dims["deg3_anti_span"] == 9);
}

TEST_CASE("section 7 verifier") {
  auto r = verify_section7();
  CHECK(r.pass);
  std::map<std::string, long long> dims(r.dims.begin(), r.dims.end());
  CHECK(dims["quotient_dim"] == 9);
  CHECK(dims["commutative_monomials"] == 15);
}

TEST_CASE("filtration verifier at small degree") {
  auto r1 = verify_filtration(1);
  CHECK(r1.pass);
  std::map<std::string, long long> d1(r1.dims.begin(), r1.dims.end());
  CHECK(d1["jordan_slice"] == 3);

  auto r2 = verify_filtration(2);
  CHECK(r2.pass);
  std::map<std::string, long long> d2(r2.dims.begin(), r2.dims.end());
  CHECK(d2["jordan_slice"] == 7);
}

TEST_CASE("corollary verifier") {
  for (int n : {2, 3, 4}) CHECK(verify_corollary1(n).pass);
}

TEST_CASE("oracle verifier") {
  auto r = verify_oracle(4);
  CHECK(r.pass);
}
