#include <doctest.h>

#include "bicomlab/operators.hpp"
#include "bicomlab/parser.hpp"
#include "test_util.hpp"

using namespace bicomlab;

namespace {

const Generator X("x"), Y("y"), Z("z");
BicomElement gen(const Generator& g) { return BicomElement::generator(g); }

}  // namespace

TEST_CASE("basic element parsing") {
  CHECK(parse_element("x*y - y*x") == commutator(gen(X), gen(Y)));
  CHECK(parse_element("1/2*{{x,y},z}") ==
        Rational(1, 2) * anticommutator(anticommutator(gen(X), gen(Y)), gen(Z)));
  CHECK(parse_element("[x,y]") == commutator(gen(X), gen(Y)));
  CHECK(parse_element("0").is_zero());
  CHECK(parse_element("-x + x").is_zero());
  CHECK(parse_element("2*x") == Rational(2) * gen(X));
  CHECK(parse_element("x*y*z") == multiply(multiply(gen(X), gen(Y)), gen(Z)));
}

TEST_CASE("minus-Tortken written in surface syntax vanishes") {
  BicomElement e = parse_element(
      "{{a,b},{c,d}} - {{a,d},{c,b}} + {assoc(a,b,c),d} - {assoc(a,d,c),b}");
  CHECK(e.is_zero());
}

TEST_CASE("canonical word atoms") {
  CHECK(parse_element("Y[x|y,z]") ==
        BicomElement::word(BasisWord::pair({X}, {Y, Z})));
  CHECK(parse_element("Y[b,a|c]") == parse_element("Y[a,b|c]"));
  CHECK(parse_element("Y[x|y] - Y[y|x]") == commutator(gen(X), gen(Y)));
}

TEST_CASE("round trip on random elements") {
  auto pool = testutil::small_pool();
  for (int i = 0; i < 500; ++i) {
    BicomElement e = testutil::rand_element(5, testutil::rand_int(0, 5), pool);
    CHECK(parse_element(e.str()) == e);
  }
}

TEST_CASE("magma target keeps labeled nodes") {
  MagmaPoly p = parse_magma("{x,y} - 2*(x*y)");
  REQUIRE(p.terms().size() == 2);
  auto it = p.terms().begin();
  CHECK(it->first.str() == "(x*y)");
  CHECK(it->second == -2);
  ++it;
  CHECK(it->first.str() == "{x,y}");
  CHECK(it->second == 1);
  CHECK_THROWS_AS(parse_magma("Y[x|y]"), ParseError);
}

TEST_CASE("identity parsing") {
  MagmaPoly p = parse_identity("{{{a,b},c},d} = {{{a,b},d},c}");
  CHECK(holds_in_bicom(p, NodeOp::anti));
  MagmaPoly q = parse_identity("x*y - y*x");
  CHECK(q == parse_magma("x*y - y*x"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_element("x y"), ParseError);          // juxtaposition
  CHECK_THROWS_AS(parse_element("(x"), ParseError);           // unbalanced
  CHECK_THROWS_AS(parse_element("[x,y"), ParseError);         // unbalanced
  CHECK_THROWS_AS(parse_element("3"), ParseError);            // bare nonzero constant
  CHECK_THROWS_AS(parse_element("1/0*x"), std::exception);    // zero denominator
  CHECK_THROWS_AS(parse_element("Y[|x]"), ParseError);        // empty column
  CHECK_THROWS_AS(parse_element("{x}"), ParseError);          // bracket arity
  CHECK_THROWS_AS(parse_element(""), ParseError);
  try {
    parse_element("x + @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 5);
  }
}

TEST_CASE("multidegree parsing") {
  Multidegree md = parse_multidegree("x:1,y:2");
  CHECK(md[X] == 1);
  CHECK(md[Y] == 2);
  CHECK(parse_multidegree("x")[X] == 1);
  CHECK_THROWS_AS(parse_multidegree("x:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_multidegree("9x"), std::invalid_argument);
}
