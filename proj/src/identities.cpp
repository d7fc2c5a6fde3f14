#include "bicomlab/identities.hpp"

namespace bicomlab::identities {

namespace {

MagmaPoly var(const char* n) { return MagmaPoly::variable(Generator(n)); }

MagmaPoly mul(const MagmaPoly& x, const MagmaPoly& y) {
  return MagmaPoly::combine(NodeOp::plain, x, y);
}
MagmaPoly com(const MagmaPoly& x, const MagmaPoly& y) {
  return MagmaPoly::combine(NodeOp::com, x, y);
}
MagmaPoly anti(const MagmaPoly& x, const MagmaPoly& y) {
  return MagmaPoly::combine(NodeOp::anti, x, y);
}

}  // namespace

MagmaPoly associator(NodeOp op, const MagmaPoly& a, const MagmaPoly& b, const MagmaPoly& c) {
  return MagmaPoly::combine(op, a, MagmaPoly::combine(op, b, c)) -
         MagmaPoly::combine(op, MagmaPoly::combine(op, a, b), c);
}

MagmaPoly left_commutativity() {
  auto a = var("a"), b = var("b"), c = var("c");
  return mul(a, mul(b, c)) - mul(b, mul(a, c));
}

MagmaPoly right_commutativity() {
  auto a = var("a"), b = var("b"), c = var("c");
  return mul(mul(a, b), c) - mul(mul(a, c), b);
}

MagmaPoly anticommutativity() {
  auto a = var("a"), b = var("b");
  return com(a, b) + com(b, a);
}

MagmaPoly jacobi() {
  auto a = var("a"), b = var("b"), c = var("c");
  return com(com(a, b), c) + com(com(b, c), a) + com(com(c, a), b);
}

MagmaPoly metabelian() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return com(com(a, b), com(c, d));
}

MagmaPoly minus_tortken() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return anti(anti(a, b), anti(c, d)) - anti(anti(a, d), anti(c, b)) +
         anti(associator(NodeOp::anti, a, b, c), d) -
         anti(associator(NodeOp::anti, a, d, c), b);
}

MagmaPoly weak_right_commutativity() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return anti(anti(anti(a, b), c), d) - anti(anti(anti(a, b), d), c);
}

MagmaPoly tortken() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return anti(anti(a, b), anti(c, d)) - anti(anti(a, d), anti(c, b)) -
         anti(associator(NodeOp::anti, a, b, c), d) +
         anti(associator(NodeOp::anti, a, d, c), b);
}

MagmaPoly rewriting_1() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return anti(anti(a, c), anti(b, d)) - anti(anti(a, b), anti(c, d)) +
         anti(anti(anti(a, b), c), d) + anti(anti(anti(c, d), a), b) -
         anti(anti(anti(a, c), b), d) - anti(anti(anti(b, d), a), c);
}

MagmaPoly rewriting_2() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return anti(anti(a, d), anti(b, c)) - anti(anti(a, b), anti(c, d)) +
         anti(anti(anti(a, b), c), d) + anti(anti(anti(c, d), a), b) -
         anti(anti(anti(a, d), b), c) - anti(anti(anti(b, c), a), d);
}

MagmaPoly commutativity_plain() {
  auto a = var("a"), b = var("b");
  return mul(a, b) - mul(b, a);
}

MagmaPoly anticommutativity_plain() {
  auto a = var("a"), b = var("b");
  return mul(a, b) + mul(b, a);
}

MagmaPoly jacobi_plain() {
  auto a = var("a"), b = var("b"), c = var("c");
  return mul(mul(a, b), c) + mul(mul(b, c), a) + mul(mul(c, a), b);
}

MagmaPoly metabelian_plain() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return mul(mul(a, b), mul(c, d));
}

MagmaPoly minus_tortken_plain() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return mul(mul(a, b), mul(c, d)) - mul(mul(a, d), mul(c, b)) +
         mul(mul(a, mul(b, c)), d) - mul(mul(mul(a, b), c), d) -
         mul(mul(a, mul(d, c)), b) + mul(mul(mul(a, d), c), b);
}

MagmaPoly weak_right_commutativity_plain() {
  auto a = var("a"), b = var("b"), c = var("c"), d = var("d");
  return mul(mul(mul(a, b), c), d) - mul(mul(mul(a, b), d), c);
}

std::optional<MagmaPoly> by_name(const std::string& name) {
  if (name == "left-commutativity") return left_commutativity();
  if (name == "right-commutativity") return right_commutativity();
  if (name == "anticommutativity") return anticommutativity();
  if (name == "jacobi") return jacobi();
  if (name == "metabelian") return metabelian();
  if (name == "minus-tortken") return minus_tortken();
  if (name == "weak-right-commutativity") return weak_right_commutativity();
  if (name == "tortken") return tortken();
  if (name == "rewriting-1") return rewriting_1();
  if (name == "rewriting-2") return rewriting_2();
  return std::nullopt;
}

std::vector<std::string> known_names() {
  return {"left-commutativity",  "right-commutativity",
          "anticommutativity",   "jacobi",
          "metabelian",          "minus-tortken",
          "weak-right-commutativity", "tortken",
          "rewriting-1",         "rewriting-2"};
}

}  // namespace bicomlab::identities
