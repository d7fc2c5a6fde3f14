#include "bicomlab/magma_tree.hpp"

#include <stdexcept>

namespace bicomlab {

MagmaTree MagmaTree::leaf(const Generator& g) {
  auto n = std::make_shared<Node>();
  n->leaf = g;
  n->repr = g.name();
  return MagmaTree(std::move(n));
}

MagmaTree MagmaTree::node(NodeOp op, const MagmaTree& l, const MagmaTree& r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->l = l.p_;
  n->r = r.p_;
  n->degree = l.degree() + r.degree();
  n->plain_only = op == NodeOp::plain && l.all_plain() && r.all_plain();
  switch (op) {
    case NodeOp::plain:
      n->repr = "(" + l.str() + "*" + r.str() + ")";
      break;
    case NodeOp::com:
      n->repr = "[" + l.str() + "," + r.str() + "]";
      break;
    case NodeOp::anti:
      n->repr = "{" + l.str() + "," + r.str() + "}";
      break;
  }
  return MagmaTree(std::move(n));
}

const Generator& MagmaTree::gen() const {
  if (!is_leaf()) throw std::logic_error("gen() on an internal node");
  return *p_->leaf;
}

NodeOp MagmaTree::op() const {
  if (is_leaf()) throw std::logic_error("op() on a leaf");
  return p_->op;
}

MagmaTree MagmaTree::left() const {
  if (is_leaf()) throw std::logic_error("left() on a leaf");
  return MagmaTree(p_->l);
}

MagmaTree MagmaTree::right() const {
  if (is_leaf()) throw std::logic_error("right() on a leaf");
  return MagmaTree(p_->r);
}

Multidegree MagmaTree::multidegree() const {
  Multidegree md;
  auto walk = [&](auto&& self, const Node* n) -> void {
    if (n->leaf) {
      ++md[*n->leaf];
      return;
    }
    self(self, n->l.get());
    self(self, n->r.get());
  };
  walk(walk, p_.get());
  return md;
}

}  // namespace bicomlab
