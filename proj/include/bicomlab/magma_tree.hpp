#pragma once

#include <memory>
#include <optional>
#include <string>

#include "bicomlab/generator.hpp"

namespace bicomlab {

enum class NodeOp { plain, com, anti };

/// Immutable binary tree over generators. Internal nodes carry an operation
/// label: plain magma product, commutator or anticommutator. Plain-only trees
/// are the magma words of the rewrite oracle; labeled trees double as bracket
/// expressions. Equality and ordering go through the cached serialization
/// ("(a*b)", "[a,b]", "{a,b}").
class MagmaTree {
 public:
  static MagmaTree leaf(const Generator& g);
  static MagmaTree node(NodeOp op, const MagmaTree& l, const MagmaTree& r);
  static MagmaTree product(const MagmaTree& l, const MagmaTree& r) {
    return node(NodeOp::plain, l, r);
  }

  bool is_leaf() const { return p_->leaf.has_value(); }
  const Generator& gen() const;
  NodeOp op() const;
  MagmaTree left() const;
  MagmaTree right() const;

  int degree() const { return p_->degree; }
  bool all_plain() const { return p_->plain_only; }
  Multidegree multidegree() const;

  const std::string& str() const { return p_->repr; }

  friend bool operator==(const MagmaTree& a, const MagmaTree& b) {
    return a.p_ == b.p_ || a.str() == b.str();
  }
  friend bool operator<(const MagmaTree& a, const MagmaTree& b) { return a.str() < b.str(); }

 private:
  struct Node {
    NodeOp op = NodeOp::plain;
    std::optional<Generator> leaf;
    std::shared_ptr<const Node> l, r;
    int degree = 1;
    bool plain_only = true;
    std::string repr;
  };
  explicit MagmaTree(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

}  // namespace bicomlab
