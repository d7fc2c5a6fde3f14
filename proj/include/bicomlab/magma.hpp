#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicomlab/bicom_element.hpp"
#include "bicomlab/magma_tree.hpp"
#include "bicomlab/rational.hpp"

namespace bicomlab {

/// Rational linear combination of magma trees over named variables. Like
/// terms merge, zero coefficients are dropped.
class MagmaPoly {
 public:
  MagmaPoly() = default;

  static MagmaPoly zero() { return {}; }
  static MagmaPoly from_tree(const MagmaTree& t) { return term(1, t); }
  static MagmaPoly variable(const Generator& g) { return from_tree(MagmaTree::leaf(g)); }
  static MagmaPoly term(const Rational& c, const MagmaTree& t);

  bool is_zero() const { return terms_.empty(); }
  const std::map<MagmaTree, Rational>& terms() const { return terms_; }

  MagmaPoly operator-() const;
  MagmaPoly& operator+=(const MagmaPoly& o);
  MagmaPoly& operator-=(const MagmaPoly& o);
  MagmaPoly& operator*=(const Rational& c);
  friend MagmaPoly operator+(MagmaPoly a, const MagmaPoly& b) { return a += b; }
  friend MagmaPoly operator-(MagmaPoly a, const MagmaPoly& b) { return a -= b; }
  friend MagmaPoly operator*(const Rational& c, MagmaPoly p) { return p *= c; }
  friend bool operator==(const MagmaPoly&, const MagmaPoly&) = default;

  /// Formal bilinear combination: every term of a joined with every term of b
  /// under a node with the given label.
  static MagmaPoly combine(NodeOp op, const MagmaPoly& a, const MagmaPoly& b);

  std::set<Generator> variables() const;
  /// Every monomial uses each variable of the polynomial exactly once.
  bool is_multilinear() const;

  /// Simultaneous substitution; every variable of the polynomial must be
  /// mapped.
  MagmaPoly substitute(const std::map<Generator, MagmaTree>& sigma) const;

  std::string str() const;

 private:
  void add(const MagmaTree& t, const Rational& c);
  std::map<MagmaTree, Rational> terms_;
};

/// Evaluation in the free bicommutative algebra. Plain nodes take the chosen
/// product; com/anti nodes are always xy-yx and xy+yx.
BicomElement eval_bicom(const MagmaTree& t, NodeOp product,
                        const std::map<Generator, BicomElement>& sigma);
BicomElement eval_bicom(const MagmaPoly& p, NodeOp product,
                        const std::map<Generator, BicomElement>& sigma);

/// Evaluation with each variable standing for itself.
BicomElement eval_bicom_symbolic(const MagmaPoly& p, NodeOp product);

/// Whether the polynomial vanishes identically in every bicommutative
/// algebra (equivalently, under symbolic evaluation).
bool holds_in_bicom(const MagmaPoly& identity, NodeOp product);

/// Finite-dimensional algebra given by structure constants; no algebraic
/// laws are assumed. e_i e_j = sum_k c[i][j][k] e_k.
class FiniteAlgebra {
 public:
  using Coords = std::vector<Rational>;

  FiniteAlgebra(std::vector<std::string> basis_names,
                std::vector<std::vector<Coords>> structure);

  /// {"dim":4,"basis":[...],"products":[{"i":1,"j":1,"out":{"e1":"1"}},...]}
  /// with 1-based indices; unspecified products are zero.
  static FiniteAlgebra from_json(const nlohmann::json& j);
  static FiniteAlgebra load(const std::string& path_or_name);

  /// The built-in 4-dimensional Jordan algebra with e1 idempotent,
  /// e1 e2 = e2 e1 = e2/2 and all other products zero.
  static const FiniteAlgebra& martin_a();

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis() const { return names_; }
  Coords basis_vector(int i) const;

  Coords product(const Coords& u, const Coords& v) const;

  std::string format(const Coords& v) const;  // e.g. "1/4*e2", "0"

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Coords>> c_;  // c_[i][j] = coordinates of e_i e_j
};

/// Evaluation with coordinate vectors. Plain nodes use the algebra product;
/// bracket nodes use the normalized derived products [u,v] = (uv-vu)/2 and
/// {u,v} = (uv+vu)/2, so on a commutative algebra {u,v} is the product
/// itself.
FiniteAlgebra::Coords eval_finite(const MagmaTree& t, const FiniteAlgebra& a,
                                  const std::map<Generator, FiniteAlgebra::Coords>& sigma);
FiniteAlgebra::Coords eval_finite(const MagmaPoly& p, const FiniteAlgebra& a,
                                  const std::map<Generator, FiniteAlgebra::Coords>& sigma);

struct FiniteCheck {
  bool holds = true;
  std::map<Generator, int> witness;  // variable -> 0-based basis index
  FiniteAlgebra::Coords value;
};

/// Exhaustive check over all basis assignments (sufficient by
/// multilinearity). Throws on non-multilinear identities. Assignments are
/// swept in lexicographic order of (variable name, basis index) and the
/// first failure is reported.
FiniteCheck holds_in_finite(const MagmaPoly& identity, const FiniteAlgebra& a);

}  // namespace bicomlab
