#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bicomlab/exactlin.hpp"
#include "bicomlab/magma.hpp"
#include "bicomlab/operators.hpp"
#include "bicomlab/report.hpp"
#include "bicomlab/sparse_elim.hpp"

namespace bicomlab::consequences {

/// Variables x1..xn (n <= 9 so name order matches index order).
std::vector<Generator> standard_vars(int n);

/// All multilinear plain monomials on the given variables; count is
/// |vars|! * Catalan(|vars|-1).
std::vector<MagmaTree> monomials_on(const std::vector<Generator>& vars);

long long catalan(int n);
long long multilinear_monomial_count(int n);  // n! * Catalan(n-1)

/// How node flips (swapping the two children) are quotiented out:
/// not at all, with sign +1 (commutative), or with sign -1 (anticommutative).
enum class FlipMode { none, commutative, anticommutative };

/// Multilinear plain monomials on a fixed variable set, modulo node flips
/// under the chosen mode. The class representative is the flip-minimal tree.
class FlipClassSpace {
 public:
  FlipClassSpace(std::vector<Generator> vars, FlipMode mode);

  int degree() const { return static_cast<int>(vars_.size()); }
  FlipMode mode() const { return mode_; }
  long long monomial_count() const { return monomial_count_; }
  int class_count() const { return static_cast<int>(reps_.size()); }
  const MagmaTree& representative(int cls) const { return reps_.at(cls); }

  /// (class index, +-1). The monomial must use exactly this space's leaves.
  std::pair<int, int> project_monomial(const MagmaTree& t) const;
  SparseVec project(const MagmaPoly& p) const;

 private:
  std::vector<Generator> vars_;
  FlipMode mode_;
  long long monomial_count_ = 0;
  std::vector<MagmaTree> reps_;
  std::map<std::string, int> index_;
};

/// Rank of the evaluation map from degree-n multilinear magma monomials into
/// the free bicommutative algebra, with plain nodes read as the given
/// product. Equals the dimension of the multilinear Lie (com) or Jordan
/// (anti) slice.
long long image_rank(int n, NodeOp product);

/// Enumerates the degree-n multilinear consequence instances of a
/// multilinear generator identity: every one-hole context filled with every
/// monomial substitution instance. The callback returns false to stop early.
void for_each_instance(const MagmaPoly& generator, const std::vector<Generator>& vars,
                       const std::function<bool(const MagmaPoly&)>& emit);

/// Row space of all degree-n multilinear consequences of the generators in
/// the plain magma. A degree-2 generator of the form ab -+ ba is applied as
/// a signed quotient by node flips; the remaining generators contribute
/// instance rows reduced in a sparse eliminator.
class ConsequenceSpan {
 public:
  int degree() const { return space_->degree(); }
  long long ambient_dim() const { return space_->monomial_count(); }
  long long dim() const;
  /// Membership of a multilinear polynomial on the same variables.
  bool contains(const MagmaPoly& p) const;
  const FlipClassSpace& classes() const { return *space_; }
  long long projected_rank() const { return static_cast<long long>(elim_.rank()); }

 private:
  friend ConsequenceSpan consequence_span(const std::vector<MagmaPoly>&, int,
                                          std::optional<long long>);
  std::shared_ptr<const FlipClassSpace> space_;
  SparseEliminator elim_;
  bool flip_quotient_ = false;
};

/// dim_cap, when given, must be a proven upper bound for the span dimension
/// (e.g. the kernel dimension once every generator is known to vanish
/// identically); row insertion then stops as soon as it is reached.
ConsequenceSpan consequence_span(const std::vector<MagmaPoly>& generators, int n,
                                 std::optional<long long> dim_cap = std::nullopt);

/// Kernel of the evaluation of degree-n multilinear magma polynomials in the
/// free bicommutative algebra under the given product.
class EvaluationKernel {
 public:
  EvaluationKernel(int n, NodeOp product);
  int degree() const { return n_; }
  long long ambient_dim() const { return ambient_; }
  long long image_rank() const { return rank_; }
  long long dim() const { return ambient_ - rank_; }
  /// Membership: the polynomial evaluates to zero.
  bool contains(const MagmaPoly& p) const { return holds_in_bicom(p, product_); }
  /// Explicit basis, one row per kernel vector over the monomial coordinates
  /// of monomials_on(standard_vars(n)); materialized for n <= 5 only.
  RationalMatrix basis() const;

 private:
  int n_;
  NodeOp product_;
  long long ambient_ = 0, rank_ = 0;
};

EvaluationKernel evaluation_kernel(int n, NodeOp product);

/// The n-1 left-normed metabelian basis brackets [[..[[x1,xi],xj]..],xn]
/// (tail ascending), expanded in the free algebra.
std::vector<BicomElement> metabelian_images(int n);

/// The 2^{n-1}-1 multilinear anticommutator spanning words: a left comb of
/// sorted pairs followed by sorted single variables.
std::vector<BicomElement> jordan_spanning_images(int n);

/// Coordinate matrix of elements over the union of their basis words.
RationalMatrix coordinate_matrix(const std::vector<BicomElement>& elements);

Report verify_theorem1(int n);
Report verify_theorem2(int n);
Report verify_degree4_independence();
Report verify_section7();
Report verify_filtration(int n);
Report verify_corollary1(int n);
Report verify_oracle(int max_degree);

}  // namespace bicomlab::consequences
