#pragma once

#include <span>
#include <vector>

#include "bicomlab/bicom_element.hpp"
#include "bicomlab/magma.hpp"

namespace bicomlab {

/// Bracket expressions are magma polynomials whose nodes carry com/anti
/// labels; evaluating one in the free bicommutative algebra goes through
/// eval_bicom_symbolic.
using BracketExpr = MagmaPoly;

BicomElement commutator(const BicomElement& f, const BicomElement& g);
BicomElement anticommutator(const BicomElement& f, const BicomElement& g);

/// ((...((v1 o v2) o v3)...) o vn) expanded in the free algebra. Needs at
/// least two factors; op must be com or anti.
BicomElement left_normed(NodeOp op, std::span<const Generator> vars);
BicomElement left_normed(NodeOp op, std::span<const BicomElement> factors);

/// Linear map sending the pair (a_1..a_k | b_1..b_l) to
/// [a_k,[...[a_2,[[...[[a_1,b_1],b_2]...],b_l]]...]] / 2 and a generator to
/// itself.
BicomElement dynkin(const BicomElement& f);

/// Projection of a multilinear element onto the basis words that keep the
/// minimal generator x1 in the second box of the single-row shape or in the
/// first column of the single-row-tail shape; tail(f) = f - head(f).
/// Multilinear input required.
BicomElement head(const BicomElement& f);
BicomElement tail(const BicomElement& f);

/// f is a Jordan element iff it is fixed by the involution.
bool is_jordan(const BicomElement& f);

/// f (multilinear) is a Lie element iff dynkin(head(f)) == f.
bool is_lie(const BicomElement& f);

/// Anticommutator-only expression that expands exactly to f; requires
/// is_jordan(f). Deterministic: the recursion peels the largest column/row
/// entries first.
BracketExpr jordan_express(const BicomElement& f);

/// Commutator-only combination of the left-normed metabelian basis brackets
/// [[...[[x1,xi],xj]...],xn] that expands exactly to f; requires f
/// multilinear and Lie.
BracketExpr lie_express(const BicomElement& f);

/// Closed-form expansion of the left-normed commutator
/// [[...[[v1,v2],v3]...],vn] as an alternating sum of plus parts (n odd) or
/// minus parts (n even) of hook words. Variables must be distinct.
BicomElement lie_expansion_rhs(std::span<const Generator> vars);

}  // namespace bicomlab
