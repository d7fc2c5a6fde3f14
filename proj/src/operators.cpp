#include "bicomlab/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicomlab {

BicomElement commutator(const BicomElement& f, const BicomElement& g) {
  return multiply(f, g) - multiply(g, f);
}

BicomElement anticommutator(const BicomElement& f, const BicomElement& g) {
  return multiply(f, g) + multiply(g, f);
}

namespace {

BicomElement apply_op(NodeOp op, const BicomElement& a, const BicomElement& b) {
  switch (op) {
    case NodeOp::com:
      return commutator(a, b);
    case NodeOp::anti:
      return anticommutator(a, b);
    case NodeOp::plain:
      return multiply(a, b);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BicomElement left_normed(NodeOp op, std::span<const BicomElement> factors) {
  if (factors.size() < 2) throw std::invalid_argument("left_normed needs at least 2 factors");
  BicomElement acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = apply_op(op, acc, factors[i]);
  return acc;
}

BicomElement left_normed(NodeOp op, std::span<const Generator> vars) {
  std::vector<BicomElement> fs;
  fs.reserve(vars.size());
  for (const auto& g : vars) fs.push_back(BicomElement::generator(g));
  return left_normed(op, fs);
}

BicomElement dynkin(const BicomElement& f) {
  BicomElement out;
  for (const auto& [w, c] : f.terms()) {
    if (w.is_generator()) {
      out += c * BicomElement::word(w);
      continue;
    }
    // [[...[[a_1,b_1],b_2]...],b_l], then wrap with a_2, ..., a_k from the
    // left, innermost first.
    BicomElement acc = BicomElement::generator(w.col()[0]);
    for (const auto& y : w.row()) acc = commutator(acc, BicomElement::generator(y));
    for (std::size_t i = 1; i < w.col().size(); ++i)
      acc = commutator(BicomElement::generator(w.col()[i]), acc);
    out += (c / 2) * acc;
  }
  return out;
}

BicomElement head(const BicomElement& f) {
  if (!f.is_multilinear()) throw std::invalid_argument("head requires multilinear element");
  auto gens = f.generators();
  if (gens.empty()) return f;  // zero
  const Generator x1 = *gens.begin();
  BicomElement out;
  for (const auto& [w, c] : f.terms()) {
    if (w.is_generator()) {
      out += c * BicomElement::word(w);  // degree-1 slice is its own head
      continue;
    }
    bool row_shape = w.col().size() == 1 && w.col()[0] != x1;
    bool hook_shape = w.row().size() == 1 && w.row()[0] != x1;
    if (row_shape || hook_shape) out += c * BicomElement::word(w);
  }
  return out;
}

BicomElement tail(const BicomElement& f) { return f - head(f); }

bool is_jordan(const BicomElement& f) { return involute(f) == f; }

bool is_lie(const BicomElement& f) {
  if (!f.is_multilinear()) throw std::invalid_argument("is_lie requires multilinear element");
  return dynkin(head(f)) == f;
}

namespace {

MagmaPoly anti_expr(const MagmaPoly& a, const MagmaPoly& b) {
  return MagmaPoly::combine(NodeOp::anti, a, b);
}

MagmaPoly leaf_expr(const Generator& g) { return MagmaPoly::variable(g); }

std::vector<Generator> without_index(const std::vector<Generator>& v, std::size_t i) {
  std::vector<Generator> out(v);
  out.erase(out.begin() + i);
  return out;
}

// Anticommutator expression expanding to w + w* for a pair word w, by the
// symmetric-element recursion. Peels the largest column entry while the
// column has two or more boxes, then works down the row.
MagmaPoly jordan_plus_expr(const BasisWord& w) {
  const auto& col = w.col();
  const auto& row = w.row();
  if (w.degree() == 2)  // {x1, y1}
    return anti_expr(leaf_expr(col[0]), leaf_expr(row[0]));

  if (col.size() >= 2) {
    // w^(+) = {T^(+), m} - (T with m moved to the row)^(+), m = max column box
    const Generator m = col.back();
    std::vector<Generator> rest(col.begin(), col.end() - 1);
    MagmaPoly t = jordan_plus_expr(BasisWord::pair(rest, row));
    std::vector<Generator> grown(row);
    grown.push_back(m);
    return anti_expr(t, leaf_expr(m)) - jordan_plus_expr(BasisWord::pair(rest, grown));
  }

  // Single-row shape. Base: ((x1 y1) y2)^(+) as the three-term half sum.
  if (row.size() == 2) {
    MagmaPoly a = leaf_expr(col[0]), b = leaf_expr(row[0]), c = leaf_expr(row[1]);
    MagmaPoly e = anti_expr(anti_expr(a, b), c) + anti_expr(anti_expr(a, c), b) -
                  anti_expr(anti_expr(b, c), a);
    return Rational(1, 2) * e;
  }

  // w^(+) = 1/2 {T1^(+), m1} + 1/2 {T2^(+), m2} - 1/4 {T3^(+), {m2,m1}}
  // where m1, m2 are the two largest row boxes and Ti drop them.
  const std::size_t n = row.size();
  const Generator m1 = row[n - 1], m2 = row[n - 2];
  MagmaPoly t1 = jordan_plus_expr(BasisWord::pair(col, without_index(row, n - 1)));
  MagmaPoly t2 = jordan_plus_expr(BasisWord::pair(col, without_index(row, n - 2)));
  std::vector<Generator> short_row(row.begin(), row.end() - 2);
  MagmaPoly t3 = jordan_plus_expr(BasisWord::pair(col, short_row));
  return Rational(1, 2) * anti_expr(t1, leaf_expr(m1)) +
         Rational(1, 2) * anti_expr(t2, leaf_expr(m2)) -
         Rational(1, 4) * anti_expr(t3, anti_expr(leaf_expr(m2), leaf_expr(m1)));
}

}  // namespace

BracketExpr jordan_express(const BicomElement& f) {
  if (!is_jordan(f)) throw std::domain_error("not a Jordan element");
  MagmaPoly expr;
  for (const auto& [w, c] : f.terms()) {
    if (w.is_generator()) {
      expr += c * leaf_expr(w.gen());
      continue;
    }
    BasisWord conj = w.involute();
    if (w == conj) {
      expr += (c / 2) * jordan_plus_expr(w);
    } else if (w < conj) {
      expr += c * jordan_plus_expr(w);  // covers the conjugate term as well
    }
  }
  if (eval_bicom_symbolic(expr, NodeOp::plain) != f)
    throw std::logic_error("jordan_express: expansion mismatch");
  return expr;
}

BracketExpr lie_express(const BicomElement& f) {
  if (!f.is_multilinear()) throw std::invalid_argument("lie_express requires multilinear element");
  if (f.is_zero()) return MagmaPoly::zero();

  auto gens = f.generators();
  std::vector<Generator> vars(gens.begin(), gens.end());
  const std::size_t n = vars.size();
  if (n == 1) return f.coefficient(BasisWord::generator(vars[0])) * leaf_expr(vars[0]);

  // lambda_i is (up to the parity sign) the coefficient of the hook word
  // with x_i alone in the row and everything else in the column.
  const int sign = n % 2 == 0 ? 1 : -1;
  MagmaPoly expr;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Generator> colv(vars);
    colv.erase(colv.begin() + i);
    Rational lambda = sign * f.coefficient(BasisWord::pair(colv, {vars[i]}));
    if (lambda == 0) continue;
    MagmaPoly bracket = MagmaPoly::combine(NodeOp::com, leaf_expr(vars[0]), leaf_expr(vars[i]));
    for (std::size_t j = 1; j < n; ++j) {
      if (j == i) continue;
      bracket = MagmaPoly::combine(NodeOp::com, bracket, leaf_expr(vars[j]));
    }
    expr += lambda * bracket;
  }
  if (eval_bicom_symbolic(expr, NodeOp::plain) != f)
    throw std::domain_error("not a Lie element");
  return expr;
}

BicomElement lie_expansion_rhs(std::span<const Generator> vars) {
  if (vars.size() < 2) throw std::invalid_argument("lie_expansion_rhs needs at least 2 variables");
  std::set<Generator> distinct(vars.begin(), vars.end());
  if (distinct.size() != vars.size()) throw std::invalid_argument("repeated variables");

  const std::size_t n = vars.size();
  const bool odd = n % 2 == 1;
  std::vector<Generator> tailv(vars.begin() + 2, vars.end());
  BicomElement out;
  // Sum over splittings of v3..vn between row and column, alternating in the
  // column size; v1 stays in the column, v2 in the row.
  for (unsigned long mask = 0; mask < (1ul << tailv.size()); ++mask) {
    std::vector<Generator> col{vars[0]}, row{vars[1]};
    for (std::size_t i = 0; i < tailv.size(); ++i)
      (mask >> i & 1 ? row : col).push_back(tailv[i]);
    int parity = static_cast<int>(col.size()) - 1;
    Rational c = parity % 2 == 0 ? 1 : -1;
    BicomElement w = BicomElement::word(BasisWord::pair(col, row));
    out += c * (odd ? plus_part(w) : minus_part(w));
  }
  return out;
}

}  // namespace bicomlab
