#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "bicomlab/bicom_element.hpp"
#include "bicomlab/magma.hpp"

namespace bicomlab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line(line),
        column(column) {}
  int line, column;
};

// Surface grammar:
//   expr := ['+'|'-']? term (('+'|'-') term)*
//   term := rational ('*' atom)* | atom ('*' atom)*
//   atom := ident | 'Y[' names '|' names ']' | '(' expr ')'
//         | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//         | 'assoc' '(' expr ',' expr ',' expr ')'
// '*' is left-associative and mandatory between atoms; juxtaposition is not
// multiplication. assoc(a,b,c) desugars to {a,{b,c}} - {{a,b},c}.

/// Parse into the free bicommutative algebra: '*' multiplies, brackets
/// expand to commutators/anticommutators, canonical words stand for
/// themselves.
BicomElement parse_element(const std::string& text);

/// Parse into a magma polynomial: '*' and brackets stay as labeled nodes.
/// Canonical Y[..] words are rejected in this target.
MagmaPoly parse_magma(const std::string& text);

/// "lhs = rhs" (single '=' at top level) or a bare expression (rhs = 0);
/// returns lhs - rhs.
MagmaPoly parse_identity(const std::string& text);

/// "x:1,y:2" -> multidegree.
Multidegree parse_multidegree(const std::string& text);

}  // namespace bicomlab
