#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicomlab/magma.hpp"

namespace bicomlab::identities {

// Defining identities of the variety, as plain magma polynomials.
MagmaPoly left_commutativity();   // a*(b*c) - b*(a*c)
MagmaPoly right_commutativity();  // (a*b)*c - (a*c)*b

// Bracket-form identities of the derived products.
MagmaPoly anticommutativity();          // [a,b] + [b,a]
MagmaPoly jacobi();                     // [[a,b],c] + [[b,c],a] + [[c,a],b]
MagmaPoly metabelian();                 // [[a,b],[c,d]]
MagmaPoly minus_tortken();              // {{a,b},{c,d}} - {{a,d},{c,b}} + {(a,b,c),d} - {(a,d,c),b}
MagmaPoly weak_right_commutativity();   // {{{a,b},c},d} - {{{a,b},d},c}
MagmaPoly tortken();                    // candidate only; no truth value asserted
MagmaPoly rewriting_1();                // {{a,c},{b,d}} spanning rewrite, as lhs - rhs
MagmaPoly rewriting_2();                // {{a,d},{b,c}} spanning rewrite, as lhs - rhs

// The same identities written as plain trees, for the consequence engine
// (the plain product is then read as the derived product of interest).
MagmaPoly commutativity_plain();          // a*b - b*a
MagmaPoly anticommutativity_plain();      // a*b + b*a
MagmaPoly jacobi_plain();                 // (a*b)*c + (b*c)*a + (c*a)*b
MagmaPoly metabelian_plain();             // (a*b)*(c*d)
MagmaPoly minus_tortken_plain();
MagmaPoly weak_right_commutativity_plain();

// The associator {a,{b,c}} - {{a,b},c} under the given label.
MagmaPoly associator(NodeOp op, const MagmaPoly& a, const MagmaPoly& b, const MagmaPoly& c);

/// Named lookup used by the CLI; returns nullopt for unknown names.
std::optional<MagmaPoly> by_name(const std::string& name);
std::vector<std::string> known_names();

}  // namespace bicomlab::identities
