#pragma once

#include <optional>
#include <vector>

#include "bicomlab/basis_word.hpp"
#include "bicomlab/magma_tree.hpp"

namespace bicomlab::oracle {

inline constexpr int kDefaultDegreeBound = 7;

/// All plain magma words with exactly the given leaf multiset.
std::vector<MagmaTree> enumerate_words(const Multidegree& md,
                                       int degree_bound = kDefaultDegreeBound);

/// Single-step neighbours of w under the unoriented rewrites
/// a(bc) <-> b(ac) and (ab)c <-> (ac)b, applied at every subterm.
std::vector<MagmaTree> rewrite_neighbours(const MagmaTree& w);

/// Equivalence classes of all words with the given multidegree under the two
/// rewrites. Classes and their members are sorted for determinism.
std::vector<std::vector<MagmaTree>> closure_classes(const Multidegree& md,
                                                    int degree_bound = kDefaultDegreeBound);

/// The full equivalence class of w (breadth-first closure from w alone).
std::vector<MagmaTree> closure_of(const MagmaTree& w, int degree_bound = kDefaultDegreeBound);

/// Decodes w if it literally is a canonical tableau word
/// x_k(...(x_2((...((x_1 y_1) y_2)...) y_l))...) with sorted column and row;
/// nullopt otherwise. Independent of the closed product rule.
std::optional<BasisWord> match_canonical_pattern(const MagmaTree& w);

/// The unique basis word whose defining bracketing lies in w's class.
/// Throws "oracle/basis mismatch" if the class does not contain exactly one
/// canonical-pattern word.
BasisWord oracle_canonical(const MagmaTree& w, int degree_bound = kDefaultDegreeBound);

}  // namespace bicomlab::oracle
