#pragma once

#include <vector>

#include "opad/lattice.hpp"

namespace opad {

/// A reduced word in idempotent variables 1..arity, each occurring at
/// least once (a surjection-operad basis element).
struct Sketch {
  int arity = 0;
  std::vector<int> word;

  bool operator==(const Sketch&) const = default;
  int length() const { return static_cast<int>(word.size()); }
};

/// Remove adjacent repetitions.
std::vector<int> reduce_word(const std::vector<int>& w);

Sketch sketch_of_word(int arity, const std::vector<int>& w);
Sketch sketch_of(const LatticePath& psi);

/// Reduce by all variables except var: the expansion (s)_var of the
/// sketch of the word at that variable.
std::vector<int> expand_except(const std::vector<int>& w, int var);

/// Project to the two-variable sketch on (i, j), renaming i -> 1, j -> 2.
Sketch project_ij(const Sketch& s, int i, int j);
int sketch_complexity_ij(const Sketch& s, int i, int j);
int sketch_complexity(const Sketch& s);

/// Substitute the word t into the expansion at `var` (occurrence counts
/// must match), renumber and reduce.
Sketch substitute(const std::vector<int>& expanded, int var,
                  const std::vector<int>& t, int t_arity, int s_arity);

/// Slot-1 word substitution on shuffle-path words (the operad F):
/// replaces the j-th occurrence of variable 1 in s by the j-th letter of t,
/// t-variables renumbered to 1..d and s-variables 1+c to d+c.
std::vector<int> word_substitute_slot1(const std::vector<int>& s, int s_arity,
                                       const std::vector<int>& t, int t_arity);

/// The five-step recipe for the complexity index c_{tvar, svar+d-1} of the
/// slot-1 composite (s)_1 . t, where tvar is a variable of t and
/// svar != 1 a variable of s.
int complexity_recipe(const std::vector<int>& s_expanded, int s_arity,
                      const std::vector<int>& t, int t_arity, int tvar,
                      int svar);

}  // namespace opad
