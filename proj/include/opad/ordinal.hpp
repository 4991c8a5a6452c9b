#pragma once

#include <utility>
#include <vector>

namespace opad {

/// A nondecreasing map [p] -> [m] between finite ordinals [n] = {0,...,n},
/// stored by its value vector (values.size() == dom+1, entries in 0..cod).
struct OrdinalMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  OrdinalMap() : values{0} {}
  OrdinalMap(int dom_, int cod_, std::vector<int> values_);

  int operator()(int i) const { return values[static_cast<size_t>(i)]; }
  bool operator==(const OrdinalMap&) const = default;
  bool operator<(const OrdinalMap& o) const;

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;
  std::vector<int> image() const;
};

/// A morphism of intervals <n> -> <m>, determined by its object map
/// (intervals are freely generated posets).  obj[0] == 0, obj[n] == m.
struct IntervalMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> obj;

  IntervalMap() : obj{0} {}
  IntervalMap(int dom_, int cod_, std::vector<int> obj_);

  int operator()(int i) const { return obj[static_cast<size_t>(i)]; }
  bool operator==(const IntervalMap&) const = default;
  bool is_identity() const;

  /// Generators bar_i with a nontrivial image, i.e. obj[i+1] > obj[i].
  std::vector<int> support() const;
};

OrdinalMap ordinal_identity(int n);
IntervalMap interval_identity(int n);

/// The coface d_i : [n] -> [n+1], the increasing injection missing i.
OrdinalMap coface(int i, int n);
/// The codegeneracy s_i : [n] -> [n-1], hitting i twice.
OrdinalMap codegeneracy(int i, int n);

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f);
IntervalMap compose(const IntervalMap& g, const IntervalMap& f);

/// Unique epi-mono factorisation f = mono . epi.
std::pair<OrdinalMap, OrdinalMap> epi_mono_factor(const OrdinalMap& f);

/// Joyal duality on morphisms: f : [m] -> [l] gives <l+1> -> <m+1>.
/// On objects the dual is i |-> #{ j : f(j) < i }.
IntervalMap joyal_dual(const OrdinalMap& f);
/// Inverse of joyal_dual: g : <l+1> -> <m+1> gives [m] -> [l].
OrdinalMap joyal_inverse(const IntervalMap& g);

/// Decomposition of an injection into cofaces: indices i_1 < ... < i_k of the
/// missed values; f = d_{i_k} . ... . d_{i_1} postcomposed onto the identity.
std::vector<int> coface_word(const OrdinalMap& mono);
/// Decomposition of a surjection into codegeneracies: f = s_{j_1} . ... read
/// left to right as applied first; each j is the smallest doubled index.
std::vector<int> codegeneracy_word(const OrdinalMap& epi);

/// All nondecreasing maps [p] -> [m] in lexicographic order.
std::vector<OrdinalMap> all_ordinal_maps(int p, int m);

/// tau_{m,n} : [n] -> [m+n] with values 0..n (misses n+1..n+m).
OrdinalMap tau_map(int m, int n);
/// pi_{m,n} : [m] -> [m+n] with values n..n+m (misses 0..n-1).
OrdinalMap pi_map(int m, int n);
/// tau^i_{m,n} : [n] -> [m+n-1], missing i+1..i+m-1.
OrdinalMap tau_i_map(int m, int n, int i);
/// pi^i_{m,n} : [m] -> [m+n-1] with values i..i+m.
OrdinalMap pi_i_map(int m, int n, int i);

}  // namespace opad
