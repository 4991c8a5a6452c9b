#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opad/mpath.hpp"
#include "opad/ordinal.hpp"

namespace opad {

/// An operation of the lattice paths operad: a unit-step monotone path on
/// the k-dimensional grid with vertex multiplicities.  word[i] in 1..k is
/// the direction of the i-th step; direction d occurs extents[d-1]+1 times.
/// labels has one entry per path vertex; the sum of labels is m+2 where
/// <m+1> is the source interval.  Endpoint labels are >= 1.
struct LatticePath {
  int arity = 0;
  std::vector<int> extents;
  std::vector<int> word;
  std::vector<int> labels;

  LatticePath() = default;
  LatticePath(int arity_, std::vector<int> extents_, std::vector<int> word_,
              std::vector<int> labels_);

  bool operator==(const LatticePath&) const = default;
  bool operator<(const LatticePath& o) const;

  int steps() const { return static_cast<int>(word.size()); }
  int source_degree() const;  // the m of <m+1>
  /// Vertex index of each source object, by accumulating labels.
  std::vector<int> object_vertices() const;
  /// Word slice between the vertices of objects j and j+1 (the image of
  /// generator bar_j), as [begin, end) step positions.
  std::vector<std::pair<int, int>> generator_chunks() const;
  bool is_shuffle() const;
};

int complexity_ij(const LatticePath& psi, int i, int j);
int complexity(const LatticePath& psi);

/// Order in which directions first move, as the list (d_1, ..., d_k).
std::vector<int> first_movement(const LatticePath& psi);

/// Operadic substitution at slot i (1-based).
LatticePath compose_at(const LatticePath& psi, int i, const LatticePath& omega);

/// Projection to the paths operad (binary paths): forgets step order
/// between stops, keeps stops.
MPath project_to_m(const LatticePath& psi);
/// Componentwise projections <m+1> -> <extents[i]+1> for any arity.
std::vector<IntervalMap> project_components(const LatticePath& psi);

/// The lifting attached to a shuffling (shared generators move x first
/// exactly when their A-block precedes their B-block in the chain).
LatticePath lift(const MPath& phi, const Shuffling& sh);
/// All liftings of a binary path (all unit-step interpolations).
std::vector<LatticePath> enumerate_liftings(const MPath& phi);
int min_lifting_complexity(const MPath& phi);

/// Unique factorisation through a shuffle path: psi = shuffle . pre.
struct ShuffleFactorization {
  IntervalMap pre;
  LatticePath shuffle;
};
ShuffleFactorization shuffle_factor(const LatticePath& psi);

/// The permutation of {0,...,n} attached to a shuffle path
/// (mu(i) = j + sum of earlier deck sizes for the j-th step in its deck).
std::vector<int> shuffle_permutation(const LatticePath& shuffle);
int permutation_sign(const std::vector<int>& perm);
/// sgn(psi) = parity of the shuffle permutation of psi's shuffle factor.
int path_sign(const LatticePath& psi);

bool is_normal(const LatticePath& psi);
/// Degenerate iff some internal non-corner vertex has label 0.
bool is_degenerate(const LatticePath& psi);
/// Binary path whose projection is a smooth path of the paths operad.
bool is_smooth_lattice(const LatticePath& psi);

/// Normal lattice paths of complexity exactly n on (p,q), split by first
/// movement: first = even (direction 1 first), second = odd.
std::pair<std::vector<LatticePath>, std::vector<LatticePath>> enumerate_normal(
    int p, int q, int n);
/// Normal liftings of smooth paths with linking number exactly n.
std::pair<std::vector<LatticePath>, std::vector<LatticePath>>
enumerate_smooth_lp(int p, int q, int n);

/// Text form: word digits, then '|', then comma-separated labels,
/// e.g. "1221|1,0,1,0,1".
std::string to_text(const LatticePath& psi);
LatticePath lattice_from_text(const std::string& text);

}  // namespace opad
