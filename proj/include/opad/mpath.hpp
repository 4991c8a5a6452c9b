#pragma once

#include <utility>
#include <vector>

#include "opad/ordinal.hpp"

namespace opad {

/// A binary operation of the paths operad: a functor
/// <m+1> -> <p+1> x <q+1>, stored as the endpoint-anchored list of the
/// images of the m+2 source objects.  Coordinates are componentwise
/// nondecreasing, points.front() == (0,0), points.back() == (p+1,q+1).
struct MPath {
  int m = 0;
  int p = 0;
  int q = 0;
  std::vector<std::pair<int, int>> points;

  MPath() : points{{0, 0}, {1, 1}} {}
  MPath(int m_, int p_, int q_, std::vector<std::pair<int, int>> points_);

  bool operator==(const MPath&) const = default;
  bool operator<(const MPath& o) const;

  std::pair<int, int> step(int i) const;  // image size of generator bar_i
  IntervalMap proj_x() const;
  IntervalMap proj_y() const;
  /// Joyal duals of the two projections: (tau, pi) with tau : [p] -> [m].
  std::pair<OrdinalMap, OrdinalMap> dual_pair() const;
  std::vector<int> supp_x() const;
  std::vector<int> supp_y() const;
};

/// An interleaved block decomposition of a pair of finite subsets of the
/// naturals: A_1 < ... < A_s and B_1 < ... < B_t of length s+t-1, chained
/// as A_1 <= B_1 <= A_2 <= ... or B_1 <= A_1 <= B_2 <= ...
struct Shuffling {
  std::vector<std::vector<int>> a_blocks;
  std::vector<std::vector<int>> b_blocks;
  bool a_first = true;

  int length() const;
  /// 1-based position of the j-th A-block in the interleaved chain.
  int a_chain_pos(int j) const { return a_first ? 2 * j + 1 : 2 * j + 2; }
  int b_chain_pos(int j) const { return a_first ? 2 * j + 2 : 2 * j + 1; }
};

MPath mpath_from_maps(const OrdinalMap& tau, const OrdinalMap& pi);

/// All shufflings of a pair of sets, in deterministic order
/// (by length, then chain side, then cut positions).
std::vector<Shuffling> enumerate_shufflings(const std::vector<int>& a,
                                            const std::vector<int>& b);
std::vector<Shuffling> enumerate_shufflings(const OrdinalMap& tau,
                                            const OrdinalMap& pi);
std::vector<Shuffling> enumerate_shufflings(const MPath& phi);

/// Minimal shuffling length.  If exactly one of the sets is empty the
/// value is 1 (a single block), 0 if both are empty.
int linking_number(const std::vector<int>& a, const std::vector<int>& b);
int linking_number(const OrdinalMap& tau, const OrdinalMap& pi);
int linking_number(const MPath& phi);

bool n_equivalent(const MPath& phi, int n);

struct PathClass {
  bool surjective = false;
  bool injective = false;
  bool delannoy = false;
  bool sharp = false;
  bool smooth = false;
  std::vector<std::pair<int, int>> low_corners;
  std::vector<std::pair<int, int>> upper_corners;
};

PathClass classify(const MPath& phi);

/// Lemma "cont": phi = (post_x x post_y) . surj with lk preserved.
struct SurjFactorization {
  MPath surj;
  IntervalMap post_x, post_y;
};
SurjFactorization factor_surjective(const MPath& phi);

/// Lemma "nond": phi = inj . pre with lk preserved; pre collapses stops.
struct InjFactorization {
  IntervalMap pre;
  MPath inj;
};
InjFactorization factor_injective(const MPath& phi);

/// Lemma "sharpening": a Delannoy path factors through a sharp Delannoy
/// path on the same rectangle, cutting each diagonal step in two.
struct SharpFactorization {
  IntervalMap pre;  // <m+1> -> <m'+1>
  MPath sharp;
};
SharpFactorization sharpen(const MPath& phi);

/// Lemma "smoothfactorisation": iterated leftmost-corner removal.  The
/// rectangle grows by one per removed corner; phi = (post_x x post_y) . smooth.
struct SmoothFactorization {
  MPath smooth;
  IntervalMap post_x, post_y;
};
SmoothFactorization smooth_factor(const MPath& phi);

/// All Delannoy paths (0,0) -> (p+1,q+1), lexicographic in the step word
/// with diagonal < east < north.
std::vector<MPath> enumerate_delannoy(int p, int q);

/// All smooth paths <m+1> -> <p+1> x <q+1> with linking number exactly n
/// (m = p+q+1-n is forced), same step-word order.
std::vector<MPath> enumerate_smooth(int p, int q, int n);

/// Delannoy number D(a,b) by the recurrence, as an independent oracle.
long long delannoy_number(int a, int b);

}  // namespace opad
