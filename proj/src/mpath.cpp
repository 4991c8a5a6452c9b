#include "opad/mpath.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace opad {

MPath::MPath(int m_, int p_, int q_, std::vector<std::pair<int, int>> points_)
    : m(m_), p(p_), q(q_), points(std::move(points_)) {
  if (m < 0 || p < 0 || q < 0 || points.size() != static_cast<size_t>(m + 2))
    throw std::invalid_argument("MPath: bad point list length");
  if (points.front() != std::pair<int, int>{0, 0} ||
      points.back() != std::pair<int, int>{p + 1, q + 1})
    throw std::invalid_argument("MPath: endpoints not anchored");
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i].first < points[i - 1].first ||
        points[i].second < points[i - 1].second)
      throw std::invalid_argument("MPath: coordinates not nondecreasing");
}

bool MPath::operator<(const MPath& o) const {
  if (m != o.m) return m < o.m;
  if (p != o.p) return p < o.p;
  if (q != o.q) return q < o.q;
  return points < o.points;
}

std::pair<int, int> MPath::step(int i) const {
  auto a = points[static_cast<size_t>(i)];
  auto b = points[static_cast<size_t>(i) + 1];
  return {b.first - a.first, b.second - a.second};
}

IntervalMap MPath::proj_x() const {
  std::vector<int> o(points.size());
  for (size_t i = 0; i < points.size(); ++i) o[i] = points[i].first;
  return {m + 1, p + 1, std::move(o)};
}

IntervalMap MPath::proj_y() const {
  std::vector<int> o(points.size());
  for (size_t i = 0; i < points.size(); ++i) o[i] = points[i].second;
  return {m + 1, q + 1, std::move(o)};
}

std::pair<OrdinalMap, OrdinalMap> MPath::dual_pair() const {
  return {joyal_inverse(proj_x()), joyal_inverse(proj_y())};
}

std::vector<int> MPath::supp_x() const { return proj_x().support(); }
std::vector<int> MPath::supp_y() const { return proj_y().support(); }

int Shuffling::length() const {
  int s = static_cast<int>(a_blocks.size());
  int t = static_cast<int>(b_blocks.size());
  if (s == 0 && t == 0) return 0;
  if (s == 0 || t == 0) return std::max(s, t);
  return s + t - 1;
}

MPath mpath_from_maps(const OrdinalMap& tau, const OrdinalMap& pi) {
  if (tau.cod != pi.cod)
    throw std::invalid_argument("mpath_from_maps: codomain mismatch");
  IntervalMap dt = joyal_dual(tau), dp = joyal_dual(pi);
  int m = tau.cod;
  std::vector<std::pair<int, int>> pts(static_cast<size_t>(m) + 2);
  for (int a = 0; a <= m + 1; ++a)
    pts[static_cast<size_t>(a)] = {dt(a), dp(a)};
  return {m, tau.dom, pi.dom, std::move(pts)};
}

namespace {

// Interval decompositions of a sorted set into k nonempty blocks, as cut
// masks over the |s|-1 gaps.
void block_decompositions(const std::vector<int>& s, int k,
                          std::vector<std::vector<std::vector<int>>>& out) {
  int n = static_cast<int>(s.size());
  if (k < 1 || k > n) return;
  std::vector<int> cuts(static_cast<size_t>(k) - 1);
  // choose k-1 cut gaps out of n-1, lexicographically
  for (int i = 0; i < k - 1; ++i) cuts[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<std::vector<int>> blocks;
    int start = 0;
    for (int c = 0; c < k - 1; ++c) {
      int end = cuts[static_cast<size_t>(c)] + 1;
      blocks.emplace_back(s.begin() + start, s.begin() + end);
      start = end;
    }
    blocks.emplace_back(s.begin() + start, s.end());
    out.push_back(std::move(blocks));
    int i = k - 2;
    while (i >= 0 && cuts[static_cast<size_t>(i)] == n - 2 - (k - 2 - i)) --i;
    if (i < 0) break;
    ++cuts[static_cast<size_t>(i)];
    for (int j = i + 1; j < k - 1; ++j)
      cuts[static_cast<size_t>(j)] = cuts[static_cast<size_t>(j) - 1] + 1;
  }
}

bool leq_blocks(const std::vector<int>& a, const std::vector<int>& b) {
  return a.back() <= b.front();
}

bool chain_valid(const Shuffling& sh) {
  const auto& A = sh.a_blocks;
  const auto& B = sh.b_blocks;
  size_t s = A.size(), t = B.size();
  if (s == 0 || t == 0) return true;
  if (sh.a_first) {
    if (!(s == t || s == t + 1)) return false;
    for (size_t k = 0; k < t; ++k)
      if (!leq_blocks(A[k], B[k])) return false;
    for (size_t k = 0; k + 1 < s; ++k)
      if (!leq_blocks(B[k], A[k + 1])) return false;
  } else {
    if (!(t == s || t == s + 1)) return false;
    for (size_t k = 0; k < s; ++k)
      if (!leq_blocks(B[k], A[k])) return false;
    for (size_t k = 0; k + 1 < t; ++k)
      if (!leq_blocks(A[k], B[k + 1])) return false;
  }
  return true;
}

}  // namespace

std::vector<Shuffling> enumerate_shufflings(const std::vector<int>& a,
                                            const std::vector<int>& b) {
  std::vector<Shuffling> out;
  if (a.empty() && b.empty()) {
    out.push_back(Shuffling{{}, {}, true});
    return out;
  }
  if (a.empty() || b.empty()) {
    const std::vector<int>& s = a.empty() ? b : a;
    std::vector<std::vector<std::vector<int>>> decs;
    for (int k = 1; k <= static_cast<int>(s.size()); ++k)
      block_decompositions(s, k, decs);
    for (auto& d : decs) {
      Shuffling sh;
      if (a.empty())
        sh.b_blocks = d, sh.a_first = false;
      else
        sh.a_blocks = d, sh.a_first = true;
      out.push_back(std::move(sh));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Shuffling& x, const Shuffling& y) {
                       return x.length() < y.length();
                     });
    return out;
  }
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  std::vector<std::vector<std::vector<std::vector<int>>>> adec(
      static_cast<size_t>(na) + 1),
      bdec(static_cast<size_t>(nb) + 1);
  for (int k = 1; k <= na; ++k)
    block_decompositions(a, k, adec[static_cast<size_t>(k)]);
  for (int k = 1; k <= nb; ++k)
    block_decompositions(b, k, bdec[static_cast<size_t>(k)]);
  for (int len = 1; len <= na + nb - 1; ++len) {
    for (int side = 0; side < 2; ++side) {
      bool a_first = side == 0;
      // s+t-1 == len with |s-t| <= 1 and the leading side one block ahead
      for (int s = 1; s <= na; ++s) {
        int t = len + 1 - s;
        if (t < 1 || t > nb) continue;
        if (a_first ? !(s == t || s == t + 1) : !(t == s || t == s + 1))
          continue;
        for (const auto& da : adec[static_cast<size_t>(s)]) {
          for (const auto& db : bdec[static_cast<size_t>(t)]) {
            Shuffling sh{da, db, a_first};
            if (chain_valid(sh)) out.push_back(sh);
          }
        }
      }
    }
  }
  return out;
}

std::vector<Shuffling> enumerate_shufflings(const OrdinalMap& tau,
                                            const OrdinalMap& pi) {
  if (tau.cod != pi.cod)
    throw std::invalid_argument("enumerate_shufflings: codomain mismatch");
  return enumerate_shufflings(tau.image(), pi.image());
}

std::vector<Shuffling> enumerate_shufflings(const MPath& phi) {
  return enumerate_shufflings(phi.supp_x(), phi.supp_y());
}

int linking_number(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() && b.empty()) return 0;
  if (a.empty() || b.empty()) return 1;
  int best = static_cast<int>(a.size() + b.size());
  for (const auto& sh : enumerate_shufflings(a, b))
    best = std::min(best, sh.length());
  return best;
}

int linking_number(const OrdinalMap& tau, const OrdinalMap& pi) {
  if (tau.cod != pi.cod)
    throw std::invalid_argument("linking_number: codomain mismatch");
  return linking_number(tau.image(), pi.image());
}

int linking_number(const MPath& phi) {
  return linking_number(phi.supp_x(), phi.supp_y());
}

bool n_equivalent(const MPath& phi, int n) { return linking_number(phi) <= n; }

PathClass classify(const MPath& phi) {
  PathClass c;
  c.surjective = true;
  c.injective = true;
  bool has_diag = false;
  for (int i = 0; i <= phi.m; ++i) {
    auto [dx, dy] = phi.step(i);
    if (dx > 1 || dy > 1) c.surjective = false;
    if (dx == 0 && dy == 0) c.injective = false;
    if (dx >= 1 && dy >= 1) has_diag = true;
  }
  c.delannoy = c.surjective && c.injective;
  c.sharp = c.surjective && !has_diag;
  if (c.delannoy) {
    for (int i = 0; i < phi.m; ++i) {
      auto s = phi.step(i);
      auto t = phi.step(i + 1);
      if (s == std::pair<int, int>{1, 0} && t == std::pair<int, int>{0, 1})
        c.low_corners.push_back(phi.points[static_cast<size_t>(i) + 1]);
      if (s == std::pair<int, int>{0, 1} && t == std::pair<int, int>{1, 0})
        c.upper_corners.push_back(phi.points[static_cast<size_t>(i) + 1]);
    }
    c.smooth = c.low_corners.empty() && c.upper_corners.empty();
  }
  return c;
}

SurjFactorization factor_surjective(const MPath& phi) {
  auto [tau, pi] = phi.dual_pair();
  auto [ex, mx] = epi_mono_factor(tau);
  auto [ey, my] = epi_mono_factor(pi);
  IntervalMap sx = joyal_dual(mx);  // <m+1> -> <p'+1>
  IntervalMap sy = joyal_dual(my);
  std::vector<std::pair<int, int>> pts(phi.points.size());
  for (int a = 0; a <= phi.m + 1; ++a)
    pts[static_cast<size_t>(a)] = {sx(a), sy(a)};
  MPath surj{phi.m, mx.dom, my.dom, std::move(pts)};
  return {surj, joyal_dual(ex), joyal_dual(ey)};
}

InjFactorization factor_injective(const MPath& phi) {
  std::vector<std::pair<int, int>> pts;
  std::vector<int> obj(phi.points.size());
  for (size_t a = 0; a < phi.points.size(); ++a) {
    if (pts.empty() || phi.points[a] != pts.back()) pts.push_back(phi.points[a]);
    obj[a] = static_cast<int>(pts.size()) - 1;
  }
  int m2 = static_cast<int>(pts.size()) - 2;
  IntervalMap pre{phi.m + 1, m2 + 1, std::move(obj)};
  MPath inj{m2, phi.p, phi.q, std::move(pts)};
  return {pre, inj};
}

namespace {

// For each shared generator of a shuffling, true iff the x component moves
// first (its A-block precedes its B-block in the interleaved chain).
std::map<int, bool> x_first_table(const Shuffling& sh) {
  std::map<int, int> apos, bpos;
  for (size_t j = 0; j < sh.a_blocks.size(); ++j)
    for (int g : sh.a_blocks[j]) apos[g] = sh.a_chain_pos(static_cast<int>(j));
  for (size_t j = 0; j < sh.b_blocks.size(); ++j)
    for (int g : sh.b_blocks[j]) bpos[g] = sh.b_chain_pos(static_cast<int>(j));
  std::map<int, bool> xf;
  for (auto& [g, pa] : apos) {
    auto it = bpos.find(g);
    if (it != bpos.end()) xf[g] = pa < it->second;
  }
  return xf;
}

Shuffling minimal_shuffling(const MPath& phi) {
  auto shs = enumerate_shufflings(phi);
  if (shs.empty()) throw std::invalid_argument("no shuffling exists");
  const Shuffling* best = &shs.front();
  for (const auto& sh : shs)
    if (sh.length() < best->length()) best = &sh;
  return *best;
}

}  // namespace

SharpFactorization sharpen(const MPath& phi) {
  PathClass cls = classify(phi);
  if (!cls.delannoy) throw std::invalid_argument("sharpen: input not Delannoy");
  std::map<int, bool> xf = x_first_table(minimal_shuffling(phi));
  std::vector<std::pair<int, int>> pts{{0, 0}};
  std::vector<int> obj{0};
  for (int i = 0; i <= phi.m; ++i) {
    auto [dx, dy] = phi.step(i);
    auto [x, y] = phi.points[static_cast<size_t>(i)];
    if (dx == 1 && dy == 1) {
      bool xfirst = xf.count(i) ? xf.at(i) : true;
      if (xfirst)
        pts.push_back({x + 1, y});
      else
        pts.push_back({x, y + 1});
      pts.push_back({x + 1, y + 1});
    } else {
      pts.push_back({x + dx, y + dy});
    }
    obj.push_back(static_cast<int>(pts.size()) - 1);
  }
  int m2 = static_cast<int>(pts.size()) - 2;
  IntervalMap pre{phi.m + 1, m2 + 1, std::move(obj)};
  MPath sharp{m2, phi.p, phi.q, std::move(pts)};
  return {pre, sharp};
}

SmoothFactorization smooth_factor(const MPath& phi) {
  if (!classify(phi).delannoy)
    throw std::invalid_argument("smooth_factor: input not Delannoy");
  MPath cur = phi;
  IntervalMap post_x = interval_identity(phi.p + 1);
  IntervalMap post_y = interval_identity(phi.q + 1);
  while (true) {
    int pos = -1;
    bool low = false;
    for (int i = 0; i < cur.m; ++i) {
      auto s = cur.step(i), t = cur.step(i + 1);
      if (s == std::pair<int, int>{1, 0} && t == std::pair<int, int>{0, 1}) {
        pos = i;
        low = true;
        break;
      }
      if (s == std::pair<int, int>{0, 1} && t == std::pair<int, int>{1, 0}) {
        pos = i;
        low = false;
        break;
      }
    }
    if (pos < 0) break;
    std::vector<std::pair<int, int>> pts = cur.points;
    if (low) {
      int s = cur.points[static_cast<size_t>(pos)].first;
      for (size_t a = static_cast<size_t>(pos) + 2; a < pts.size(); ++a)
        pts[a].first += 1;
      MPath next{cur.m, cur.p + 1, cur.q, std::move(pts)};
      // factor map <p+2> -> <p+1> collapsing the generator s+1
      std::vector<int> o(static_cast<size_t>(cur.p) + 3);
      for (int j = 0; j <= cur.p + 2; ++j)
        o[static_cast<size_t>(j)] = j <= s + 1 ? j : j - 1;
      post_x = compose(post_x, IntervalMap{cur.p + 2, cur.p + 1, std::move(o)});
      cur = next;
    } else {
      int t = cur.points[static_cast<size_t>(pos)].second;
      for (size_t a = static_cast<size_t>(pos) + 2; a < pts.size(); ++a)
        pts[a].second += 1;
      MPath next{cur.m, cur.p, cur.q + 1, std::move(pts)};
      std::vector<int> o(static_cast<size_t>(cur.q) + 3);
      for (int j = 0; j <= cur.q + 2; ++j)
        o[static_cast<size_t>(j)] = j <= t + 1 ? j : j - 1;
      post_y = compose(post_y, IntervalMap{cur.q + 2, cur.q + 1, std::move(o)});
      cur = next;
    }
  }
  return {cur, post_x, post_y};
}

namespace {

// Step words over {diagonal, east, north} with the given step counts,
// lexicographic with D < E < N.
void delannoy_words(int d, int e, int n, std::vector<int>& w,
                    std::vector<std::vector<int>>& out, bool smooth_only) {
  if (d == 0 && e == 0 && n == 0) {
    out.push_back(w);
    return;
  }
  for (int c = 0; c < 3; ++c) {
    if (c == 0 && d == 0) continue;
    if (c == 1 && e == 0) continue;
    if (c == 2 && n == 0) continue;
    if (smooth_only && !w.empty()) {
      int prev = w.back();
      if ((prev == 1 && c == 2) || (prev == 2 && c == 1)) continue;
    }
    w.push_back(c);
    delannoy_words(d - (c == 0), e - (c == 1), n - (c == 2), w, out, smooth_only);
    w.pop_back();
  }
}

MPath path_from_word(int p, int q, const std::vector<int>& w) {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  for (int c : w) {
    auto [x, y] = pts.back();
    if (c == 0)
      pts.push_back({x + 1, y + 1});
    else if (c == 1)
      pts.push_back({x + 1, y});
    else
      pts.push_back({x, y + 1});
  }
  int m = static_cast<int>(pts.size()) - 2;
  return {m, p, q, std::move(pts)};
}

}  // namespace

std::vector<MPath> enumerate_delannoy(int p, int q) {
  std::vector<MPath> out;
  std::vector<std::vector<int>> words;
  std::vector<int> w;
  for (int d = 0; d <= std::min(p + 1, q + 1); ++d)
    delannoy_words(d, p + 1 - d, q + 1 - d, w, words, false);
  std::sort(words.begin(), words.end());
  out.reserve(words.size());
  for (const auto& word : words) out.push_back(path_from_word(p, q, word));
  return out;
}

std::vector<MPath> enumerate_smooth(int p, int q, int n) {
  std::vector<std::vector<int>> words;
  std::vector<int> w;
  if (n <= std::min(p + 1, q + 1))
    delannoy_words(n, p + 1 - n, q + 1 - n, w, words, true);
  std::sort(words.begin(), words.end());
  std::vector<MPath> out;
  out.reserve(words.size());
  for (const auto& word : words) out.push_back(path_from_word(p, q, word));
  return out;
}

long long delannoy_number(int a, int b) {
  std::vector<std::vector<long long>> d(static_cast<size_t>(a) + 1,
                                        std::vector<long long>(static_cast<size_t>(b) + 1, 1));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          d[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] +
          d[static_cast<size_t>(i)][static_cast<size_t>(j) - 1] +
          d[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
  return d[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

}  // namespace opad
