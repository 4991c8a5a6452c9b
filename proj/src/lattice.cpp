#include "opad/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace opad {

LatticePath::LatticePath(int arity_, std::vector<int> extents_,
                         std::vector<int> word_, std::vector<int> labels_)
    : arity(arity_),
      extents(std::move(extents_)),
      word(std::move(word_)),
      labels(std::move(labels_)) {
  if (arity < 1 || extents.size() != static_cast<size_t>(arity))
    throw std::invalid_argument("LatticePath: bad arity");
  std::vector<int> counts(static_cast<size_t>(arity), 0);
  for (int d : word) {
    if (d < 1 || d > arity)
      throw std::invalid_argument("LatticePath: direction out of range");
    ++counts[static_cast<size_t>(d) - 1];
  }
  for (int d = 0; d < arity; ++d)
    if (counts[static_cast<size_t>(d)] != extents[static_cast<size_t>(d)] + 1)
      throw std::invalid_argument("LatticePath: step counts do not match extents");
  if (labels.size() != word.size() + 1)
    throw std::invalid_argument("LatticePath: bad label list length");
  for (int l : labels)
    if (l < 0) throw std::invalid_argument("LatticePath: negative label");
  if (labels.front() < 1 || labels.back() < 1)
    throw std::invalid_argument("LatticePath: endpoint labels must be >= 1");
}

bool LatticePath::operator<(const LatticePath& o) const {
  if (arity != o.arity) return arity < o.arity;
  if (extents != o.extents) return extents < o.extents;
  if (word != o.word) return word < o.word;
  return labels < o.labels;
}

int LatticePath::source_degree() const {
  return std::accumulate(labels.begin(), labels.end(), 0) - 2;
}

std::vector<int> LatticePath::object_vertices() const {
  std::vector<int> v;
  for (size_t t = 0; t < labels.size(); ++t)
    for (int c = 0; c < labels[t]; ++c) v.push_back(static_cast<int>(t));
  return v;
}

std::vector<std::pair<int, int>> LatticePath::generator_chunks() const {
  std::vector<int> obj = object_vertices();
  std::vector<std::pair<int, int>> chunks;
  for (size_t a = 0; a + 1 < obj.size(); ++a)
    chunks.push_back({obj[a], obj[a + 1]});
  return chunks;
}

bool LatticePath::is_shuffle() const {
  for (int l : labels)
    if (l != 1) return false;
  return true;
}

int complexity_ij(const LatticePath& psi, int i, int j) {
  if (i < 1 || j <= i || j > psi.arity)
    throw std::invalid_argument("complexity_ij: bad direction pair");
  int corners = 0, prev = 0;
  for (int d : psi.word) {
    if (d != i && d != j) continue;
    if (prev != 0 && d != prev) ++corners;
    prev = d;
  }
  return corners;
}

int complexity(const LatticePath& psi) {
  int c = 0;
  for (int i = 1; i <= psi.arity; ++i)
    for (int j = i + 1; j <= psi.arity; ++j)
      c = std::max(c, complexity_ij(psi, i, j));
  return c;
}

std::vector<int> first_movement(const LatticePath& psi) {
  std::vector<int> order;
  std::vector<bool> seen(static_cast<size_t>(psi.arity) + 1, false);
  for (int d : psi.word) {
    if (!seen[static_cast<size_t>(d)]) {
      seen[static_cast<size_t>(d)] = true;
      order.push_back(d);
    }
  }
  return order;
}

LatticePath compose_at(const LatticePath& psi, int i, const LatticePath& omega) {
  if (i < 1 || i > psi.arity)
    throw std::invalid_argument("compose_at: slot out of range");
  if (psi.extents[static_cast<size_t>(i) - 1] != omega.source_degree())
    throw std::invalid_argument("compose_at: colour mismatch");
  int l = omega.arity;
  auto renum_psi = [&](int d) { return d < i ? d : d + l - 1; };
  auto renum_omega = [&](int d) { return d + i - 1; };

  std::vector<int> extents;
  for (int d = 1; d <= psi.arity; ++d) {
    if (d == i)
      for (int e : omega.extents) extents.push_back(e);
    else
      extents.push_back(psi.extents[static_cast<size_t>(d) - 1]);
  }

  auto chunks = omega.generator_chunks();
  std::vector<int> word;
  std::vector<int> labels{psi.labels[0]};
  size_t next_chunk = 0;
  for (size_t s = 0; s < psi.word.size(); ++s) {
    int d = psi.word[s];
    if (d != i) {
      word.push_back(renum_psi(d));
      labels.push_back(psi.labels[s + 1]);
      continue;
    }
    auto [b, e] = chunks[next_chunk++];
    if (b == e) {
      labels.back() += psi.labels[s + 1];
      continue;
    }
    for (int t = b; t < e; ++t) {
      word.push_back(renum_omega(omega.word[static_cast<size_t>(t)]));
      if (t + 1 < e) labels.push_back(0);
    }
    labels.push_back(psi.labels[s + 1]);
  }
  return {psi.arity + l - 1, std::move(extents), std::move(word),
          std::move(labels)};
}

MPath project_to_m(const LatticePath& psi) {
  if (psi.arity != 2)
    throw std::invalid_argument("project_to_m: arity 2 required");
  std::vector<std::pair<int, int>> vertices{{0, 0}};
  for (int d : psi.word) {
    auto [x, y] = vertices.back();
    vertices.push_back(d == 1 ? std::pair<int, int>{x + 1, y}
                              : std::pair<int, int>{x, y + 1});
  }
  std::vector<std::pair<int, int>> pts;
  for (size_t t = 0; t < psi.labels.size(); ++t)
    for (int c = 0; c < psi.labels[t]; ++c) pts.push_back(vertices[t]);
  return {psi.source_degree(), psi.extents[0], psi.extents[1], std::move(pts)};
}

std::vector<IntervalMap> project_components(const LatticePath& psi) {
  std::vector<std::vector<int>> coords(
      static_cast<size_t>(psi.arity),
      std::vector<int>(psi.word.size() + 1, 0));
  for (size_t s = 0; s < psi.word.size(); ++s) {
    for (int d = 0; d < psi.arity; ++d)
      coords[static_cast<size_t>(d)][s + 1] =
          coords[static_cast<size_t>(d)][s] + (psi.word[s] == d + 1 ? 1 : 0);
  }
  int m = psi.source_degree();
  std::vector<IntervalMap> out;
  for (int d = 0; d < psi.arity; ++d) {
    std::vector<int> obj;
    for (size_t t = 0; t < psi.labels.size(); ++t)
      for (int c = 0; c < psi.labels[t]; ++c)
        obj.push_back(coords[static_cast<size_t>(d)][t]);
    out.emplace_back(m + 1, psi.extents[static_cast<size_t>(d)] + 1,
                     std::move(obj));
  }
  return out;
}

namespace {

std::map<int, bool> shuffling_x_first(const Shuffling& sh) {
  std::map<int, int> apos, bpos;
  for (size_t j = 0; j < sh.a_blocks.size(); ++j)
    for (int g : sh.a_blocks[j]) apos[g] = sh.a_chain_pos(static_cast<int>(j));
  for (size_t j = 0; j < sh.b_blocks.size(); ++j)
    for (int g : sh.b_blocks[j]) bpos[g] = sh.b_chain_pos(static_cast<int>(j));
  std::map<int, bool> xf;
  for (auto& [g, pa] : apos)
    if (bpos.count(g)) xf[g] = pa < bpos.at(g);
  return xf;
}

LatticePath lifting_from_choices(const MPath& phi,
                                 const std::map<int, bool>& x_first) {
  std::vector<int> word, labels;
  int cur = 1;
  for (int a = 0; a <= phi.m; ++a) {
    auto [dx, dy] = phi.step(a);
    if (dx == 0 && dy == 0) {
      ++cur;
      continue;
    }
    labels.push_back(cur);
    bool xf = x_first.count(a) ? x_first.at(a) : true;
    std::vector<int> piece;
    if (xf) {
      piece.insert(piece.end(), static_cast<size_t>(dx), 1);
      piece.insert(piece.end(), static_cast<size_t>(dy), 2);
    } else {
      piece.insert(piece.end(), static_cast<size_t>(dy), 2);
      piece.insert(piece.end(), static_cast<size_t>(dx), 1);
    }
    for (size_t t = 0; t + 1 < piece.size(); ++t) labels.push_back(0);
    word.insert(word.end(), piece.begin(), piece.end());
    cur = 1;
  }
  labels.push_back(cur);
  return {2, {phi.p, phi.q}, std::move(word), std::move(labels)};
}

bool validates_shuffling(const MPath& phi, const Shuffling& sh) {
  std::vector<int> a, b;
  for (const auto& blk : sh.a_blocks) a.insert(a.end(), blk.begin(), blk.end());
  for (const auto& blk : sh.b_blocks) b.insert(b.end(), blk.begin(), blk.end());
  return a == phi.supp_x() && b == phi.supp_y();
}

}  // namespace

LatticePath lift(const MPath& phi, const Shuffling& sh) {
  if (!validates_shuffling(phi, sh))
    throw std::invalid_argument("lift: not a shuffling of this path");
  return lifting_from_choices(phi, shuffling_x_first(sh));
}

std::vector<LatticePath> enumerate_liftings(const MPath& phi) {
  // Interleave the unit moves inside each generator image independently.
  std::vector<LatticePath> out;
  std::vector<std::vector<std::vector<int>>> per_gap;
  for (int a = 0; a <= phi.m; ++a) {
    auto [dx, dy] = phi.step(a);
    std::vector<std::vector<int>> pieces;
    std::vector<int> piece(static_cast<size_t>(dx), 1);
    piece.insert(piece.end(), static_cast<size_t>(dy), 2);
    std::sort(piece.begin(), piece.end());
    do {
      pieces.push_back(piece);
    } while (std::next_permutation(piece.begin(), piece.end()));
    per_gap.push_back(std::move(pieces));
  }
  std::vector<size_t> idx(per_gap.size(), 0);
  while (true) {
    std::vector<int> word, labels;
    int cur = 1;
    for (int a = 0; a <= phi.m; ++a) {
      const auto& piece = per_gap[static_cast<size_t>(a)][idx[static_cast<size_t>(a)]];
      if (piece.empty()) {
        ++cur;
        continue;
      }
      labels.push_back(cur);
      for (size_t t = 0; t + 1 < piece.size(); ++t) labels.push_back(0);
      word.insert(word.end(), piece.begin(), piece.end());
      cur = 1;
    }
    labels.push_back(cur);
    out.emplace_back(2, std::vector<int>{phi.p, phi.q}, std::move(word),
                     std::move(labels));
    size_t a = 0;
    while (a < idx.size() && ++idx[a] == per_gap[a].size()) idx[a++] = 0;
    if (a == idx.size()) break;
  }
  return out;
}

int min_lifting_complexity(const MPath& phi) {
  int best = -1;
  for (const auto& psi : enumerate_liftings(phi)) {
    int c = complexity(psi);
    if (best < 0 || c < best) best = c;
  }
  return best;
}

ShuffleFactorization shuffle_factor(const LatticePath& psi) {
  std::vector<int> obj;
  std::vector<int> vert = psi.object_vertices();
  obj.reserve(vert.size());
  for (int t : vert) obj.push_back(t);
  int m = psi.source_degree();
  int md = psi.steps() - 1;
  IntervalMap pre{m + 1, md + 1, std::move(obj)};
  LatticePath sh{psi.arity, psi.extents, psi.word,
                 std::vector<int>(psi.word.size() + 1, 1)};
  return {pre, sh};
}

std::vector<int> shuffle_permutation(const LatticePath& sh) {
  std::vector<int> offset(static_cast<size_t>(sh.arity) + 1, 0);
  for (int d = 1; d < sh.arity; ++d)
    offset[static_cast<size_t>(d) + 1] =
        offset[static_cast<size_t>(d)] + sh.extents[static_cast<size_t>(d) - 1] + 1;
  std::vector<int> seen(static_cast<size_t>(sh.arity) + 1, 0);
  std::vector<int> mu;
  mu.reserve(sh.word.size());
  for (int d : sh.word)
    mu.push_back(offset[static_cast<size_t>(d)] + seen[static_cast<size_t>(d)]++);
  return mu;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

int path_sign(const LatticePath& psi) {
  return permutation_sign(shuffle_permutation(shuffle_factor(psi).shuffle));
}

namespace {

std::vector<bool> corner_vertices(const LatticePath& psi) {
  std::vector<bool> corner(psi.word.size() + 1, false);
  for (size_t s = 0; s + 1 < psi.word.size(); ++s)
    if (psi.word[s] != psi.word[s + 1]) corner[s + 1] = true;
  return corner;
}

}  // namespace

bool is_normal(const LatticePath& psi) {
  std::vector<bool> corner = corner_vertices(psi);
  for (size_t t = 0; t < psi.labels.size(); ++t) {
    int expect = corner[t] ? 0 : 1;
    if (psi.labels[t] != expect) return false;
  }
  return true;
}

bool is_degenerate(const LatticePath& psi) {
  std::vector<bool> corner = corner_vertices(psi);
  for (size_t t = 1; t + 1 < psi.labels.size(); ++t)
    if (!corner[t] && psi.labels[t] == 0) return true;
  return false;
}

bool is_smooth_lattice(const LatticePath& psi) {
  return classify(project_to_m(psi)).smooth;
}

namespace {

void compositions_rec(int total, int parts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& res) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      res.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositions_rec(total - first, parts - 1, cur, res);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> res;
  if (parts < 1) return res;
  std::vector<int> cur;
  compositions_rec(total, parts, cur, res);
  return res;
}

// Words with p+1 ones and q+1 twos and exactly n direction changes
// (n+1 alternating runs).
void normal_words(int p, int q, int n, std::vector<std::vector<int>>& out) {
  for (int first = 1; first <= 2; ++first) {
    int runs = n + 1;
    int ones = p + 1, twos = q + 1;
    int rone = first == 1 ? (runs + 1) / 2 : runs / 2;
    int rtwo = runs - rone;
    if (rone < 1 || rtwo < 1 || ones < rone || twos < rtwo) continue;
    for (const auto& c1 : compositions(ones, rone)) {
      for (const auto& c2 : compositions(twos, rtwo)) {
        std::vector<int> w;
        size_t i1 = 0, i2 = 0;
        int dir = first;
        for (int r = 0; r < runs; ++r) {
          int len = dir == 1 ? c1[i1++] : c2[i2++];
          w.insert(w.end(), static_cast<size_t>(len), dir);
          dir = 3 - dir;
        }
        out.push_back(std::move(w));
      }
    }
  }
}

LatticePath normal_path_from_word(int p, int q, const std::vector<int>& w) {
  std::vector<int> labels(w.size() + 1, 1);
  for (size_t s = 0; s + 1 < w.size(); ++s)
    if (w[s] != w[s + 1]) labels[s + 1] = 0;
  return {2, {p, q}, w, std::move(labels)};
}

}  // namespace

std::pair<std::vector<LatticePath>, std::vector<LatticePath>> enumerate_normal(
    int p, int q, int n) {
  std::vector<std::vector<int>> words;
  normal_words(p, q, n, words);
  std::sort(words.begin(), words.end());
  std::pair<std::vector<LatticePath>, std::vector<LatticePath>> out;
  for (const auto& w : words) {
    LatticePath psi = normal_path_from_word(p, q, w);
    if (complexity(psi) != n) continue;
    (w.front() == 1 ? out.first : out.second).push_back(std::move(psi));
  }
  return out;
}

std::pair<std::vector<LatticePath>, std::vector<LatticePath>>
enumerate_smooth_lp(int p, int q, int n) {
  auto [even, odd] = enumerate_normal(p, q, n);
  auto keep = [](std::vector<LatticePath>& v) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [](const LatticePath& psi) {
                             return !is_smooth_lattice(psi);
                           }),
            v.end());
  };
  keep(even);
  keep(odd);
  return {even, odd};
}

std::string to_text(const LatticePath& psi) {
  if (psi.arity > 9) throw std::invalid_argument("to_text: arity > 9");
  std::string s;
  for (int d : psi.word) s += static_cast<char>('0' + d);
  s += '|';
  for (size_t t = 0; t < psi.labels.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(psi.labels[t]);
  }
  return s;
}

LatticePath lattice_from_text(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("lattice_from_text: missing '|'");
  std::vector<int> word;
  int arity = 0;
  for (size_t i = 0; i < bar; ++i) {
    char c = text[i];
    if (c < '1' || c > '9')
      throw std::invalid_argument("lattice_from_text: bad word digit");
    word.push_back(c - '0');
    arity = std::max(arity, c - '0');
  }
  std::vector<int> labels;
  size_t pos = bar + 1;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    labels.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  std::vector<int> extents(static_cast<size_t>(arity), -1);
  for (int d : word) ++extents[static_cast<size_t>(d) - 1];
  for (int e : extents)
    if (e < 0)
      throw std::invalid_argument("lattice_from_text: missing direction");
  return {arity, std::move(extents), std::move(word), std::move(labels)};
}

}  // namespace opad
