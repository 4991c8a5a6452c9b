#include "opad/sketch.hpp"

#include <algorithm>
#include <stdexcept>

namespace opad {

std::vector<int> reduce_word(const std::vector<int>& w) {
  std::vector<int> r;
  for (int v : w)
    if (r.empty() || r.back() != v) r.push_back(v);
  return r;
}

Sketch sketch_of_word(int arity, const std::vector<int>& w) {
  std::vector<bool> seen(static_cast<size_t>(arity) + 1, false);
  for (int v : w) {
    if (v < 1 || v > arity) throw std::invalid_argument("sketch: bad variable");
    seen[static_cast<size_t>(v)] = true;
  }
  for (int v = 1; v <= arity; ++v)
    if (!seen[static_cast<size_t>(v)])
      throw std::invalid_argument("sketch: missing variable");
  return {arity, reduce_word(w)};
}

Sketch sketch_of(const LatticePath& psi) {
  return sketch_of_word(psi.arity, psi.word);
}

std::vector<int> expand_except(const std::vector<int>& w, int var) {
  std::vector<int> r;
  for (int v : w) {
    if (v == var || r.empty() || r.back() != v) r.push_back(v);
  }
  return r;
}

Sketch project_ij(const Sketch& s, int i, int j) {
  std::vector<int> w;
  for (int v : s.word) {
    if (v == i)
      w.push_back(1);
    else if (v == j)
      w.push_back(2);
  }
  return {2, reduce_word(w)};
}

int sketch_complexity_ij(const Sketch& s, int i, int j) {
  return project_ij(s, i, j).length() - 1;
}

int sketch_complexity(const Sketch& s) {
  int c = 0;
  for (int i = 1; i <= s.arity; ++i)
    for (int j = i + 1; j <= s.arity; ++j)
      c = std::max(c, sketch_complexity_ij(s, i, j));
  return c;
}

Sketch substitute(const std::vector<int>& expanded, int var,
                  const std::vector<int>& t, int t_arity, int s_arity) {
  size_t occ = 0;
  for (int v : expanded)
    if (v == var) ++occ;
  if (occ != t.size())
    throw std::invalid_argument("substitute: length mismatch");
  std::vector<int> w;
  size_t next = 0;
  for (int v : expanded) {
    if (v == var)
      w.push_back(t[next++] + var - 1);
    else if (v < var)
      w.push_back(v);
    else
      w.push_back(v + t_arity - 1);
  }
  return sketch_of_word(s_arity + t_arity - 1, reduce_word(w));
}

std::vector<int> word_substitute_slot1(const std::vector<int>& s, int s_arity,
                                       const std::vector<int>& t, int t_arity) {
  (void)s_arity;
  size_t occ = 0;
  for (int v : s)
    if (v == 1) ++occ;
  if (occ != t.size())
    throw std::invalid_argument("word_substitute_slot1: length mismatch");
  std::vector<int> w;
  size_t next = 0;
  for (int v : s) {
    if (v == 1)
      w.push_back(t[next++]);
    else
      w.push_back(v + t_arity - 1);
  }
  return w;
}

int complexity_recipe(const std::vector<int>& s_expanded, int s_arity,
                      const std::vector<int>& t, int t_arity, int tvar,
                      int svar) {
  if (svar <= 1 || svar > s_arity)
    throw std::invalid_argument("complexity_recipe: svar must be 2..arity");
  if (tvar < 1 || tvar > t_arity)
    throw std::invalid_argument("complexity_recipe: tvar out of range");
  // 1. keep only variables 1 and svar, reduce by svar only
  std::vector<int> sp;
  for (int v : s_expanded) {
    if (v != 1 && v != svar) continue;
    if (v == svar && !sp.empty() && sp.back() == svar) continue;
    sp.push_back(v);
  }
  // 2. keep only tvar in t, as letters tvar or the unit 0
  std::vector<int> tp;
  for (int v : t) tp.push_back(v == tvar ? tvar : 0);
  // 3. insert the p-th letter of t' into the p-th copy of variable 1
  size_t occ = 0;
  for (int v : sp)
    if (v == 1) ++occ;
  if (occ != tp.size())
    throw std::invalid_argument("complexity_recipe: length mismatch");
  std::vector<int> w;
  size_t next = 0;
  for (int v : sp) {
    if (v == 1) {
      int l = tp[next++];
      if (l != 0) w.push_back(1);  // the t-variable, renamed to 1
    } else {
      w.push_back(2);  // svar, renamed to 2
    }
  }
  // 4./5. reduce; the complexity is the length minus one
  return static_cast<int>(reduce_word(w).size()) - 1;
}

}  // namespace opad
