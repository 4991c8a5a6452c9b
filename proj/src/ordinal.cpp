#include "opad/ordinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace opad {

OrdinalMap::OrdinalMap(int dom_, int cod_, std::vector<int> values_)
    : dom(dom_), cod(cod_), values(std::move(values_)) {
  if (dom < 0 || cod < 0 || values.size() != static_cast<size_t>(dom + 1))
    throw std::invalid_argument("OrdinalMap: bad value vector length");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > cod)
      throw std::invalid_argument("OrdinalMap: value out of range");
    if (i > 0 && values[i] < values[i - 1])
      throw std::invalid_argument("OrdinalMap: values not nondecreasing");
  }
}

bool OrdinalMap::operator<(const OrdinalMap& o) const {
  if (dom != o.dom) return dom < o.dom;
  if (cod != o.cod) return cod < o.cod;
  return values < o.values;
}

bool OrdinalMap::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i <= dom; ++i)
    if (values[static_cast<size_t>(i)] != i) return false;
  return true;
}

bool OrdinalMap::is_injective() const {
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return false;
  return true;
}

bool OrdinalMap::is_surjective() const {
  return static_cast<int>(image().size()) == cod + 1;
}

std::vector<int> OrdinalMap::image() const {
  std::vector<int> im = values;
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

IntervalMap::IntervalMap(int dom_, int cod_, std::vector<int> obj_)
    : dom(dom_), cod(cod_), obj(std::move(obj_)) {
  if (dom < 1 || cod < 1 || obj.size() != static_cast<size_t>(dom + 1))
    throw std::invalid_argument("IntervalMap: bad object vector length");
  if (obj.front() != 0 || obj.back() != cod)
    throw std::invalid_argument("IntervalMap: endpoints not preserved");
  for (size_t i = 1; i < obj.size(); ++i)
    if (obj[i] < obj[i - 1])
      throw std::invalid_argument("IntervalMap: objects not nondecreasing");
}

bool IntervalMap::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i <= dom; ++i)
    if (obj[static_cast<size_t>(i)] != i) return false;
  return true;
}

std::vector<int> IntervalMap::support() const {
  std::vector<int> s;
  for (int i = 0; i < dom; ++i)
    if (obj[static_cast<size_t>(i) + 1] > obj[static_cast<size_t>(i)]) s.push_back(i);
  return s;
}

OrdinalMap ordinal_identity(int n) {
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = i;
  return {n, n, std::move(v)};
}

IntervalMap interval_identity(int n) {
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = i;
  return {n, n, std::move(v)};
}

OrdinalMap coface(int i, int n) {
  if (i < 0 || i > n + 1) throw std::invalid_argument("coface: index out of range");
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = j < i ? j : j + 1;
  return {n, n + 1, std::move(v)};
}

OrdinalMap codegeneracy(int i, int n) {
  if (n < 1 || i < 0 || i > n - 1)
    throw std::invalid_argument("codegeneracy: index out of range");
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = j <= i ? j : j - 1;
  return {n, n - 1, std::move(v)};
}

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: domain mismatch");
  std::vector<int> v(f.values.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = g.values[static_cast<size_t>(f.values[i])];
  return {f.dom, g.cod, std::move(v)};
}

IntervalMap compose(const IntervalMap& g, const IntervalMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: domain mismatch");
  std::vector<int> v(f.obj.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = g.obj[static_cast<size_t>(f.obj[i])];
  return {f.dom, g.cod, std::move(v)};
}

std::pair<OrdinalMap, OrdinalMap> epi_mono_factor(const OrdinalMap& f) {
  std::vector<int> im = f.image();
  int r = static_cast<int>(im.size()) - 1;
  std::vector<int> ev(f.values.size());
  for (size_t i = 0; i < f.values.size(); ++i) {
    ev[i] = static_cast<int>(
        std::lower_bound(im.begin(), im.end(), f.values[i]) - im.begin());
  }
  OrdinalMap epi{f.dom, r, std::move(ev)};
  OrdinalMap mono{r, f.cod, std::move(im)};
  return {epi, mono};
}

IntervalMap joyal_dual(const OrdinalMap& f) {
  int l = f.cod, m = f.dom;
  std::vector<int> o(static_cast<size_t>(l) + 2);
  for (int i = 0; i <= l + 1; ++i) {
    int c = 0;
    for (int j = 0; j <= m; ++j)
      if (f.values[static_cast<size_t>(j)] < i) ++c;
    o[static_cast<size_t>(i)] = c;
  }
  return {l + 1, m + 1, std::move(o)};
}

OrdinalMap joyal_inverse(const IntervalMap& g) {
  int l = g.dom - 1, m = g.cod - 1;
  std::vector<int> v(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    int c = 0;
    for (int i = 1; i <= l + 1; ++i)
      if (g.obj[static_cast<size_t>(i)] <= j) ++c;
    v[static_cast<size_t>(j)] = c;
  }
  return {m, l, std::move(v)};
}

std::vector<int> coface_word(const OrdinalMap& mono) {
  if (!mono.is_injective())
    throw std::invalid_argument("coface_word: map is not injective");
  std::vector<int> missed;
  size_t k = 0;
  for (int v = 0; v <= mono.cod; ++v) {
    if (k < mono.values.size() && mono.values[k] == v)
      ++k;
    else
      missed.push_back(v);
  }
  return missed;
}

std::vector<int> codegeneracy_word(const OrdinalMap& epi) {
  if (!epi.is_surjective())
    throw std::invalid_argument("codegeneracy_word: map is not surjective");
  std::vector<int> word;
  std::vector<int> v = epi.values;
  while (v.size() > static_cast<size_t>(epi.cod) + 1) {
    for (size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] == v[j + 1]) {
        word.push_back(v[j]);
        v.erase(v.begin() + static_cast<long>(j));
        break;
      }
    }
  }
  return word;
}

std::vector<OrdinalMap> all_ordinal_maps(int p, int m) {
  std::vector<OrdinalMap> out;
  std::vector<int> v(static_cast<size_t>(p) + 1, 0);
  while (true) {
    out.emplace_back(p, m, v);
    int i = p;
    while (i >= 0 && v[static_cast<size_t>(i)] == m) --i;
    if (i < 0) break;
    int x = v[static_cast<size_t>(i)] + 1;
    for (int j = i; j <= p; ++j) v[static_cast<size_t>(j)] = x;
  }
  return out;
}

OrdinalMap tau_map(int m, int n) {
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = j;
  return {n, m + n, std::move(v)};
}

OrdinalMap pi_map(int m, int n) {
  std::vector<int> v(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) v[static_cast<size_t>(j)] = n + j;
  return {m, m + n, std::move(v)};
}

OrdinalMap tau_i_map(int m, int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("tau_i_map: bad i");
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = j <= i ? j : j + m - 1;
  return {n, m + n - 1, std::move(v)};
}

OrdinalMap pi_i_map(int m, int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("pi_i_map: bad i");
  std::vector<int> v(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) v[static_cast<size_t>(j)] = i + j;
  return {m, m + n - 1, std::move(v)};
}

}  // namespace opad
