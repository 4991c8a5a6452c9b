#include "opad/bicomplex.hpp"

#include <stdexcept>

namespace opad {

void BicomplexElement::add(const LatticePath& psi, long long coeff) {
  if (coeff == 0 || is_degenerate(psi)) return;
  auto it = terms.find(psi);
  if (it == terms.end()) {
    terms.emplace(psi, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

BicomplexElement operator+(const BicomplexElement& a, const BicomplexElement& b) {
  BicomplexElement r = a;
  for (const auto& [psi, c] : b.terms) r.add(psi, c);
  return r;
}

LatticePath increment_stop(const LatticePath& psi, int i) {
  int m = psi.source_degree();
  if (i < 0 || i > m + 1) throw std::invalid_argument("increment_stop: bad index");
  std::vector<int> obj = psi.object_vertices();
  std::vector<int> labels = psi.labels;
  ++labels[static_cast<size_t>(obj[static_cast<size_t>(i)])];
  return {psi.arity, psi.extents, psi.word, std::move(labels)};
}

LatticePath collapse_axis_generator(const LatticePath& psi, int axis, int gen) {
  if (axis < 1 || axis > psi.arity)
    throw std::invalid_argument("collapse_axis_generator: bad axis");
  int extent = psi.extents[static_cast<size_t>(axis) - 1];
  if (extent < 1 || gen < 0 || gen > extent)
    throw std::invalid_argument("collapse_axis_generator: bad generator");
  // the (gen+1)-th step in this direction crosses the gap gen -> gen+1
  int seen = 0;
  size_t pos = 0;
  for (; pos < psi.word.size(); ++pos) {
    if (psi.word[pos] == axis && seen++ == gen) break;
  }
  std::vector<int> word = psi.word;
  word.erase(word.begin() + static_cast<long>(pos));
  std::vector<int> labels = psi.labels;
  labels[pos] += labels[pos + 1];
  labels.erase(labels.begin() + static_cast<long>(pos) + 1);
  std::vector<int> extents = psi.extents;
  --extents[static_cast<size_t>(axis) - 1];
  return {psi.arity, std::move(extents), std::move(word), std::move(labels)};
}

BicomplexElement delta_diff(const BicomplexElement& x, int cls) {
  BicomplexElement out;
  long long global = (cls - 1) % 2 == 0 ? 1 : -1;
  for (const auto& [psi, c] : x.terms) {
    int m = psi.source_degree();
    for (int i = 0; i <= m + 1; ++i) {
      long long sign = i % 2 == 0 ? 1 : -1;
      out.add(increment_stop(psi, i), global * sign * c);
    }
  }
  return out;
}

BicomplexElement vertical_diff(const BicomplexElement& x, int cls) {
  BicomplexElement out;
  for (const auto& [psi, c] : x.terms) {
    if (psi.arity != 2)
      throw std::invalid_argument("vertical_diff: arity 2 required");
    int p = psi.extents[0], q = psi.extents[1];
    if (p >= 1) {
      long long g1 = (cls + q - 1) % 2 == 0 ? 1 : -1;
      for (int i = 0; i <= p; ++i) {
        long long sign = i % 2 == 0 ? 1 : -1;
        out.add(collapse_axis_generator(psi, 1, i), g1 * sign * c);
      }
    }
    if (q >= 1) {
      for (int i = 0; i <= q; ++i) {
        long long sign = i % 2 == 0 ? 1 : -1;
        out.add(collapse_axis_generator(psi, 2, i), sign * c);
      }
    }
  }
  return out;
}

long long even_coefficient(const LatticePath& psi) {
  int p = psi.extents[0], q = psi.extents[1];
  long long s = path_sign(psi);
  return ((p - 1) * (q - 1)) % 2 == 0 ? s : -s;
}

long long odd_coefficient(const LatticePath& psi, int n) {
  int p = psi.extents[0], q = psi.extents[1];
  long long s = path_sign(psi);
  return (n + p * q) % 2 == 0 ? s : -s;
}

BicomplexElement lambda_element(int n_minus_1, int m) {
  int n = n_minus_1 + 1;
  BicomplexElement out;
  for (int p = 0; p <= m + n - 1; ++p) {
    int q = m + n - 1 - p;
    auto [even, odd] = enumerate_normal(p, q, n);
    for (const auto& psi : even) out.add(psi, even_coefficient(psi));
    for (const auto& psi : odd) out.add(psi, odd_coefficient(psi, n));
  }
  return out;
}

}  // namespace opad
