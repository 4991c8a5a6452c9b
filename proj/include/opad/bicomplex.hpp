#pragma once

#include <map>

#include "opad/lattice.hpp"

namespace opad {

/// Formal integer combination of arity-2 lattice paths of complexity <= n,
/// living in the quotient by degenerate paths (degenerates are dropped
/// on insertion).
struct BicomplexElement {
  std::map<LatticePath, long long> terms;

  void add(const LatticePath& psi, long long coeff);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const BicomplexElement&) const = default;
};

BicomplexElement operator+(const BicomplexElement& a, const BicomplexElement& b);

/// Increment the label at the vertex of source object i (a cosimplicial
/// coface in the source direction).
LatticePath increment_stop(const LatticePath& psi, int i);
/// Collapse generator `gen` of the axis interval (axis 1 or 2): removes
/// the unique step crossing that gap and adds the endpoint labels.
LatticePath collapse_axis_generator(const LatticePath& psi, int axis, int gen);

/// Horizontal differential (-1)^{cls-1} sum_i (-1)^i delta_i.
BicomplexElement delta_diff(const BicomplexElement& x, int cls);
/// Vertical differential d^1 + d^2; d^1 carries (-1)^{cls+q-1} with q the
/// second extent of each path, d^2 is unsigned beyond the alternation.
BicomplexElement vertical_diff(const BicomplexElement& x, int cls);

/// The coefficient of an even / odd normal path in the cocycle lambda and
/// in the bracket formulas.  Even: (-1)^{(p-1)(q-1)} sgn.  Odd:
/// (-1)^{n+pq} sgn (reading fixed against the paper's worked examples and
/// the cocycle condition).
long long even_coefficient(const LatticePath& psi);
long long odd_coefficient(const LatticePath& psi, int n);

/// lambda^{(n-1)}_m: the signed sum of normal complexity-n paths over all
/// p+q = m+n-1.
BicomplexElement lambda_element(int n_minus_1, int m);

}  // namespace opad
