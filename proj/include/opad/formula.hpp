#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "opad/ordinal.hpp"

namespace opad {

/// One summand of a chain-level binary operation: sign, the two
/// cosimplicial operators, and which argument is multiplied first.
struct FormulaTerm {
  int coeff = 1;
  OrdinalMap f1, f2;       // [p] -> [out], [q] -> [out]
  bool second_first = false;

  bool operator==(const FormulaTerm&) const = default;
};

struct Formula {
  int p = 0, q = 0, out_degree = 0;
  std::vector<FormulaTerm> terms;

  bool operator==(const Formula&) const = default;
};

/// Sort terms by (order, f1 values, f2 values) so equality is decidable.
void canonical_sort(Formula& f);

/// Steenrod cup_i: one term per even smooth lattice path of complexity
/// i+1 on (p,q), with coefficient (-1)^{(p-1)(q-1)} sgn(psi).
Formula cup_formula(int p, int q, int i);

/// The degree -(n-1) bracket from even and odd smooth lattice paths of
/// complexity n, n = n_minus_1 + 1.
Formula bracket_formula(int p, int q, int n_minus_1);

/// Closed-form construction of the complexity-2 bracket (independent of
/// the path enumeration; cross-checks bracket_formula(p,q,1)).
Formula gerstenhaber_formula(int p, int q);

/// Paper-style text, e.g. "+ d2(a) d0(b) - d1(b) d3(a)".
std::string to_text(const Formula& f);
std::string to_text(const FormulaTerm& t);

nlohmann::json formula_to_json(const Formula& f);
Formula formula_from_json(const nlohmann::json& j);

}  // namespace opad
