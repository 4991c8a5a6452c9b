#include "opad/formula.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "opad/bicomplex.hpp"
#include "opad/lattice.hpp"

namespace opad {

void canonical_sort(Formula& f) {
  std::sort(f.terms.begin(), f.terms.end(),
            [](const FormulaTerm& a, const FormulaTerm& b) {
              return std::tie(a.second_first, a.f1.values, a.f2.values) <
                     std::tie(b.second_first, b.f1.values, b.f2.values);
            });
}

namespace {

FormulaTerm term_from_path(const LatticePath& psi, long long coeff, bool odd) {
  auto [f1, f2] = project_to_m(psi).dual_pair();
  return {coeff > 0 ? 1 : -1, f1, f2, odd};
}

Formula build_from_paths(int p, int q, int n, bool with_odd) {
  Formula f;
  f.p = p;
  f.q = q;
  f.out_degree = p + q - n + 1;
  auto [even, odd] = enumerate_smooth_lp(p, q, n);
  for (const auto& psi : even)
    f.terms.push_back(term_from_path(psi, even_coefficient(psi), false));
  if (with_odd)
    for (const auto& psi : odd)
      f.terms.push_back(term_from_path(psi, odd_coefficient(psi, n), true));
  canonical_sort(f);
  return f;
}

std::map<std::tuple<int, int, int, bool>, Formula>& formula_cache() {
  static std::map<std::tuple<int, int, int, bool>, Formula> cache;
  return cache;
}
std::mutex& formula_mutex() {
  static std::mutex m;
  return m;
}

Formula cached(int p, int q, int n, bool with_odd) {
  std::lock_guard<std::mutex> lock(formula_mutex());
  auto key = std::make_tuple(p, q, n, with_odd);
  auto it = formula_cache().find(key);
  if (it != formula_cache().end()) return it->second;
  Formula f = build_from_paths(p, q, n, with_odd);
  formula_cache().emplace(key, f);
  return f;
}

}  // namespace

Formula cup_formula(int p, int q, int i) {
  if (i < 0) throw std::invalid_argument("cup_formula: i >= 0 required");
  Formula f = cached(p, q, i + 1, false);
  f.out_degree = p + q - i;
  return f;
}

Formula bracket_formula(int p, int q, int n_minus_1) {
  if (n_minus_1 < 1)
    throw std::invalid_argument("bracket_formula: n >= 2 required");
  return cached(p, q, n_minus_1 + 1, true);
}

Formula gerstenhaber_formula(int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("gerstenhaber_formula: p,q >= 1 required");
  Formula f;
  f.p = p;
  f.q = q;
  f.out_degree = p + q - 1;
  int out = f.out_degree;
  for (int i = 1; i <= p; ++i) {
    FormulaTerm t;
    t.coeff = (i * (q - 1)) % 2 == 0 ? 1 : -1;
    std::vector<int> v1(static_cast<size_t>(p) + 1);
    for (int j = 0; j <= p; ++j) v1[static_cast<size_t>(j)] = j < i ? j : j + q - 1;
    std::vector<int> v2(static_cast<size_t>(q) + 1);
    for (int j = 0; j <= q; ++j) v2[static_cast<size_t>(j)] = i - 1 + j;
    t.f1 = {p, out, std::move(v1)};
    t.f2 = {q, out, std::move(v2)};
    t.second_first = false;
    f.terms.push_back(std::move(t));
  }
  for (int i = 1; i <= q; ++i) {
    FormulaTerm t;
    t.coeff = (p + q + 1 + i * (p + 1)) % 2 == 0 ? 1 : -1;
    std::vector<int> v2(static_cast<size_t>(q) + 1);
    for (int j = 0; j <= q; ++j) v2[static_cast<size_t>(j)] = j < i ? j : j + p - 1;
    std::vector<int> v1(static_cast<size_t>(p) + 1);
    for (int j = 0; j <= p; ++j) v1[static_cast<size_t>(j)] = i - 1 + j;
    t.f1 = {p, out, std::move(v1)};
    t.f2 = {q, out, std::move(v2)};
    t.second_first = true;
    f.terms.push_back(std::move(t));
  }
  canonical_sort(f);
  return f;
}

namespace {

std::string map_text(const OrdinalMap& f, const std::string& arg) {
  auto [epi, mono] = epi_mono_factor(f);
  std::string s;
  std::vector<int> ds = coface_word(mono);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += "d" + std::to_string(*it);
  }
  std::vector<int> ss = codegeneracy_word(epi);
  for (auto it = ss.rbegin(); it != ss.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(*it);
  }
  if (s.empty()) return arg;
  return s + "(" + arg + ")";
}

}  // namespace

std::string to_text(const FormulaTerm& t) {
  std::string a = map_text(t.f1, "a");
  std::string b = map_text(t.f2, "b");
  return t.second_first ? b + " " + a : a + " " + b;
}

std::string to_text(const Formula& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    const FormulaTerm& t = f.terms[i];
    if (i == 0)
      s += t.coeff > 0 ? "" : "- ";
    else
      s += t.coeff > 0 ? " + " : " - ";
    s += to_text(t);
  }
  return s;
}

nlohmann::json formula_to_json(const Formula& f) {
  nlohmann::json j;
  j["p"] = f.p;
  j["q"] = f.q;
  j["out_degree"] = f.out_degree;
  j["terms"] = nlohmann::json::array();
  for (const FormulaTerm& t : f.terms) {
    nlohmann::json jt;
    jt["coeff"] = t.coeff;
    jt["f1"] = t.f1.values;
    jt["f2"] = t.f2.values;
    jt["order"] = t.second_first ? "ba" : "ab";
    j["terms"].push_back(std::move(jt));
  }
  return j;
}

Formula formula_from_json(const nlohmann::json& j) {
  Formula f;
  f.p = j.at("p").get<int>();
  f.q = j.at("q").get<int>();
  f.out_degree = j.at("out_degree").get<int>();
  for (const auto& jt : j.at("terms")) {
    FormulaTerm t;
    t.coeff = jt.at("coeff").get<int>();
    t.f1 = {f.p, f.out_degree, jt.at("f1").get<std::vector<int>>()};
    t.f2 = {f.q, f.out_degree, jt.at("f2").get<std::vector<int>>()};
    t.second_first = jt.at("order").get<std::string>() == "ba";
    f.terms.push_back(std::move(t));
  }
  return f;
}

}  // namespace opad
