#include <doctest.h>

#include <set>

#include "opad/lattice.hpp"
#include "opad/mpath.hpp"

using namespace opad;

namespace {

MPath diagonal_path(int n) {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a <= n + 1; ++a) pts.push_back({a, a});
  return {n, n, n, std::move(pts)};
}

}  // namespace

TEST_CASE("mpath_from_maps") {
  CHECK(mpath_from_maps(ordinal_identity(2), ordinal_identity(2)) ==
        diagonal_path(2));
  // eta_{m,n}: i -> (i,0) up to m, then (m+1, i-m)
  int m = 2, n = 3;
  MPath eta = mpath_from_maps(tau_map(n, m), pi_map(n, m));
  CHECK(eta.p == m);
  CHECK(eta.q == n);
  for (int i = 0; i <= m; ++i)
    CHECK(eta.points[static_cast<size_t>(i)] == std::pair<int, int>{i, 0});
  for (int i = m + 1; i <= m + n + 1; ++i)
    CHECK(eta.points[static_cast<size_t>(i)] == std::pair<int, int>{m + 1, i - m});
  MPath unit = mpath_from_maps(ordinal_identity(0), ordinal_identity(0));
  CHECK(unit.points == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("shuffling census of the identity pair") {
  auto shs = enumerate_shufflings(ordinal_identity(2), ordinal_identity(2));
  CHECK(shs.size() == 8);
  int min_len = 100;
  for (const auto& sh : shs) min_len = std::min(min_len, sh.length());
  CHECK(min_len == 3);
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(ordinal_identity(2), ordinal_identity(2)) == 3);
  for (int n = 0; n <= 4; ++n)
    CHECK(linking_number(ordinal_identity(n), ordinal_identity(n)) == n + 1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      CHECK(linking_number(tau_map(m, n), pi_map(m, n)) == 1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int i = 1; i < n; ++i)
        CHECK(linking_number(tau_i_map(m, n, i), pi_i_map(m, n, i)) == 2);
  // degenerate-support conventions (sets API)
  CHECK(linking_number(std::vector<int>{}, std::vector<int>{}) == 0);
  CHECK(linking_number(std::vector<int>{}, std::vector<int>{0, 2}) == 1);
}

TEST_CASE("image intersection bounds the linking number") {
  for (int m = 0; m <= 4; ++m)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (const auto& tau : all_ordinal_maps(p, m))
          for (const auto& pi : all_ordinal_maps(q, m)) {
            std::set<int> it(tau.values.begin(), tau.values.end());
            int common = 0;
            for (int v : pi.image())
              if (it.count(v)) ++common;
            CHECK(common <= linking_number(tau, pi));
          }
}

TEST_CASE("linking number is invariant under epi-mono factorisation") {
  for (int m = 0; m <= 3; ++m)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (const auto& tau : all_ordinal_maps(p, m))
          for (const auto& pi : all_ordinal_maps(q, m)) {
            auto mt = epi_mono_factor(tau).second;
            auto mp = epi_mono_factor(pi).second;
            CHECK(linking_number(tau, pi) == linking_number(mt.image(), mp.image()));
          }
}

TEST_CASE("path linking number agrees with the dual pair") {
  CHECK(linking_number(diagonal_path(2)) == 3);
  CHECK(linking_number(mpath_from_maps(tau_map(2, 2), pi_map(2, 2))) == 1);
  for (int m = 0; m <= 3; ++m)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (const auto& tau : all_ordinal_maps(p, m))
          for (const auto& pi : all_ordinal_maps(q, m)) {
            MPath phi = mpath_from_maps(tau, pi);
            CHECK(linking_number(phi) == linking_number(tau, pi));
            auto [t2, p2] = phi.dual_pair();
            CHECK(t2 == tau);
            CHECK(p2 == pi);
          }
}

TEST_CASE("n-equivalence") {
  CHECK_FALSE(n_equivalent(diagonal_path(2), 2));
  CHECK(n_equivalent(diagonal_path(2), 3));
  CHECK(n_equivalent(mpath_from_maps(tau_map(2, 2), pi_map(2, 2)), 1));
}

TEST_CASE("classification") {
  MPath eta = mpath_from_maps(tau_map(2, 2), pi_map(2, 2));
  PathClass c = classify(eta);
  CHECK(c.delannoy);
  CHECK(c.smooth);
  CHECK(c.low_corners.empty());
  CHECK(c.upper_corners.empty());

  PathClass d = classify(diagonal_path(2));
  CHECK(d.smooth);
  CHECK_FALSE(d.sharp);

  // the sharp staircase from the Delannoy-path discussion
  MPath sharp{9, 5, 3,
              {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2},
               {4, 2}, {5, 2}, {6, 2}, {6, 3}, {6, 4}}};
  PathClass s = classify(sharp);
  CHECK(s.delannoy);
  CHECK(s.sharp);
  CHECK_FALSE(s.smooth);
  CHECK(s.low_corners == std::vector<std::pair<int, int>>{{3, 0}, {6, 2}});
  CHECK(s.upper_corners == std::vector<std::pair<int, int>>{{3, 2}});

  MPath with_stop{2, 0, 1, {{0, 0}, {1, 1}, {1, 1}, {1, 2}}};
  CHECK_FALSE(classify(with_stop).injective);
  MPath jump{0, 1, 0, {{0, 0}, {2, 1}}};
  CHECK_FALSE(classify(jump).surjective);
}

TEST_CASE("sharp paths: supports and liftings") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const auto& phi : enumerate_delannoy(p, q)) {
        if (!classify(phi).sharp) continue;
        auto sx = phi.supp_x(), sy = phi.supp_y();
        std::set<int> inter;
        for (int v : sx)
          if (std::count(sy.begin(), sy.end(), v)) inter.insert(v);
        CHECK(inter.empty());
        CHECK(sx.size() + sy.size() == static_cast<size_t>(phi.m) + 1);
        CHECK(enumerate_liftings(phi).size() == 1);
        CHECK(min_lifting_complexity(phi) == linking_number(phi));
      }
}

TEST_CASE("factor_surjective") {
  MPath jump{1, 2, 1, {{0, 0}, {2, 1}, {3, 2}}};
  auto f = factor_surjective(jump);
  CHECK(f.surj.p == 1);
  CHECK(classify(f.surj).surjective);
  CHECK(linking_number(f.surj) == linking_number(jump));
  // recomposition through the post maps
  for (int a = 0; a <= jump.m + 1; ++a) {
    CHECK(f.post_x(f.surj.points[static_cast<size_t>(a)].first) ==
          jump.points[static_cast<size_t>(a)].first);
    CHECK(f.post_y(f.surj.points[static_cast<size_t>(a)].second) ==
          jump.points[static_cast<size_t>(a)].second);
  }

  for (int m = 0; m <= 3; ++m)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (const auto& tau : all_ordinal_maps(p, m))
          for (const auto& pi : all_ordinal_maps(q, m)) {
            MPath phi = mpath_from_maps(tau, pi);
            auto g = factor_surjective(phi);
            CHECK(classify(g.surj).surjective);
            CHECK(linking_number(g.surj) == linking_number(phi));
          }
}

TEST_CASE("factor_injective") {
  MPath with_stop{2, 0, 1, {{0, 0}, {1, 1}, {1, 1}, {1, 2}}};
  auto f = factor_injective(with_stop);
  CHECK(f.inj.m == 1);
  CHECK(classify(f.inj).injective);
  CHECK(linking_number(f.inj) == linking_number(with_stop));

  MPath inj{1, 1, 1, {{0, 0}, {1, 1}, {2, 2}}};
  auto g = factor_injective(inj);
  CHECK(g.pre.is_identity());
  CHECK(g.inj == inj);

  for (int m = 0; m <= 3; ++m)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (const auto& tau : all_ordinal_maps(p, m))
          for (const auto& pi : all_ordinal_maps(q, m)) {
            MPath phi = mpath_from_maps(tau, pi);
            auto h = factor_injective(phi);
            CHECK(linking_number(h.inj) == linking_number(phi));
          }
}

TEST_CASE("sharpen") {
  MPath sharp{3, 1, 1, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}};
  auto s0 = sharpen(sharp);
  CHECK(s0.pre.is_identity());
  CHECK(s0.sharp == sharp);

  MPath one_diag{1, 0, 0, {{0, 0}, {1, 1}}};  // k = 1 cut
  auto s1 = sharpen(one_diag);
  CHECK(s1.sharp.m == 2);
  CHECK(classify(s1.sharp).sharp);
  CHECK(linking_number(s1.sharp) == linking_number(one_diag));

  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const auto& phi : enumerate_delannoy(p, q)) {
        auto s = sharpen(phi);
        CHECK(classify(s.sharp).sharp);
        CHECK(classify(s.sharp).delannoy);
        CHECK(linking_number(s.sharp) == linking_number(phi));
        // the pre map recovers phi's stops
        for (int a = 0; a <= phi.m + 1; ++a)
          CHECK(s.sharp.points[static_cast<size_t>(s.pre(a))] ==
                phi.points[static_cast<size_t>(a)]);
      }
  CHECK_THROWS_AS(sharpen(MPath{0, 1, 0, {{0, 0}, {2, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("smooth_factor") {
  MPath eta = mpath_from_maps(tau_map(2, 2), pi_map(2, 2));
  auto t = smooth_factor(eta);
  CHECK(t.smooth == eta);
  CHECK(t.post_x.is_identity());
  CHECK(t.post_y.is_identity());

  // frozen: the sharp staircase smooths to EEEDNDEEDN on the (7,4) grid
  MPath sharp{9, 5, 3,
              {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2},
               {4, 2}, {5, 2}, {6, 2}, {6, 3}, {6, 4}}};
  auto f = smooth_factor(sharp);
  CHECK(f.smooth.p == 7);
  CHECK(f.smooth.q == 4);
  CHECK(classify(f.smooth).smooth);
  CHECK(linking_number(f.smooth) == 3);
  CHECK(f.smooth.points ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0},
                                         {4, 1}, {4, 2}, {5, 3}, {6, 3},
                                         {7, 3}, {8, 4}, {8, 5}});

  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const auto& phi : enumerate_delannoy(p, q)) {
        auto g = smooth_factor(phi);
        CHECK(classify(g.smooth).smooth);
        CHECK(linking_number(g.smooth) == linking_number(phi));
        // recomposition: (post_x x post_y) . smooth == phi
        for (int a = 0; a <= phi.m + 1; ++a) {
          auto pt = g.smooth.points[static_cast<size_t>(a)];
          CHECK(g.post_x(pt.first) == phi.points[static_cast<size_t>(a)].first);
          CHECK(g.post_y(pt.second) == phi.points[static_cast<size_t>(a)].second);
        }
      }
}

TEST_CASE("corner count strictly decreases under one removal step") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const auto& phi : enumerate_delannoy(p, q)) {
        PathClass c = classify(phi);
        size_t corners = c.low_corners.size() + c.upper_corners.size();
        if (corners == 0) continue;
        auto g = smooth_factor(phi);
        PathClass cs = classify(g.smooth);
        CHECK(cs.low_corners.size() + cs.upper_corners.size() == 0);
        CHECK(g.smooth.p + g.smooth.q == phi.p + phi.q + static_cast<int>(corners));
      }
}

TEST_CASE("Delannoy enumeration matches the recurrence oracle") {
  CHECK(enumerate_delannoy(0, 0).size() == 3);
  CHECK(enumerate_delannoy(1, 1).size() == 13);
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) {
      auto paths = enumerate_delannoy(p, q);
      CHECK(static_cast<long long>(paths.size()) == delannoy_number(p + 1, q + 1));
      for (const auto& phi : paths) CHECK(classify(phi).delannoy);
    }
}

TEST_CASE("smooth path census") {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      auto s1 = enumerate_smooth(p, q, 1);
      CHECK(s1.size() == 2);
      for (const auto& phi : s1) {
        CHECK(classify(phi).smooth);
        CHECK(linking_number(phi) == 1);
      }
    }
  CHECK(enumerate_smooth(1, 2, 2).size() == 3);
  CHECK(enumerate_smooth(2, 1, 2).size() == 3);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int n = 0; n <= 4; ++n)
        for (const auto& phi : enumerate_smooth(p, q, n)) {
          CHECK(classify(phi).smooth);
          CHECK(linking_number(phi) == n);
          CHECK(phi.m == p + q + 1 - n);
        }
}

TEST_CASE("smooth overlap lemma") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (const auto& phi : enumerate_delannoy(p, q)) {
        if (!classify(phi).smooth) continue;
        auto sx = phi.supp_x(), sy = phi.supp_y();
        int common = 0;
        for (int v : sx)
          if (std::count(sy.begin(), sy.end(), v)) ++common;
        CHECK(common == linking_number(phi));
      }
}
