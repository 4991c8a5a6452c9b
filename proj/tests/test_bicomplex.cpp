#include <doctest.h>

#include <random>

#include "opad/bicomplex.hpp"

using namespace opad;

namespace {

std::mt19937 rng(4242);

LatticePath random_binary_path(int max_extent) {
  int p = static_cast<int>(rng() % static_cast<unsigned>(max_extent + 1));
  int q = static_cast<int>(rng() % static_cast<unsigned>(max_extent + 1));
  std::vector<int> word;
  for (int i = 0; i <= p; ++i) word.push_back(1);
  for (int i = 0; i <= q; ++i) word.push_back(2);
  std::shuffle(word.begin(), word.end(), rng);
  std::vector<int> labels(word.size() + 1, 1);
  for (int c = 0; c < 2; ++c)
    if (rng() % 2) ++labels[rng() % labels.size()];
  return {2, {p, q}, word, labels};
}

}  // namespace

TEST_CASE("stop increments and face collapses") {
  LatticePath psi{2, {1, 1}, {1, 2, 2, 1}, {1, 0, 1, 0, 1}};
  LatticePath up = increment_stop(psi, 1);
  CHECK(up.labels == std::vector<int>{1, 0, 2, 0, 1});
  CHECK(up.source_degree() == psi.source_degree() + 1);

  LatticePath cut = collapse_axis_generator(psi, 1, 0);
  CHECK(cut.word == std::vector<int>{2, 2, 1});
  CHECK(cut.labels == std::vector<int>{1, 1, 0, 1});
  CHECK(cut.extents == std::vector<int>{0, 1});
  CHECK(cut.source_degree() == psi.source_degree());
}

TEST_CASE("degeneracy detection") {
  // label 0 at a corner is fine; at a straight internal vertex degenerate
  LatticePath normal{2, {1, 1}, {1, 2, 2, 1}, {1, 0, 1, 0, 1}};
  CHECK_FALSE(is_degenerate(normal));
  LatticePath degen{2, {1, 0}, {1, 1, 2}, {1, 0, 1, 1}};
  CHECK(is_degenerate(degen));
}

TEST_CASE("delta squares to zero") {
  for (int trial = 0; trial < 100; ++trial) {
    BicomplexElement x;
    x.add(random_binary_path(2), 1);
    for (int cls = 1; cls <= 3; ++cls)
      CHECK(delta_diff(delta_diff(x, cls), cls).is_zero());
  }
}

TEST_CASE("vertical differential squares to zero") {
  for (int trial = 0; trial < 100; ++trial) {
    BicomplexElement x;
    x.add(random_binary_path(3), 1);
    for (int cls = 1; cls <= 3; ++cls)
      CHECK(vertical_diff(vertical_diff(x, cls), cls).is_zero());
  }
}

TEST_CASE("lambda is a cocycle of the total complex") {
  for (int n_minus_1 = 1; n_minus_1 <= 2; ++n_minus_1) {
    int cls = n_minus_1 + 1;
    for (int m = 0; m <= 4; ++m) {
      BicomplexElement a = delta_diff(lambda_element(n_minus_1, m), cls);
      BicomplexElement b = vertical_diff(lambda_element(n_minus_1, m + 1), cls);
      CHECK((a + b).is_zero());
    }
  }
}

TEST_CASE("lambda components are normal paths of the right bidegrees") {
  BicomplexElement l = lambda_element(1, 2);
  CHECK_FALSE(l.is_zero());
  for (const auto& [psi, c] : l.terms) {
    CHECK(is_normal(psi));
    CHECK(complexity(psi) == 2);
    CHECK(psi.extents[0] + psi.extents[1] == 3);
    CHECK((c == 1 || c == -1));
  }
}
