#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "wreathlr/oracle/group.hpp"

using namespace wreathlr::oracle;

namespace {

// Monomial matrix of (f, pi) in C_k wr S_n: column y holds w^{f(pi y)} in row pi(y).
Eigen::MatrixXcd monomial(const WreathElement& e, int k)
{
  const auto n = static_cast<Eigen::Index>(e.pi.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const double angle = 2.0 * 3.14159265358979323846 / k;
  for (Eigen::Index y = 0; y < n; ++y) {
    const int x = e.pi[static_cast<std::size_t>(y)];
    m(x, y) = std::polar(1.0, angle * e.f[static_cast<std::size_t>(x)]);
  }
  return m;
}

void check_monomial_law(const GroupPtr& g, int k, int samples)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g->order()) - 1);
  for (int s = 0; s < samples; ++s) {
    const int a = pick(rng);
    const int b = pick(rng);
    const Eigen::MatrixXcd lhs = monomial(g->wreath_element(g->mul(a, b)), k);
    const Eigen::MatrixXcd rhs = monomial(g->wreath_element(a), k) * monomial(g->wreath_element(b), k);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

} // namespace

TEST_CASE("permutation ranks")
{
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  for (std::size_t r = 0; r < 24; ++r)
    CHECK(perm_rank(perm_unrank(r, 4)) == r);
  CHECK(perm_unrank(0, 3) == Permutation{0, 1, 2});
  CHECK(perm_unrank(5, 3) == Permutation{2, 1, 0});
  const Permutation a{1, 2, 0};
  const Permutation b{1, 0, 2};
  CHECK(perm_compose(a, b) == Permutation{2, 1, 0});
  CHECK(perm_compose(a, perm_inverse(a)) == Permutation{0, 1, 2});
}

TEST_CASE("small groups satisfy the axioms")
{
  for (int k = 1; k <= 6; ++k) {
    const auto c = GroupData::cyclic(k);
    CHECK(c->order() == static_cast<std::size_t>(k));
    CHECK(satisfies_group_axioms(*c));
  }
  for (int n = 0; n <= 4; ++n) {
    const auto s = GroupData::symmetric(n);
    CHECK(s->order() == factorial(n));
    CHECK(s->symmetric_degree() == n);
    CHECK(satisfies_group_axioms(*s));
  }
  CHECK(GroupData::symmetric(3).get() == GroupData::symmetric(3).get());
  CHECK_THROWS_AS(GroupData::symmetric(7), std::invalid_argument);
  CHECK(GroupData::trivial()->order() == 1);
}

TEST_CASE("from_table rejects non-groups")
{
  CHECK_NOTHROW(GroupData::from_table({{0, 1}, {1, 0}}, "C2"));
  CHECK_THROWS_AS(GroupData::from_table({{0, 1}, {1, 1}}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(GroupData::from_table({{0, 1}, {1, 2}}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(GroupData::from_table({{0, 1}}, "bad"), std::invalid_argument);
  // A quasigroup with identity that is not associative.
  CHECK_THROWS_AS(GroupData::from_table({{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}},
                                        "loop"),
                  std::invalid_argument);
}

TEST_CASE("wreath products follow the monomial matrix law")
{
  const auto c2s2 = GroupData::wreath(GroupData::cyclic(2), 2);
  CHECK(c2s2->order() == 8);
  CHECK(satisfies_group_axioms(*c2s2));
  check_monomial_law(c2s2, 2, 64);

  const auto c3s3 = GroupData::wreath(GroupData::cyclic(3), 3);
  CHECK(c3s3->order() == 162);
  check_monomial_law(c3s3, 3, 500);

  // Beyond the tabulation threshold products are evaluated structurally.
  const auto c2s5 = GroupData::wreath(GroupData::cyclic(2), 5);
  CHECK(c2s5->order() == 3840);
  check_monomial_law(c2s5, 2, 500);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 3839);
  for (int s = 0; s < 200; ++s) {
    const int a = pick(rng);
    const int b = pick(rng);
    const int c = pick(rng);
    CHECK(c2s5->mul(c2s5->mul(a, b), c) == c2s5->mul(a, c2s5->mul(b, c)));
    CHECK(c2s5->mul(a, c2s5->inverse(a)) == c2s5->identity());
  }
}

TEST_CASE("wreath element coding")
{
  const auto g = GroupData::wreath(GroupData::cyclic(3), 3);
  for (int i = 0; i < static_cast<int>(g->order()); ++i)
    CHECK(g->wreath_index(g->wreath_element(i)) == i);
  const auto id = g->wreath_element(g->identity());
  CHECK(id.pi == Permutation{0, 1, 2});
  CHECK(id.f == std::vector<int>{0, 0, 0});
  CHECK(g->wreath_degree() == 3);
  CHECK(g->base()->order() == 3);
  CHECK(GroupData::wreath(GroupData::cyclic(2), 0)->order() == 1);
}

TEST_CASE("budget limits")
{
  Budget small;
  small.max_group_order = 100;
  CHECK_THROWS_AS(GroupData::wreath(GroupData::cyclic(2), 4, small), BudgetExceeded);
  CHECK_THROWS_AS(GroupData::wreath(GroupData::cyclic(2), 6), BudgetExceeded);
  CHECK_THROWS_AS(
      GroupData::product({GroupData::cyclic(6), GroupData::cyclic(6), GroupData::cyclic(6)}, small),
      BudgetExceeded);
}

TEST_CASE("direct products")
{
  const auto p = GroupData::product({GroupData::cyclic(2), GroupData::cyclic(3)});
  CHECK(p->order() == 6);
  CHECK(satisfies_group_axioms(*p));
  CHECK(p->split(p->join(std::vector<int>{1, 2})) == std::vector<int>{1, 2});
  CHECK(p->join(std::vector<int>{1, 0}) == 3);
  const auto a = p->join(std::vector<int>{1, 2});
  const auto b = p->join(std::vector<int>{1, 2});
  CHECK(p->split(p->mul(a, b)) == std::vector<int>{0, 1});
}

TEST_CASE("embeddings")
{
  const auto f = GroupData::cyclic(2);
  const auto g1 = GroupData::wreath(f, 1);
  const auto g2 = GroupData::wreath(f, 2);
  const auto g3 = GroupData::wreath(f, 3);

  const auto e12 = standard_embedding(g1, g2);
  const auto e23 = standard_embedding(g2, g3);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(e12.image[static_cast<std::size_t>(g1->mul(a, b))] ==
            g2->mul(e12.image[static_cast<std::size_t>(a)], e12.image[static_cast<std::size_t>(b)]));
  for (std::size_t h = 0; h < g2->order(); ++h) {
    const auto e = g3->wreath_element(e23.image[h]);
    CHECK(e.pi[2] == 2);
    CHECK(e.f[2] == 0);
  }
  const auto e13 = compose(e12, e23);
  CHECK(e13.image.size() == 2);
  CHECK(e13.preimage[static_cast<std::size_t>(e13.image[1])] == 1);

  const auto blocks = GroupData::product({g1, g2});
  const auto be = block_embedding(blocks, g3);
  CHECK(be.image.size() == 16);
  for (std::size_t i = 0; i < be.image.size(); ++i) {
    const auto parts = blocks->split(static_cast<int>(i));
    const auto e = g3->wreath_element(be.image[i]);
    const auto first = g1->wreath_element(parts[0]);
    const auto second = g2->wreath_element(parts[1]);
    CHECK(e.pi[0] == 0);
    CHECK(e.f[0] == first.f[0]);
    CHECK(e.pi[1] == second.pi[0] + 1);
    CHECK(e.pi[2] == second.pi[1] + 1);
    CHECK(e.f[1] == second.f[0]);
    CHECK(e.f[2] == second.f[1]);
  }

  CHECK_THROWS_AS(make_embedding(g1, g2, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_embedding(GroupData::cyclic(3), g2, {0, 1, 2}), std::invalid_argument);
  CHECK(trivial_embedding(g2).image == std::vector<int>{g2->identity()});
}
