#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreathlr/tableau.hpp"
#include "wreathlr/wreath_rules.hpp"

using namespace wreathlr;

namespace {

std::uint64_t fact(int n)
{
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t power(std::uint64_t b, int e)
{
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i)
    r *= b;
  return r;
}

const DimensionVector kS3({1, 2, 1});

} // namespace

TEST_CASE("dimension vectors")
{
  CHECK(kS3.group_order() == 6);
  CHECK(kS3.label(2).dim == 2);
  CHECK_THROWS_AS(DimensionVector({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionVector({}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionVector({1, 0}), std::invalid_argument);
}

TEST_CASE("the seven-term induction example")
{
  const auto d = induce_one_step({{2}, {2, 1}, {1, 1, 1}}, kS3);
  Decomposition expected;
  expected.add({{2, 1}, {2, 1}, {1, 1, 1}}, 1);
  expected.add({{3}, {2, 1}, {1, 1, 1}}, 1);
  expected.add({{2}, {3, 1}, {1, 1, 1}}, 2);
  expected.add({{2}, {2, 2}, {1, 1, 1}}, 2);
  expected.add({{2}, {2, 1, 1}, {1, 1, 1}}, 2);
  expected.add({{2}, {2, 1}, {2, 1, 1}}, 1);
  expected.add({{2}, {2, 1}, {1, 1, 1, 1}}, 1);
  CHECK(d == expected);
  CHECK(d.size() == 7);
}

TEST_CASE("decomposition bookkeeping")
{
  Decomposition d;
  d.add({{1}, {}}, 2);
  d.add({{1}, {}}, 1);
  d.add({{}, {1}}, 0);
  CHECK(d.multiplicity({{1}, {}}) == 3);
  CHECK(d.size() == 1);
  CHECK_THROWS_AS(d.add({{1}, {}, {}}, 1), std::invalid_argument);
  Decomposition twice;
  twice.add(d, 2);
  CHECK(twice.multiplicity({{1}, {}}) == 6);
}

TEST_CASE("the wreath coefficient factors over components")
{
  const MultiPartition lambda{{1}, {1}};
  const MultiPartition delta{{1}, {}};
  CHECK(wreath_lr_coefficient(lambda, delta, {{2}, {1}}) == 1);
  CHECK(wreath_lr_coefficient(lambda, delta, {{1}, {2}}) == 0);
  CHECK(wreath_lr_coefficient({{2, 1}, {2, 1}}, {{2, 1}, {2, 1}}, {{3, 2, 1}, {3, 2, 1}}) == 4);
  CHECK_THROWS_AS(wreath_lr_coefficient({{1}}, {{1}, {}}, {{2}, {}}), std::invalid_argument);

  for (int k = 0; k <= 3; ++k)
    for (int r = 0; r <= 3 - k; ++r)
      for (const auto& a : multipartitions_of(k, 2))
        for (const auto& b : multipartitions_of(r, 2)) {
          const auto expanded = wreath_lr_expand(a, b);
          for (const auto& g : multipartitions_of(k + r, 2))
            CHECK(expanded.multiplicity(g) == wreath_lr_coefficient(a, b, g));
        }
}

TEST_CASE("wreath LR is symmetric")
{
  for (int k = 0; k <= 3; ++k)
    for (int r = 0; r <= 3; ++r)
      for (const auto& a : multipartitions_of(k, 3))
        for (const auto& b : multipartitions_of(r, 3))
          CHECK(wreath_lr_expand(a, b) == wreath_lr_expand(b, a));
}

TEST_CASE("phi dimensions sum to the group order")
{
  for (const auto& dims : {DimensionVector({1, 1}), DimensionVector({1, 1, 1}), kS3,
                           DimensionVector({1, 1, 2, 3, 3})}) {
    for (int n = 0; n <= 4; ++n) {
      std::uint64_t sum = 0;
      for (const auto& mp : multipartitions_of(n, dims.l())) {
        const auto d = phi_dimension(mp, dims);
        sum += d * d;
      }
      CHECK(sum == power(dims.group_order(), n) * fact(n));
    }
  }
  CHECK(phi_dimension({{2}, {2, 1}, {1, 1, 1}}, kS3) == 8960);
}

TEST_CASE("induction multiplies the dimension by (n+1)|F|")
{
  for (const auto& dims : {DimensionVector({1, 1}), kS3}) {
    for (int n = 0; n <= 4; ++n)
      for (const auto& mp : multipartitions_of(n, dims.l()))
        CHECK(total_dimension(induce_one_step(mp, dims), dims) ==
              phi_dimension(mp, dims) * static_cast<std::uint64_t>(n + 1) * dims.group_order());
  }
}

TEST_CASE("induction by one step equals wreath LR against the regular representation of F")
{
  // Ind from F wr S_n to F wr S_n x F wr S_1 picks up sum_i dim U_i copies of U_i.
  for (int n = 0; n <= 3; ++n) {
    for (const auto& mp : multipartitions_of(n, 3)) {
      Decomposition via_lr;
      for (int i = 0; i < 3; ++i)
        via_lr.add(wreath_lr_expand(mp, MultiPartition::unit(3, i)),
                   static_cast<std::uint64_t>(kS3[static_cast<std::size_t>(i)]));
      CHECK(induce_one_step(mp, kS3) == via_lr);
    }
  }
}

TEST_CASE("restriction is Frobenius-dual to induction")
{
  for (const auto& dims : {DimensionVector({1, 1}), kS3, DimensionVector({1, 1, 2, 3, 3})}) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& lambda : multipartitions_of(n, dims.l())) {
        const auto up = induce_one_step(lambda, dims);
        for (const auto& gamma : multipartitions_of(n + 1, dims.l()))
          CHECK(up.multiplicity(gamma) == restrict_one_step(gamma, dims).multiplicity(lambda));
      }
    }
  }
  CHECK_THROWS_AS(restrict_one_step(MultiPartition::empty(3), kS3), std::invalid_argument);
}

TEST_CASE("restriction preserves the dimension")
{
  for (int n = 1; n <= 4; ++n)
    for (const auto& mp : multipartitions_of(n, 3))
      CHECK(total_dimension(restrict_one_step(mp, kS3), kS3) == phi_dimension(mp, kS3));
}

TEST_CASE("text and JSON forms")
{
  const auto d = induce_one_step({{1}, {}}, DimensionVector({1, 1}));
  CHECK(to_text(d) == "1 x [[2],[]]\n1 x [[1,1],[]]\n1 x [[1],[1]]\n");
  CHECK(decomposition_from_json(to_json(d)) == d);
  const MultiPartition mp{{2}, {}, {1}};
  CHECK(multipartition_from_json(to_json(mp)) == mp);
  CHECK_THROWS(decomposition_from_json(nlohmann::json{{"terms", 3}}));
}
