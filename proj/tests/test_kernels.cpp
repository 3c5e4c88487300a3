#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wreathlr/oracle/kernels.hpp"
#include "wreathlr/oracle/wreath_oracle.hpp"

using namespace wreathlr;
using namespace wreathlr::oracle;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<Complex> random_function(std::size_t n, unsigned seed)
{
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Complex> v(n);
  for (auto& x : v)
    x = {normal(rng), normal(rng)};
  return v;
}

} // namespace

TEST_CASE("serial and OpenMP kernels agree")
{
  for (const char* name : {"C2", "C3", "S3"}) {
    WreathTower tower(builtin_group(name));
    const int n = 2;
    const auto g = tower.group(n);
    const auto h = tower.group(n - 1);
    const auto emb = standard_embedding(h, g);
    for (const auto& lambda : multipartitions_of(n, tower.l())) {
      const auto& rep = tower.phi(lambda);
      const auto t_s = kernels::serial::traces(rep.images());
      const auto t_o = kernels::omp::traces(rep.images());
      CHECK(max_diff(t_s, t_o) < 1e-12);
      CHECK(std::abs(kernels::serial::inner_product(t_s, t_s) -
                     kernels::omp::inner_product(t_s, t_s)) < 1e-12);
      CHECK(kernels::serial::homomorphism_defect(*g, rep.images()) ==
            doctest::Approx(kernels::omp::homomorphism_defect(*g, rep.images())));
      CHECK(kernels::serial::class_function_defect(*g, t_s) ==
            doctest::Approx(kernels::omp::class_function_defect(*g, t_s)));
    }
    const auto rand_h = random_function(h->order(), 11);
    CHECK(max_diff(kernels::serial::induced_character(emb, rand_h),
                   kernels::omp::induced_character(emb, rand_h)) < 1e-12);
    const auto rand_g = random_function(g->order(), 12);
    CHECK(std::abs(kernels::serial::inner_product(rand_g, rand_g) -
                   kernels::omp::inner_product(rand_g, rand_g)) < 1e-9);
    CHECK(kernels::serial::class_function_defect(*g, rand_g) ==
          doctest::Approx(kernels::omp::class_function_defect(*g, rand_g)));
  }
}

TEST_CASE("kernel values on known inputs")
{
  const auto g = GroupData::cyclic(4);
  const std::vector<Complex> ones(4, 1.0);
  CHECK(std::abs(kernels::serial::inner_product(ones, ones) - Complex(1.0)) < 1e-15);
  const std::vector<Complex> alternating{1.0, -1.0, 1.0, -1.0};
  CHECK(std::abs(kernels::omp::inner_product(ones, alternating)) < 1e-15);
  CHECK(kernels::serial::class_function_defect(*g, alternating) == 0.0);

  // Inducing the trivial character from the trivial subgroup gives the regular character.
  const auto emb = trivial_embedding(g);
  const auto reg = kernels::omp::induced_character(emb, std::vector<Complex>{1.0});
  CHECK(max_diff(reg, {4.0, 0.0, 0.0, 0.0}) < 1e-15);

  std::vector<Matrix> images(4, Matrix::Identity(1, 1));
  CHECK(kernels::serial::homomorphism_defect(*g, images) == 0.0);
  images[1](0, 0) = -1.0;
  CHECK(kernels::omp::homomorphism_defect(*g, images) == doctest::Approx(2.0));
}

TEST_CASE("empty inputs")
{
  CHECK(kernels::serial::traces({}).empty());
  CHECK(kernels::omp::traces({}).empty());
}
