#include "wreathlr/oracle/kernels.hpp"

#include <algorithm>

namespace wreathlr::oracle::kernels::omp {

std::vector<Complex> traces(std::span<const Matrix> images)
{
  const auto n = static_cast<std::ptrdiff_t>(images.size());
  std::vector<Complex> out(images.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t g = 0; g < n; ++g)
    out[static_cast<std::size_t>(g)] = images[static_cast<std::size_t>(g)].trace();
  return out;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b)
{
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  double re = 0.0;
  double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (std::ptrdiff_t g = 0; g < n; ++g) {
    const Complex term = a[static_cast<std::size_t>(g)] * std::conj(b[static_cast<std::size_t>(g)]);
    re += term.real();
    im += term.imag();
  }
  return Complex(re, im) / static_cast<double>(a.size());
}

std::vector<Complex> induced_character(const Embedding& emb, std::span<const Complex> chi)
{
  const GroupData& G = *emb.group;
  const int order = static_cast<int>(G.order());
  std::vector<Complex> out(G.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (int g = 0; g < order; ++g) {
    Complex sum = 0.0;
    for (int x = 0; x < order; ++x) {
      const int h = emb.preimage[static_cast<std::size_t>(G.mul(G.mul(G.inverse(x), g), x))];
      if (h >= 0)
        sum += chi[static_cast<std::size_t>(h)];
    }
    out[static_cast<std::size_t>(g)] = sum / static_cast<double>(emb.sub->order());
  }
  return out;
}

double homomorphism_defect(const GroupData& g, std::span<const Matrix> images)
{
  const int order = static_cast<int>(g.order());
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : worst)
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const Matrix diff = images[static_cast<std::size_t>(g.mul(a, b))] -
                          images[static_cast<std::size_t>(a)] * images[static_cast<std::size_t>(b)];
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  return worst;
}

double class_function_defect(const GroupData& g, std::span<const Complex> values)
{
  const int order = static_cast<int>(g.order());
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (int x = 0; x < order; ++x)
    for (int a = 0; a < order; ++a) {
      const int conj = g.mul(g.mul(x, a), g.inverse(x));
      worst = std::max(worst, std::abs(values[static_cast<std::size_t>(conj)] -
                                       values[static_cast<std::size_t>(a)]));
    }
  return worst;
}

} // namespace wreathlr::oracle::kernels::omp
