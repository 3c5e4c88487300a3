#include "wreathlr/oracle/kernels.hpp"

#include <algorithm>

namespace wreathlr::oracle::kernels::serial {

std::vector<Complex> traces(std::span<const Matrix> images)
{
  std::vector<Complex> out(images.size());
  for (std::size_t g = 0; g < images.size(); ++g)
    out[g] = images[g].trace();
  return out;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b)
{
  Complex sum = 0.0;
  for (std::size_t g = 0; g < a.size(); ++g)
    sum += a[g] * std::conj(b[g]);
  return sum / static_cast<double>(a.size());
}

std::vector<Complex> induced_character(const Embedding& emb, std::span<const Complex> chi)
{
  const GroupData& G = *emb.group;
  const int order = static_cast<int>(G.order());
  std::vector<Complex> out(G.order());
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
  for (int x = 0; x < order; ++x)
    for (int a = 0; a < order; ++a) {
      const int conj = g.mul(g.mul(x, a), g.inverse(x));
      worst = std::max(worst, std::abs(values[static_cast<std::size_t>(conj)] -
                                       values[static_cast<std::size_t>(a)]));
    }
  return worst;
}

} // namespace wreathlr::oracle::kernels::serial
