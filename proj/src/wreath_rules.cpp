#include "wreathlr/wreath_rules.hpp"

#include <stdexcept>

#include "wreathlr/tableau.hpp"

namespace wreathlr {

namespace {

void require_same_length(const MultiPartition& a, const MultiPartition& b)
{
  if (a.length() != b.length())
    throw std::invalid_argument("multipartitions " + to_string(a) + " and " + to_string(b) +
                                " have different component counts");
}

void require_dims(const MultiPartition& lambda, const DimensionVector& dims)
{
  if (lambda.length() != dims.l())
    throw std::invalid_argument("dimension vector has " + std::to_string(dims.l()) +
                                " entries but " + to_string(lambda) + " has " +
                                std::to_string(lambda.length()) + " components");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplicity");
  return out;
}

} // namespace

DimensionVector::DimensionVector(std::vector<int> dims) : dims_(std::move(dims))
{
  if (dims_.empty())
    throw std::invalid_argument("dimension vector must not be empty");
  if (dims_[0] != 1)
    throw std::invalid_argument("the first irreducible must be the trivial one (dimension 1)");
  for (int d : dims_)
    if (d < 1)
      throw std::invalid_argument("irreducible dimensions must be positive");
}

IrrLabel DimensionVector::label(int index) const
{
  if (index < 1 || index > l())
    throw std::out_of_range("irreducible index out of range");
  return {index, dims_[static_cast<std::size_t>(index - 1)]};
}

std::uint64_t DimensionVector::group_order() const
{
  std::uint64_t sum = 0;
  for (int d : dims_)
    sum += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
  return sum;
}

void Decomposition::add(const MultiPartition& mp, std::uint64_t mult)
{
  if (mult == 0)
    return;
  if (l_ == 0)
    l_ = mp.length();
  else if (mp.length() != l_)
    throw std::invalid_argument("decomposition terms must share one component count");
  terms_[mp] += mult;
}

void Decomposition::add(const Decomposition& other, std::uint64_t scale)
{
  for (const auto& [mp, m] : other.terms_)
    add(mp, checked_mul(m, scale));
}

std::uint64_t Decomposition::multiplicity(const MultiPartition& mp) const
{
  auto it = terms_.find(mp);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t wreath_lr_coefficient(const MultiPartition& lambda, const MultiPartition& delta,
                                    const MultiPartition& gamma)
{
  require_same_length(lambda, delta);
  require_same_length(lambda, gamma);
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < lambda.components().size(); ++i) {
    product = checked_mul(product, lr_coefficient(lambda[i], delta[i], gamma[i]));
    if (product == 0)
      return 0;
  }
  return product;
}

Decomposition wreath_lr_expand(const MultiPartition& lambda, const MultiPartition& delta)
{
  require_same_length(lambda, delta);

  // Cartesian product of the componentwise classical expansions.
  std::vector<std::pair<std::vector<Partition>, std::uint64_t>> partial{{{}, 1}};
  for (std::size_t i = 0; i < lambda.components().size(); ++i) {
    const auto expansion = lr_expand(lambda[i], delta[i]);
    std::vector<std::pair<std::vector<Partition>, std::uint64_t>> next;
    for (const auto& [prefix, m] : partial) {
      for (const auto& [gamma, c] : expansion) {
        auto extended = prefix;
        extended.push_back(gamma);
        next.emplace_back(std::move(extended), checked_mul(m, c));
      }
    }
    partial = std::move(next);
  }

  Decomposition out;
  for (auto& [comps, m] : partial)
    out.add(MultiPartition(std::move(comps)), m);
  return out;
}

Decomposition induce_one_step(const MultiPartition& lambda, const DimensionVector& dims)
{
  require_dims(lambda, dims);
  Decomposition out;
  for (std::size_t i = 0; i < lambda.components().size(); ++i)
    for (auto& gamma : y_plus(lambda[i]))
      out.add(lambda.with_component(i, std::move(gamma)), static_cast<std::uint64_t>(dims[i]));
  return out;
}

Decomposition restrict_one_step(const MultiPartition& lambda, const DimensionVector& dims)
{
  require_dims(lambda, dims);
  if (lambda.weight() == 0)
    throw std::invalid_argument("cannot restrict a representation of the trivial group F wr S_0");
  Decomposition out;
  for (std::size_t i = 0; i < lambda.components().size(); ++i)
    for (auto& gamma : y_minus(lambda[i]))
      out.add(lambda.with_component(i, std::move(gamma)), static_cast<std::uint64_t>(dims[i]));
  return out;
}

std::uint64_t phi_dimension(const MultiPartition& lambda, const DimensionVector& dims)
{
  require_dims(lambda, dims);
  std::uint64_t d = multinomial(lambda.shape());
  for (std::size_t i = 0; i < lambda.components().size(); ++i) {
    for (int k = 0; k < lambda[i].weight(); ++k)
      d = checked_mul(d, static_cast<std::uint64_t>(dims[i]));
    d = checked_mul(d, standard_tableau_count(lambda[i]));
  }
  return d;
}

std::uint64_t total_dimension(const Decomposition& d, const DimensionVector& dims)
{
  std::uint64_t sum = 0;
  for (const auto& [mp, m] : d.terms())
    sum += checked_mul(m, phi_dimension(mp, dims));
  return sum;
}

std::string to_text(const Decomposition& d)
{
  std::string s;
  for (const auto& [mp, m] : d.terms())
    s += std::to_string(m) + " x " + to_string(mp) + "\n";
  return s;
}

nlohmann::json to_json(const MultiPartition& mp)
{
  auto j = nlohmann::json::array();
  for (const auto& p : mp.components())
    j.push_back(p.parts());
  return j;
}

MultiPartition multipartition_from_json(const nlohmann::json& j)
{
  return parse_multipartition(j.dump());
}

nlohmann::json to_json(const Decomposition& d)
{
  auto terms = nlohmann::json::array();
  for (const auto& [mp, m] : d.terms())
    terms.push_back({{"mult", m}, {"mp", to_json(mp)}});
  return {{"terms", terms}};
}

Decomposition decomposition_from_json(const nlohmann::json& j)
{
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("decomposition JSON must be an object with a 'terms' array");
  Decomposition d;
  for (const auto& term : j["terms"]) {
    if (!term.contains("mult") || !term["mult"].is_number_unsigned())
      throw std::invalid_argument("decomposition term needs a non-negative integer 'mult'");
    d.add(multipartition_from_json(term.at("mp")), term["mult"].get<std::uint64_t>());
  }
  return d;
}

} // namespace wreathlr
