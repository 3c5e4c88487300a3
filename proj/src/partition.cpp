#include "wreathlr/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace wreathlr {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in combinatorial count");
  return out;
}

// Exponent of the prime p in m!.
int factorial_valuation(int m, int p)
{
  int v = 0;
  for (long long q = p; q <= m; q *= p)
    v += static_cast<int>(m / q);
  return v;
}

std::vector<int> primes_up_to(int n)
{
  std::vector<int> primes;
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  for (int i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)])
      continue;
    primes.push_back(i);
    for (long long j = 1LL * i * i; j <= n; j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

// Product of prime powers; exponents must be non-negative.
std::uint64_t evaluate(const std::map<int, int>& exponents)
{
  std::uint64_t result = 1;
  for (auto [p, e] : exponents) {
    if (e < 0)
      throw std::logic_error("negative prime exponent in exact quotient");
    for (int i = 0; i < e; ++i)
      result = checked_mul(result, static_cast<std::uint64_t>(p));
  }
  return result;
}

void add_factorization(std::map<int, int>& exponents, int m, int sign)
{
  for (int p = 2; 1LL * p * p <= m; ++p) {
    while (m % p == 0) {
      exponents[p] += sign;
      m /= p;
    }
  }
  if (m > 1)
    exponents[m] += sign;
}

void enumerate_partitions(int remaining, int max_part, std::vector<int>& prefix,
                          std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<int> json_int_array(const nlohmann::json& j, std::string_view what)
{
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": expected a bracketed list");
  std::vector<int> values;
  values.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string(what) + ": entries must be integers");
    values.push_back(v.get<int>());
  }
  return values;
}

nlohmann::json parse_json(std::string_view text)
{
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw std::invalid_argument("malformed partition syntax: '" + std::string(text) + "'");
  }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (int p : parts_)
    if (p < 0)
      throw std::invalid_argument("composition parts must be non-negative");
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

MultiPartition::MultiPartition(std::initializer_list<Partition> components)
    : components_(components) {}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {}

MultiPartition MultiPartition::empty(int l)
{
  if (l < 1)
    throw std::invalid_argument("a multipartition needs at least one component");
  return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(l)));
}

MultiPartition MultiPartition::unit(int l, int i)
{
  if (i < 0 || i >= l)
    throw std::invalid_argument("unit multipartition: component index out of range");
  return empty(l).with_component(static_cast<std::size_t>(i), Partition{1});
}

int MultiPartition::weight() const noexcept
{
  int w = 0;
  for (const auto& c : components_)
    w += c.weight();
  return w;
}

Composition MultiPartition::shape() const
{
  std::vector<int> weights;
  weights.reserve(components_.size());
  for (const auto& c : components_)
    weights.push_back(c.weight());
  return Composition(std::move(weights));
}

MultiPartition MultiPartition::with_component(std::size_t i, Partition p) const
{
  auto copy = components_;
  copy.at(i) = std::move(p);
  return MultiPartition(std::move(copy));
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const
{
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

bool CanonicalOrder::operator()(const MultiPartition& a, const MultiPartition& b) const
{
  const auto& x = a.components();
  const auto& y = b.components();
  const std::size_t common = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < common; ++i) {
    if ((*this)(x[i], y[i]))
      return true;
    if ((*this)(y[i], x[i]))
      return false;
  }
  return x.size() < y.size();
}

bool WeightThenCanonical::operator()(const MultiPartition& a, const MultiPartition& b) const
{
  if (a.weight() != b.weight())
    return a.weight() < b.weight();
  return CanonicalOrder{}(a, b);
}

std::vector<Partition> partitions_of(int n)
{
  if (n < 0)
    throw std::invalid_argument("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_partitions(n, n, prefix, out);
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int l)
{
  if (n < 0 || l < 1)
    throw std::invalid_argument("multipartitions_of: need n >= 0 and l >= 1");

  std::vector<MultiPartition> out;
  if (l == 1) {
    for (auto& p : partitions_of(n))
      out.push_back(MultiPartition{std::move(p)});
    return out;
  }
  for (int first = n; first >= 0; --first) {
    const auto heads = partitions_of(first);
    const auto tails = multipartitions_of(n - first, l - 1);
    for (const auto& head : heads) {
      for (const auto& tail : tails) {
        std::vector<Partition> comps{head};
        comps.insert(comps.end(), tail.components().begin(), tail.components().end());
        out.emplace_back(std::move(comps));
      }
    }
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

std::uint64_t multipartition_count(int n, int l)
{
  if (n < 0 || l < 0)
    throw std::invalid_argument("multipartition_count: negative argument");
  std::vector<std::uint64_t> p1(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    p1[static_cast<std::size_t>(k)] = partitions_of(k).size();

  // P_0(k) = [k == 0], then convolve with P_1 once per component.
  std::vector<std::uint64_t> current(static_cast<std::size_t>(n + 1), 0);
  current[0] = 1;
  for (int c = 0; c < l; ++c) {
    std::vector<std::uint64_t> next(current.size(), 0);
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j)
        next[static_cast<std::size_t>(k)] +=
            current[static_cast<std::size_t>(j)] * p1[static_cast<std::size_t>(k - j)];
    current = std::move(next);
  }
  return current[static_cast<std::size_t>(n)];
}

std::vector<Partition> y_plus(const Partition& lambda)
{
  std::vector<Partition> out;
  auto parts = lambda.parts();
  for (int r = 0; r <= lambda.length(); ++r) {
    if (r > 0 && lambda.row(r - 1) == lambda.row(r))
      continue;
    auto grown = parts;
    if (r == lambda.length())
      grown.push_back(1);
    else
      ++grown[static_cast<std::size_t>(r)];
    out.emplace_back(std::move(grown));
  }
  return out;
}

std::vector<Partition> y_minus(const Partition& lambda)
{
  std::vector<Partition> out;
  const auto& parts = lambda.parts();
  // Lower rows first: shrinking a lower row leaves a larger sequence.
  for (int r = lambda.length() - 1; r >= 0; --r) {
    if (lambda.row(r) == lambda.row(r + 1))
      continue;
    auto shrunk = parts;
    --shrunk[static_cast<std::size_t>(r)];
    out.emplace_back(std::move(shrunk));
  }
  return out;
}

bool contains(const Partition& outer, const Partition& inner)
{
  if (inner.length() > outer.length())
    return false;
  for (int r = 0; r < inner.length(); ++r)
    if (inner.row(r) > outer.row(r))
      return false;
  return true;
}

std::uint64_t standard_tableau_count(const Partition& lambda)
{
  const int n = lambda.weight();
  std::map<int, int> exponents;
  for (int p : primes_up_to(n))
    exponents[p] = factorial_valuation(n, p);

  std::vector<int> column_heights(static_cast<std::size_t>(lambda.row(0)), 0);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.row(r); ++c)
      ++column_heights[static_cast<std::size_t>(c)];

  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.row(r); ++c) {
      const int arm = lambda.row(r) - c - 1;
      const int leg = column_heights[static_cast<std::size_t>(c)] - r - 1;
      add_factorization(exponents, arm + leg + 1, -1);
    }
  }
  return evaluate(exponents);
}

std::uint64_t multinomial(const Composition& c)
{
  std::map<int, int> exponents;
  for (int p : primes_up_to(c.weight()))
    exponents[p] = factorial_valuation(c.weight(), p);
  for (int part : c.parts())
    for (int p : primes_up_to(part))
      exponents[p] -= factorial_valuation(part, p);
  return evaluate(exponents);
}

std::uint64_t binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  return multinomial(Composition{k, n - k});
}

std::string to_string(const Partition& p)
{
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s + "]";
}

std::string to_string(const Composition& c)
{
  std::string s = "(";
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(c.parts()[i]);
  }
  return s + ")";
}

std::string to_string(const MultiPartition& mp)
{
  std::string s = "[";
  for (std::size_t i = 0; i < mp.components().size(); ++i) {
    if (i)
      s += ',';
    s += to_string(mp.components()[i]);
  }
  return s + "]";
}

Partition parse_partition(std::string_view text)
{
  return Partition(json_int_array(parse_json(text), "partition"));
}

MultiPartition parse_multipartition(std::string_view text)
{
  const auto j = parse_json(text);
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("multipartition: expected a non-empty list of partitions");
  std::vector<Partition> comps;
  for (const auto& c : j)
    comps.emplace_back(json_int_array(c, "multipartition component"));
  return MultiPartition(std::move(comps));
}

} // namespace wreathlr
