#include "wreathlr/oracle/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace wreathlr::oracle {

namespace {

// Groups up to this order get a dense multiplication table.
constexpr std::size_t kTabulateLimit = 1500;

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t limit)
{
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > limit)
    throw BudgetExceeded("group order exceeds the element budget of " + std::to_string(limit));
  return out;
}

} // namespace

std::size_t factorial(int n)
{
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t perm_rank(std::span<const int> perm)
{
  const int n = static_cast<int>(perm.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)])
        ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

Permutation perm_unrank(std::size_t rank, int n)
{
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pool[static_cast<std::size_t>(i)] = i;
  Permutation perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const std::size_t f = factorial(i);
    const std::size_t digit = rank / f;
    rank %= f;
    perm.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return perm;
}

Permutation perm_compose(std::span<const int> a, std::span<const int> b)
{
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x)
    out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

Permutation perm_inverse(std::span<const int> a)
{
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

GroupPtr GroupData::from_table(std::vector<std::vector<int>> mul, std::string name)
{
  return build_table(std::move(mul), std::move(name), true);
}

GroupPtr GroupData::build_table(std::vector<std::vector<int>> mul, std::string name,
                                bool check_associativity)
{
  const std::size_t m = mul.size();
  if (m == 0)
    throw std::invalid_argument("group table must be non-empty");
  auto g = std::shared_ptr<GroupData>(new GroupData());
  g->kind_ = Kind::Table;
  g->name_ = std::move(name);
  g->order_ = m;
  g->table_.reserve(m * m);
  for (const auto& row : mul) {
    if (row.size() != m)
      throw std::invalid_argument("group table must be square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= m)
        throw std::invalid_argument("group table entry out of range");
      g->table_.push_back(v);
    }
  }

  int identity = -1;
  for (std::size_t e = 0; e < m && identity < 0; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      ok = g->table_[e * m + a] == static_cast<int>(a) && g->table_[a * m + e] == static_cast<int>(a);
    if (ok)
      identity = static_cast<int>(e);
  }
  if (identity < 0)
    throw std::invalid_argument("group table has no identity element");
  g->identity_ = identity;

  g->inverse_.assign(m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (g->table_[a * m + b] == identity && g->table_[b * m + a] == identity)
        g->inverse_[a] = static_cast<int>(b);
  if (std::find(g->inverse_.begin(), g->inverse_.end(), -1) != g->inverse_.end())
    throw std::invalid_argument("group table: some element has no inverse");
  if (check_associativity && !satisfies_group_axioms(*g))
    throw std::invalid_argument("group table is not associative");
  g->finish();
  return g;
}

GroupPtr GroupData::wreath(GroupPtr base, int n, const Budget& budget)
{
  if (!base)
    throw std::invalid_argument("wreath product needs a base group");
  if (n < 0)
    throw std::invalid_argument("wreath product degree must be non-negative");
  std::size_t power = 1;
  for (int i = 0; i < n; ++i)
    power = checked_mul(power, base->order(), budget.max_group_order);
  const std::size_t order = checked_mul(power, factorial(n), budget.max_group_order);

  auto g = std::shared_ptr<GroupData>(new GroupData());
  g->kind_ = Kind::Wreath;
  g->name_ = base->name() + " wr S" + std::to_string(n);
  g->order_ = order;
  g->base_ = std::move(base);
  g->n_ = n;
  g->base_power_ = power;
  g->identity_ = g->wreath_index(
      {std::vector<int>(static_cast<std::size_t>(n), g->base_->identity()), perm_unrank(0, n)});

  g->inverse_.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    const auto [f, pi] = g->wreath_element(static_cast<int>(idx));
    WreathElement inv{std::vector<int>(f.size()), perm_inverse(pi)};
    for (std::size_t y = 0; y < f.size(); ++y)
      inv.f[y] = g->base_->inverse(f[static_cast<std::size_t>(pi[y])]);
    g->inverse_[idx] = g->wreath_index(inv);
  }
  g->finish();
  return g;
}

GroupPtr GroupData::product(std::vector<GroupPtr> factors, const Budget& budget)
{
  if (factors.empty())
    throw std::invalid_argument("direct product needs at least one factor");
  auto g = std::shared_ptr<GroupData>(new GroupData());
  g->kind_ = Kind::Product;
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (!f)
      throw std::invalid_argument("direct product factor is null");
    order = checked_mul(order, f->order(), budget.max_group_order);
    g->name_ += (g->name_.empty() ? "(" : " x ") + f->name();
  }
  g->name_ += ")";
  g->order_ = order;
  g->radix_.assign(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i > 0; --i)
    g->radix_[i - 1] = g->radix_[i] * factors[i]->order();
  g->factors_ = std::move(factors);

  std::vector<int> parts;
  for (const auto& f : g->factors_)
    parts.push_back(f->identity());
  g->identity_ = g->join(parts);
  g->inverse_.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    auto split = g->split(static_cast<int>(idx));
    for (std::size_t i = 0; i < split.size(); ++i)
      split[i] = g->factors_[i]->inverse(split[i]);
    g->inverse_[idx] = g->join(split);
  }
  g->finish();
  return g;
}

GroupPtr GroupData::symmetric(int n)
{
  if (n < 0 || n > 6)
    throw std::invalid_argument("symmetric group tables are limited to n <= 6");
  static std::mutex lock;
  static std::map<int, GroupPtr> cache;
  std::lock_guard guard(lock);
  if (auto it = cache.find(n); it != cache.end())
    return it->second;

  const std::size_t order = factorial(n);
  std::vector<Permutation> perms;
  for (std::size_t r = 0; r < order; ++r)
    perms.push_back(perm_unrank(r, n));
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      mul[a][b] = static_cast<int>(perm_rank(perm_compose(perms[a], perms[b])));
  // Permutation composition is associative; skip the cubic check.
  auto g = build_table(std::move(mul), "S" + std::to_string(n), false);
  std::const_pointer_cast<GroupData>(g)->symmetric_degree_ = n;
  cache.emplace(n, g);
  return g;
}

GroupPtr GroupData::cyclic(int k)
{
  if (k < 1)
    throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
  return from_table(std::move(mul), "C" + std::to_string(k));
}

GroupPtr GroupData::trivial()
{
  return from_table({{0}}, "1");
}

void GroupData::finish()
{
  if (kind_ != Kind::Table && order_ <= kTabulateLimit) {
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        table_[a * order_ + b] = structural_mul(static_cast<int>(a), static_cast<int>(b));
  }

  // Greedy generating set: add the first element outside the current span.
  std::vector<char> reached(order_, 0);
  std::vector<int> frontier{identity_};
  reached[static_cast<std::size_t>(identity_)] = 1;
  std::vector<int> members{identity_};
  for (std::size_t candidate = 0; candidate < order_; ++candidate) {
    if (reached[candidate])
      continue;
    generators_.push_back(static_cast<int>(candidate));
    // Re-close from every known member under all generators.
    std::vector<int> queue = members;
    while (!queue.empty()) {
      const int a = queue.back();
      queue.pop_back();
      for (int s : generators_) {
        const int b = mul(a, s);
        if (!reached[static_cast<std::size_t>(b)]) {
          reached[static_cast<std::size_t>(b)] = 1;
          members.push_back(b);
          queue.push_back(b);
        }
      }
    }
  }
}

int GroupData::mul(int a, int b) const
{
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
  return structural_mul(a, b);
}

int GroupData::structural_mul(int a, int b) const
{
  switch (kind_) {
  case Kind::Table:
    return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
  case Kind::Wreath: {
    const auto x = wreath_element(a);
    const auto y = wreath_element(b);
    const auto g_inv = perm_inverse(x.pi);
    WreathElement z{std::vector<int>(x.f.size()), perm_compose(x.pi, y.pi)};
    for (std::size_t p = 0; p < x.f.size(); ++p)
      z.f[p] = base_->mul(x.f[p], y.f[static_cast<std::size_t>(g_inv[p])]);
    return wreath_index(z);
  }
  case Kind::Product: {
    auto x = split(a);
    const auto y = split(b);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = factors_[i]->mul(x[i], y[i]);
    return join(x);
  }
  }
  return -1;
}

const GroupPtr& GroupData::base() const
{
  if (kind_ != Kind::Wreath)
    throw std::logic_error(name_ + " is not a wreath product");
  return base_;
}

int GroupData::wreath_degree() const
{
  if (kind_ != Kind::Wreath)
    throw std::logic_error(name_ + " is not a wreath product");
  return n_;
}

WreathElement GroupData::wreath_element(int index) const
{
  const auto idx = static_cast<std::size_t>(index);
  WreathElement e{std::vector<int>(static_cast<std::size_t>(n_)),
                  perm_unrank(idx / base_power_, n_)};
  std::size_t code = idx % base_power_;
  for (int p = n_ - 1; p >= 0; --p) {
    e.f[static_cast<std::size_t>(p)] = static_cast<int>(code % base_->order());
    code /= base_->order();
  }
  return e;
}

int GroupData::wreath_index(const WreathElement& e) const
{
  std::size_t code = 0;
  for (int v : e.f)
    code = code * base_->order() + static_cast<std::size_t>(v);
  return static_cast<int>(perm_rank(e.pi) * base_power_ + code);
}

std::size_t GroupData::wreath_perm_rank(int index) const
{
  return static_cast<std::size_t>(index) / base_power_;
}

const std::vector<GroupPtr>& GroupData::factors() const
{
  if (kind_ != Kind::Product)
    throw std::logic_error(name_ + " is not a direct product");
  return factors_;
}

std::vector<int> GroupData::split(int index) const
{
  std::vector<int> parts(factors_.size());
  auto rest = static_cast<std::size_t>(index);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    parts[i] = static_cast<int>(rest / radix_[i]);
    rest %= radix_[i];
  }
  return parts;
}

int GroupData::join(std::span<const int> parts) const
{
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    index += static_cast<std::size_t>(parts[i]) * radix_[i];
  return static_cast<int>(index);
}

bool GroupData::same_as(const GroupData& other) const
{
  if (this == &other)
    return true;
  if (kind_ != other.kind_ || order_ != other.order_)
    return false;
  switch (kind_) {
  case Kind::Table:
    return symmetric_degree_ >= 0 && symmetric_degree_ == other.symmetric_degree_;
  case Kind::Wreath:
    return n_ == other.n_ && base_->same_as(*other.base_);
  case Kind::Product:
    if (factors_.size() != other.factors_.size())
      return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->same_as(*other.factors_[i]))
        return false;
    return true;
  }
  return false;
}

bool satisfies_group_axioms(const GroupData& g)
{
  const int m = static_cast<int>(g.order());
  for (int a = 0; a < m; ++a) {
    if (g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a)
      return false;
    if (g.mul(a, g.inverse(a)) != g.identity() || g.mul(g.inverse(a), a) != g.identity())
      return false;
    for (int b = 0; b < m; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < m; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          return false;
    }
  }
  return true;
}

Embedding make_embedding(GroupPtr sub, GroupPtr group, std::vector<int> image)
{
  if (image.size() != sub->order())
    throw std::invalid_argument("embedding: image size differs from the subgroup order");
  std::vector<int> preimage(group->order(), -1);
  for (std::size_t h = 0; h < image.size(); ++h) {
    const int g = image[h];
    if (g < 0 || static_cast<std::size_t>(g) >= group->order())
      throw std::invalid_argument("embedding: image index out of range");
    if (preimage[static_cast<std::size_t>(g)] != -1)
      throw std::invalid_argument("embedding is not injective");
    preimage[static_cast<std::size_t>(g)] = static_cast<int>(h);
  }
  for (std::size_t h = 0; h < image.size(); ++h)
    for (int s : sub->generators())
      if (image[static_cast<std::size_t>(sub->mul(static_cast<int>(h), s))] !=
          group->mul(image[h], image[static_cast<std::size_t>(s)]))
        throw std::invalid_argument("embedding is not a homomorphism");
  return {std::move(sub), std::move(group), std::move(image), std::move(preimage)};
}

Embedding trivial_embedding(GroupPtr group)
{
  const int e = group->identity();
  return make_embedding(GroupData::trivial(), std::move(group), {e});
}

Embedding standard_embedding(GroupPtr from, GroupPtr to)
{
  if (from->kind() != GroupData::Kind::Wreath || to->kind() != GroupData::Kind::Wreath ||
      !from->base()->same_as(*to->base()) || to->wreath_degree() != from->wreath_degree() + 1)
    throw std::invalid_argument("standard embedding needs F wr S_n and F wr S_{n+1}");
  const int n = from->wreath_degree();
  std::vector<int> image(from->order());
  for (std::size_t idx = 0; idx < from->order(); ++idx) {
    auto e = from->wreath_element(static_cast<int>(idx));
    e.f.push_back(from->base()->identity());
    e.pi.push_back(n);
    image[idx] = to->wreath_index(e);
  }
  return make_embedding(std::move(from), std::move(to), std::move(image));
}

Embedding block_embedding(GroupPtr blocks, GroupPtr to)
{
  if (to->kind() != GroupData::Kind::Wreath)
    throw std::invalid_argument("block embedding target must be a wreath product");
  const std::vector<GroupPtr> single{blocks};
  const auto& parts =
      blocks->kind() == GroupData::Kind::Product ? blocks->factors() : single;
  int total = 0;
  for (const auto& p : parts) {
    if (p->kind() != GroupData::Kind::Wreath || !p->base()->same_as(*to->base()))
      throw std::invalid_argument("block embedding: every block must be a wreath over the same base");
    total += p->wreath_degree();
  }
  if (total != to->wreath_degree())
    throw std::invalid_argument("block embedding: block degrees do not add up");

  std::vector<int> image(blocks->order());
  for (std::size_t idx = 0; idx < blocks->order(); ++idx) {
    const auto pieces = blocks->kind() == GroupData::Kind::Product
                            ? blocks->split(static_cast<int>(idx))
                            : std::vector<int>{static_cast<int>(idx)};
    WreathElement e;
    int offset = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto piece = parts[j]->wreath_element(pieces[j]);
      e.f.insert(e.f.end(), piece.f.begin(), piece.f.end());
      for (int x : piece.pi)
        e.pi.push_back(x + offset);
      offset += parts[j]->wreath_degree();
    }
    image[idx] = to->wreath_index(e);
  }
  return make_embedding(std::move(blocks), std::move(to), std::move(image));
}

Embedding compose(const Embedding& inner, const Embedding& outer)
{
  if (!inner.group->same_as(*outer.sub))
    throw std::invalid_argument("compose: middle groups differ");
  std::vector<int> image(inner.image.size());
  for (std::size_t k = 0; k < image.size(); ++k)
    image[k] = outer.image[static_cast<std::size_t>(inner.image[k])];
  return make_embedding(inner.sub, outer.group, std::move(image));
}

} // namespace wreathlr::oracle
