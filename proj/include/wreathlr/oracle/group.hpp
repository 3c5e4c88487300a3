#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreathlr::oracle {

/// Size limits for explicit constructions.
struct Budget {
  std::size_t max_group_order = 20000;
  /// Upper bound on the degree of an induced representation.
  std::size_t max_degree = 1024;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Permutations of {0..n-1} are stored as image vectors; index = lexicographic
// rank, so the identity has index 0. Composition is (a*b)(x) = a(b(x)).
using Permutation = std::vector<int>;

std::size_t factorial(int n);
std::size_t perm_rank(std::span<const int> perm);
Permutation perm_unrank(std::size_t rank, int n);
Permutation perm_compose(std::span<const int> a, std::span<const int> b);
Permutation perm_inverse(std::span<const int> a);

/// An element (f, pi) of F wr S_n; f holds element indices of F.
struct WreathElement {
  std::vector<int> f;
  Permutation pi;
  bool operator==(const WreathElement&) const = default;
};

class GroupData;
using GroupPtr = std::shared_ptr<const GroupData>;

/// A finite group on element indices 0..order-1.
///
/// Small groups carry a dense multiplication table. Wreath products and
/// direct products keep their structure so elements can be decoded and
/// subgroup embeddings written down; their products are evaluated
/// structurally when the group is too large to tabulate.
class GroupData {
public:
  enum class Kind { Table, Wreath, Product };

  /// Validates closure, associativity, identity and inverses.
  static GroupPtr from_table(std::vector<std::vector<int>> mul, std::string name);
  /// F wr S_n with law (f,g)(f',g') = (f (g*f'), g g'), (g*f)(x) = f(g^-1 x).
  static GroupPtr wreath(GroupPtr base, int n, const Budget& budget = {});
  /// Direct product; index is mixed radix with the first factor most significant.
  static GroupPtr product(std::vector<GroupPtr> factors, const Budget& budget = {});
  static GroupPtr symmetric(int n);
  static GroupPtr cyclic(int k);
  static GroupPtr trivial();

  std::size_t order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const;
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name() const noexcept { return name_; }
  Kind kind() const noexcept { return kind_; }

  /// n when this is the canonical S_n built by symmetric(n), else -1.
  int symmetric_degree() const noexcept { return symmetric_degree_; }

  /// A generating set, found greedily.
  const std::vector<int>& generators() const noexcept { return generators_; }

  // Wreath structure.
  const GroupPtr& base() const;
  int wreath_degree() const;
  WreathElement wreath_element(int index) const;
  int wreath_index(const WreathElement& e) const;
  std::size_t wreath_perm_rank(int index) const;

  // Product structure.
  const std::vector<GroupPtr>& factors() const;
  std::vector<int> split(int index) const;
  int join(std::span<const int> parts) const;

  /// Same pointer, or structurally the same construction over the same bases.
  bool same_as(const GroupData& other) const;

private:
  GroupData() = default;
  static GroupPtr build_table(std::vector<std::vector<int>> mul, std::string name,
                              bool check_associativity);
  void finish();
  int structural_mul(int a, int b) const;

  Kind kind_ = Kind::Table;
  std::string name_;
  std::size_t order_ = 0;
  int identity_ = 0;
  int symmetric_degree_ = -1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;

  GroupPtr base_;
  int n_ = 0;
  std::size_t base_power_ = 1;

  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> radix_;
};

/// Exhaustive associativity/identity/inverse check; O(order^3).
bool satisfies_group_axioms(const GroupData& g);

/// An injective homomorphism from `sub` into `group`.
struct Embedding {
  GroupPtr sub;
  GroupPtr group;
  std::vector<int> image;
  /// group index -> sub index, or -1 outside the image.
  std::vector<int> preimage;
};

/// Checks injectivity and the homomorphism law on generators.
Embedding make_embedding(GroupPtr sub, GroupPtr group, std::vector<int> image);
Embedding trivial_embedding(GroupPtr group);
/// F wr S_n into F wr S_{n+1}: the new point is fixed and gets the identity of F.
Embedding standard_embedding(GroupPtr from, GroupPtr to);
/// (F wr S_{m_1}) x ... x (F wr S_{m_t}) into F wr S_{m_1+...+m_t}, block j
/// acting on the j-th consecutive run of points.
Embedding block_embedding(GroupPtr blocks, GroupPtr to);
/// K -> H -> G.
Embedding compose(const Embedding& inner, const Embedding& outer);

} // namespace wreathlr::oracle
