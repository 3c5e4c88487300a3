#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wreathlr {

/// An integer partition, stored as its weakly decreasing list of positive
/// parts. Trailing zeros are stripped on construction, so the empty
/// partition has exactly one representation: no parts at all.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row length at `row`; rows past the last one have length 0.
  int row(int row) const noexcept {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// A finite sequence of non-negative integers.
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  bool operator==(const Composition&) const = default;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// A tuple of partitions, one per irreducible representation of the base
/// group. Component i has weight shape()[i].
class MultiPartition {
public:
  MultiPartition() = default;
  MultiPartition(std::initializer_list<Partition> components);
  explicit MultiPartition(std::vector<Partition> components);

  /// The multipartition with `l` empty components.
  static MultiPartition empty(int l);
  /// The multipartition with [1] in component `i` and empty elsewhere.
  static MultiPartition unit(int l, int i);

  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& operator[](std::size_t i) const { return components_.at(i); }
  int length() const noexcept { return static_cast<int>(components_.size()); }
  int weight() const noexcept;
  Composition shape() const;

  /// Copy with component `i` replaced.
  MultiPartition with_component(std::size_t i, Partition p) const;

  bool operator==(const MultiPartition&) const = default;

private:
  std::vector<Partition> components_;
};

/// Strict weak order used for every enumeration and printout: part
/// sequences compared lexicographically, larger first. For partitions of
/// equal weight this is the usual lexicographically decreasing order.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const;
  bool operator()(const MultiPartition& a, const MultiPartition& b) const;
};

/// Order for quiver vertices: total weight first, then CanonicalOrder.
struct WeightThenCanonical {
  bool operator()(const MultiPartition& a, const MultiPartition& b) const;
};

/// All partitions of `n`, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);

/// All multipartitions of `n` with `l` components, in CanonicalOrder.
std::vector<MultiPartition> multipartitions_of(int n, int l);

/// Number of multipartitions of `n` with `l` components (l may be 0).
std::uint64_t multipartition_count(int n, int l);

/// Partitions obtained by adding one box, in CanonicalOrder.
std::vector<Partition> y_plus(const Partition& lambda);

/// Partitions obtained by removing one box, in CanonicalOrder.
std::vector<Partition> y_minus(const Partition& lambda);

/// True iff `inner` fits inside `outer` row by row.
bool contains(const Partition& outer, const Partition& inner);

/// Number of standard Young tableaux of shape `lambda` (hook-length
/// formula). Throws std::overflow_error if the count exceeds 64 bits.
std::uint64_t standard_tableau_count(const Partition& lambda);

/// n! / (k_1! ... k_m!) for the parts of `c`. Throws std::overflow_error
/// when the result does not fit.
std::uint64_t multinomial(const Composition& c);

std::uint64_t binomial(int n, int k);

// Text forms: "[3,2,1]", "[]" and "[[2],[1,1],[]]". Parsing accepts
// arbitrary whitespace and throws std::invalid_argument on malformed input.
std::string to_string(const Partition& p);
std::string to_string(const Composition& c);
std::string to_string(const MultiPartition& mp);
Partition parse_partition(std::string_view text);
MultiPartition parse_multipartition(std::string_view text);

} // namespace wreathlr
