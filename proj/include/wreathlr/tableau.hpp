#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wreathlr/partition.hpp"

namespace wreathlr {

/// The boxes of `outer` that are not in `inner`.
class SkewShape {
public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless contains(outer, inner).
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.weight() - inner_.weight(); }
  int row_length(int row) const noexcept { return outer_.row(row) - inner_.row(row); }

  bool operator==(const SkewShape&) const = default;

private:
  Partition outer_;
  Partition inner_;
};

/// A filling of a skew shape by positive integers. rows()[r] lists the
/// entries of row r from left to right, skipping the inner-shape boxes.
class SkewTableau {
public:
  SkewTableau() = default;
  /// Throws std::invalid_argument if the row lengths do not match the shape
  /// or an entry is not positive.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// content()[v-1] is the number of entries equal to v.
  Composition content() const;

  bool operator==(const SkewTableau&) const = default;

private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Rows read top to bottom, each from right to left.
std::vector<int> row_word(const SkewTableau& t);

/// Every prefix contains at least as many i's as (i+1)'s.
bool is_lattice_word(const std::vector<int>& word);

/// Index of the first prefix (its length) that breaks the lattice
/// condition, or 0 when the word is a lattice word.
std::size_t first_lattice_violation(const std::vector<int>& word);

/// Rows weakly increase, columns strictly increase.
bool is_semistandard(const SkewTableau& t);

/// All semistandard tableaux of shape outer/inner with content `content`
/// whose row word is a lattice word. Throws std::invalid_argument when the
/// shapes are incompatible.
std::vector<SkewTableau> enumerate_lr_tableaux(const Partition& outer, const Partition& inner,
                                               const Partition& content);

/// c^gamma_{lambda,delta}; 0 when the shapes are incompatible.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& delta,
                             const Partition& gamma);

using PartitionMultiplicities = std::map<Partition, std::uint64_t, CanonicalOrder>;

/// The positive coefficients c^gamma_{lambda,delta} over all gamma.
PartitionMultiplicities lr_expand(const Partition& lambda, const Partition& delta);

/// Rows joined by " / ", inner boxes as ".": ". . 1 1 / . 2 3 / 2".
std::string render(const SkewTableau& t);

} // namespace wreathlr
