#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreathlr/partition.hpp"

namespace wreathlr {

/// An irreducible representation U_i of the base group, identified only by
/// its position and dimension. Index 1 is the trivial representation.
struct IrrLabel {
  int index = 1;
  int dim = 1;
};

/// Dimensions of Irr F in their fixed order; the first entry belongs to the
/// trivial representation and must be 1.
class DimensionVector {
public:
  explicit DimensionVector(std::vector<int> dims);

  int l() const noexcept { return static_cast<int>(dims_.size()); }
  int operator[](std::size_t i) const { return dims_.at(i); }
  const std::vector<int>& values() const noexcept { return dims_; }
  IrrLabel label(int index) const;

  /// Sum of dim^2, i.e. the order of the base group.
  std::uint64_t group_order() const;

private:
  std::vector<int> dims_;
};

/// A direct sum of irreducibles Phi_Gamma with positive multiplicities.
class Decomposition {
public:
  using Terms = std::map<MultiPartition, std::uint64_t, CanonicalOrder>;

  Decomposition() = default;

  /// Adds `mult` copies of Phi_mp. Throws on a component-count mismatch.
  void add(const MultiPartition& mp, std::uint64_t mult);
  void add(const Decomposition& other, std::uint64_t scale = 1);

  std::uint64_t multiplicity(const MultiPartition& mp) const;
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  bool operator==(const Decomposition& other) const { return terms_ == other.terms_; }

private:
  Terms terms_;
  int l_ = 0;
};

/// C^Gamma_{Lambda,Delta} as the product of componentwise LR coefficients.
std::uint64_t wreath_lr_coefficient(const MultiPartition& lambda, const MultiPartition& delta,
                                    const MultiPartition& gamma);

/// Ind from F wr S_k x F wr S_r to F wr S_{k+r} of Phi_Lambda x Phi_Delta.
Decomposition wreath_lr_expand(const MultiPartition& lambda, const MultiPartition& delta);

/// Ind from F wr S_n to F wr S_{n+1} of Phi_Lambda.
Decomposition induce_one_step(const MultiPartition& lambda, const DimensionVector& dims);

/// Res from F wr S_n to F wr S_{n-1} of Phi_Lambda; needs weight >= 1.
Decomposition restrict_one_step(const MultiPartition& lambda, const DimensionVector& dims);

/// dim Phi_Lambda = multinomial(n; n_1..n_l) * prod dims[i]^{n_i} f^{lambda_i}.
std::uint64_t phi_dimension(const MultiPartition& lambda, const DimensionVector& dims);

/// Total dimension sum mult * dim Phi over the decomposition.
std::uint64_t total_dimension(const Decomposition& d, const DimensionVector& dims);

/// "m x [[..],..]" lines, one per term, in canonical order.
std::string to_text(const Decomposition& d);

/// {"terms":[{"mult":m,"mp":[[..],..]}]}
nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiPartition& mp);
MultiPartition multipartition_from_json(const nlohmann::json& j);

} // namespace wreathlr
