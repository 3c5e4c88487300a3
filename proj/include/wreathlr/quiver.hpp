#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreathlr/partition.hpp"
#include "wreathlr/wreath_rules.hpp"

namespace wreathlr {

/// The ordinary quiver of F wr FI_n for a base group F with l irreducibles.
/// Vertices are the multipartitions of 0..n with l components, sorted by
/// weight and then canonically; arrows point from weight k to weight k+1.
class Quiver {
public:
  using Arrow = std::pair<std::size_t, std::size_t>;

  Quiver(int n, int l, std::vector<MultiPartition> vertices, std::vector<Arrow> arrows);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  const std::vector<MultiPartition>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  /// Position of `mp` in vertices(); throws std::out_of_range if absent.
  std::size_t index_of(const MultiPartition& mp) const;
  std::size_t in_degree(std::size_t v) const;
  std::size_t out_degree(std::size_t v) const;

  bool operator==(const Quiver&) const = default;

private:
  int n_;
  int l_;
  std::vector<MultiPartition> vertices_;
  std::vector<Arrow> arrows_;
};

Quiver build_quiver(int n, int l);

/// Arrow rule: weight goes up by one, the box lands in the first
/// component, and all other components agree.
bool arrow_exists(const MultiPartition& from, const MultiPartition& to);

/// Weakly connected components of the underlying undirected graph.
std::size_t connected_components(const Quiver& q);

/// Component id per vertex (ids are 0.. in order of first appearance).
std::vector<std::size_t> component_labels(const Quiver& q);

/// Targets of arrows out of `from`, read off as the support of
/// wreath_lr_expand(from, ([1],empty,...,empty)).
std::vector<MultiPartition> arrows_via_branching(const MultiPartition& from,
                                                 const DimensionVector& dims);

/// The component key (lambda_2, ..., lambda_l) in text form.
std::string component_key(const MultiPartition& mp);

std::string to_dot(const Quiver& q);
nlohmann::json to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

} // namespace wreathlr
