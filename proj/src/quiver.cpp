#include "wreathlr/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wreathlr {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v)
{
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

} // namespace

Quiver::Quiver(int n, int l, std::vector<MultiPartition> vertices, std::vector<Arrow> arrows)
    : n_(n), l_(l), vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
  for (const auto& [s, t] : arrows_)
    if (s >= vertices_.size() || t >= vertices_.size())
      throw std::invalid_argument("quiver arrow refers to a missing vertex");
}

std::size_t Quiver::index_of(const MultiPartition& mp) const
{
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), mp, WeightThenCanonical{});
  if (it == vertices_.end() || !(*it == mp))
    throw std::out_of_range("vertex " + to_string(mp) + " is not in the quiver");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::in_degree(std::size_t v) const
{
  return static_cast<std::size_t>(
      std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.second == v; }));
}

std::size_t Quiver::out_degree(std::size_t v) const
{
  return static_cast<std::size_t>(
      std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.first == v; }));
}

bool arrow_exists(const MultiPartition& from, const MultiPartition& to)
{
  if (from.length() != to.length())
    throw std::invalid_argument("arrow_exists: component counts differ");
  if (to.weight() != from.weight() + 1)
    return false;
  for (std::size_t i = 1; i < from.components().size(); ++i)
    if (!(from[i] == to[i]))
      return false;
  const auto grown = y_plus(from[0]);
  return std::find(grown.begin(), grown.end(), to[0]) != grown.end();
}

Quiver build_quiver(int n, int l)
{
  if (n < 0 || l < 1)
    throw std::invalid_argument("build_quiver: need n >= 0 and l >= 1");

  std::vector<MultiPartition> vertices;
  for (int k = 0; k <= n; ++k) {
    auto level = multipartitions_of(k, l);
    vertices.insert(vertices.end(), std::make_move_iterator(level.begin()),
                    std::make_move_iterator(level.end()));
  }

  // Only the first component grows, so the targets of v are y_plus of its
  // first component with the rest kept.
  std::vector<Quiver::Arrow> arrows;
  Quiver skeleton(n, l, vertices, {});
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].weight() == n)
      continue;
    for (auto& gamma : y_plus(vertices[v][0]))
      arrows.emplace_back(v, skeleton.index_of(vertices[v].with_component(0, std::move(gamma))));
  }
  std::sort(arrows.begin(), arrows.end());
  return Quiver(n, l, std::move(vertices), std::move(arrows));
}

std::vector<std::size_t> component_labels(const Quiver& q)
{
  const std::size_t count = q.vertices().size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& [s, t] : q.arrows())
    parent[find_root(parent, s)] = find_root(parent, t);

  std::vector<std::size_t> label(count);
  std::vector<std::size_t> root_label(count, count);
  std::size_t next = 0;
  for (std::size_t v = 0; v < count; ++v) {
    const auto root = find_root(parent, v);
    if (root_label[root] == count)
      root_label[root] = next++;
    label[v] = root_label[root];
  }
  return label;
}

std::size_t connected_components(const Quiver& q)
{
  const auto labels = component_labels(q);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<MultiPartition> arrows_via_branching(const MultiPartition& from,
                                                 const DimensionVector& dims)
{
  if (from.length() != dims.l())
    throw std::invalid_argument("arrows_via_branching: dimension vector length mismatch");
  const auto induced = wreath_lr_expand(from, MultiPartition::unit(from.length(), 0));
  std::vector<MultiPartition> targets;
  for (const auto& [mp, m] : induced.terms()) {
    if (m != 1)
      throw std::logic_error("arrow multiplicity above one for " + to_string(mp));
    targets.push_back(mp);
  }
  return targets;
}

std::string component_key(const MultiPartition& mp)
{
  std::vector<Partition> rest(mp.components().begin() + 1, mp.components().end());
  std::string s = "[";
  for (std::size_t i = 0; i < rest.size(); ++i)
    s += (i ? "," : "") + to_string(rest[i]);
  return s + "]";
}

std::string to_dot(const Quiver& q)
{
  std::string s = "digraph quiver {\n";
  s += "  // n=" + std::to_string(q.n()) + " l=" + std::to_string(q.l()) + "\n";
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    const auto& mp = q.vertices()[v];
    s += "  v" + std::to_string(v) + " [label=\"" + to_string(mp) + "\", comp=\"" +
         component_key(mp) + "\", weight=" + std::to_string(mp.weight()) + "];\n";
  }
  for (const auto& [src, dst] : q.arrows())
    s += "  v" + std::to_string(src) + " -> v" + std::to_string(dst) + ";\n";
  return s + "}\n";
}

nlohmann::json to_json(const Quiver& q)
{
  auto vertices = nlohmann::json::array();
  for (const auto& mp : q.vertices())
    vertices.push_back(to_json(mp));
  auto arrows = nlohmann::json::array();
  for (const auto& [s, t] : q.arrows())
    arrows.push_back({s, t});
  return {{"n", q.n()}, {"l", q.l()}, {"vertices", vertices}, {"arrows", arrows}};
}

Quiver quiver_from_json(const nlohmann::json& j)
{
  try {
    std::vector<MultiPartition> vertices;
    for (const auto& v : j.at("vertices"))
      vertices.push_back(multipartition_from_json(v));
    std::vector<Quiver::Arrow> arrows;
    for (const auto& a : j.at("arrows"))
      arrows.emplace_back(a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>());
    return Quiver(j.at("n").get<int>(), j.at("l").get<int>(), std::move(vertices),
                  std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed quiver JSON: ") + e.what());
  }
}

} // namespace wreathlr
