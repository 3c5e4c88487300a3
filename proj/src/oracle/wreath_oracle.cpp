#include "wreathlr/oracle/wreath_oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wreathlr/quiver.hpp"

namespace wreathlr::oracle {

namespace {

std::string one_line(const Decomposition& d)
{
  if (d.empty())
    return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& [mp, m] : d.terms()) {
    s += (first ? "" : ", ") + to_string(mp) + ":" + std::to_string(m);
    first = false;
  }
  return s + "}";
}

} // namespace

DimensionVector BaseGroup::dims() const
{
  std::vector<int> d;
  for (const auto& u : irreps)
    d.push_back(u.degree());
  return DimensionVector(std::move(d));
}

BaseGroup builtin_group(std::string_view name)
{
  if (name == "S3") {
    auto g = GroupData::symmetric(3);
    return {g, {trivial_rep(g), specht_rep(Partition{2, 1}), specht_rep(Partition{1, 1, 1})}};
  }
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '2' && name[1] <= '6') {
    const int k = name[1] - '0';
    auto g = GroupData::cyclic(k);
    BaseGroup base{g, {}};
    for (int j = 0; j < k; ++j) {
      std::vector<Matrix> images;
      for (int m = 0; m < k; ++m) {
        const double angle = 2.0 * std::numbers::pi * j * m / k;
        images.push_back(Matrix::Constant(1, 1, std::polar(1.0, angle)));
      }
      base.irreps.emplace_back(g, std::move(images));
    }
    return base;
  }
  throw std::invalid_argument("unknown group '" + std::string(name) +
                              "' (expected one of C2, C3, C4, C5, C6, S3)");
}

void validate_base_group(const BaseGroup& base)
{
  if (base.irreps.empty())
    throw std::invalid_argument("base group needs at least one irreducible");
  const auto& first = base.irreps.front();
  if (first.degree() != 1)
    throw std::invalid_argument("the first irreducible must be the trivial representation");
  for (const auto& m : first.images())
    if (std::abs(m(0, 0) - Complex(1.0)) > kMatrixTolerance)
      throw std::invalid_argument("the first irreducible must be the trivial representation");

  std::uint64_t square_sum = 0;
  std::vector<ClassFunction> chars;
  for (const auto& u : base.irreps) {
    if (!u.group()->same_as(*base.group))
      throw std::invalid_argument("irreducible defined on a different group");
    if (generator_homomorphism_defect(u) > kMatrixTolerance)
      throw std::invalid_argument("irreducible matrices do not define a homomorphism");
    square_sum += static_cast<std::uint64_t>(u.degree()) * static_cast<std::uint64_t>(u.degree());
    chars.push_back(character(u));
  }
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = 0; b < chars.size(); ++b) {
      const Complex want = a == b ? 1.0 : 0.0;
      if (std::abs(inner_product(chars[a], chars[b]) - want) > kMultiplicityTolerance)
        throw std::invalid_argument("irreducible characters are not orthonormal");
    }
  if (square_sum != base.group->order())
    throw std::invalid_argument("irreducible list is incomplete: sum of squared degrees is " +
                                std::to_string(square_sum) + ", group order is " +
                                std::to_string(base.group->order()));
}

BaseGroup load_group_json(const nlohmann::json& j, std::string name)
{
  try {
    const auto order = j.at("order").get<std::size_t>();
    auto table = j.at("mul").get<std::vector<std::vector<int>>>();
    if (table.size() != order)
      throw std::invalid_argument("group JSON: 'mul' has " + std::to_string(table.size()) +
                                  " rows but order is " + std::to_string(order));
    BaseGroup base{GroupData::from_table(std::move(table), std::move(name)), {}};
    for (const auto& irrep : j.at("irreps")) {
      const auto degree = irrep.at("degree").get<Eigen::Index>();
      const auto& matrices = irrep.at("matrices");
      if (matrices.size() != order)
        throw std::invalid_argument("group JSON: every irrep needs one matrix per element");
      std::vector<Matrix> images;
      for (const auto& mj : matrices) {
        Matrix m(degree, degree);
        if (static_cast<Eigen::Index>(mj.size()) != degree)
          throw std::invalid_argument("group JSON: matrix has the wrong number of rows");
        for (Eigen::Index r = 0; r < degree; ++r) {
          const auto& row = mj.at(static_cast<std::size_t>(r));
          if (static_cast<Eigen::Index>(row.size()) != degree)
            throw std::invalid_argument("group JSON: matrix row has the wrong length");
          for (Eigen::Index c = 0; c < degree; ++c) {
            const auto& entry = row.at(static_cast<std::size_t>(c));
            m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
          }
        }
        images.push_back(std::move(m));
      }
      base.irreps.emplace_back(base.group, std::move(images));
    }
    validate_base_group(base);
    return base;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("group JSON: ") + e.what());
  }
}

MatrixRep phi_component(const BaseGroup& base, int i, const Partition& lambda, GroupPtr wreath)
{
  if (i < 0 || i >= base.l())
    throw std::invalid_argument("irreducible index out of range");
  if (wreath->wreath_degree() != lambda.weight())
    throw std::invalid_argument("phi component: group degree differs from the partition weight");
  return tensor_inner(extend(base.irreps[static_cast<std::size_t>(i)], wreath),
                      inflate(specht_rep(lambda), wreath));
}

MatrixRep build_phi(const MultiPartition& lambda, const BaseGroup& base, GroupPtr wreath,
                    const Budget& budget)
{
  if (lambda.length() != base.l())
    throw std::invalid_argument("multipartition " + to_string(lambda) + " needs " +
                                std::to_string(base.l()) + " components");
  if (wreath->kind() != GroupData::Kind::Wreath || wreath->wreath_degree() != lambda.weight() ||
      !wreath->base()->same_as(*base.group))
    throw std::invalid_argument("build_phi: group must be F wr S_n with n = weight");

  std::vector<int> occupied;
  for (int i = 0; i < base.l(); ++i)
    if (lambda[static_cast<std::size_t>(i)].weight() > 0)
      occupied.push_back(i);
  if (occupied.empty())
    return trivial_rep(std::move(wreath));
  if (occupied.size() == 1)
    return phi_component(base, occupied[0], lambda[static_cast<std::size_t>(occupied[0])],
                         std::move(wreath));

  std::vector<MatrixRep> pieces;
  for (int i : occupied) {
    const auto& part = lambda[static_cast<std::size_t>(i)];
    pieces.push_back(
        phi_component(base, i, part, GroupData::wreath(base.group, part.weight(), budget)));
  }
  const auto outer = tensor_outer(pieces, budget);
  return induce(outer, block_embedding(outer.group(), std::move(wreath)), budget);
}

WreathTower::WreathTower(BaseGroup base, Budget budget)
    : base_(std::move(base)), budget_(budget)
{
  validate_base_group(base_);
}

GroupPtr WreathTower::group(int n)
{
  auto it = groups_.find(n);
  if (it == groups_.end())
    it = groups_.emplace(n, GroupData::wreath(base_.group, n, budget_)).first;
  return it->second;
}

const MatrixRep& WreathTower::phi(const MultiPartition& lambda)
{
  auto it = phis_.find(lambda);
  if (it == phis_.end())
    it = phis_.emplace(lambda, build_phi(lambda, base_, group(lambda.weight()), budget_)).first;
  return it->second;
}

const ClassFunction& WreathTower::phi_character(const MultiPartition& lambda)
{
  auto it = characters_.find(lambda);
  if (it == characters_.end())
    it = characters_.emplace(lambda, character(phi(lambda))).first;
  return it->second;
}

Decomposition WreathTower::decompose(const ClassFunction& chi, int n)
{
  if (!chi.group->same_as(*group(n)))
    throw std::invalid_argument("decompose: character is not on F wr S_" + std::to_string(n));
  Decomposition out;
  long long accounted = 0;
  for (const auto& gamma : multipartitions_of(n, l())) {
    const long long m = to_multiplicity(inner_product(chi, phi_character(gamma)));
    if (m < 0)
      throw std::runtime_error("negative multiplicity: not a genuine character");
    out.add(gamma, static_cast<std::uint64_t>(m));
    accounted += m * phi(gamma).degree();
  }
  const long long degree = std::llround(chi.values[static_cast<std::size_t>(chi.group->identity())].real());
  if (accounted != degree)
    throw std::runtime_error("constituents account for degree " + std::to_string(accounted) +
                             " of " + std::to_string(degree));
  return out;
}

DecompositionCheck verify_wreath_lr(WreathTower& tower, const MultiPartition& lambda,
                                    const MultiPartition& delta)
{
  const int k = lambda.weight();
  const int r = delta.weight();
  const auto outer = tensor_outer(tower.phi(lambda), tower.phi(delta), tower.budget());
  const auto induced =
      induce(outer, block_embedding(outer.group(), tower.group(k + r)), tower.budget());
  return {"Ind(" + to_string(lambda) + " x " + to_string(delta) + ")",
          wreath_lr_expand(lambda, delta), tower.decompose(character(induced), k + r)};
}

DecompositionCheck verify_induce_one_step(WreathTower& tower, const MultiPartition& lambda)
{
  const int n = lambda.weight();
  const auto emb = standard_embedding(tower.group(n), tower.group(n + 1));
  const auto induced = induce(tower.phi(lambda), emb, tower.budget());
  return {"Ind up " + to_string(lambda), induce_one_step(lambda, tower.dims()),
          tower.decompose(character(induced), n + 1)};
}

DecompositionCheck verify_restrict_one_step(WreathTower& tower, const MultiPartition& lambda)
{
  const int n = lambda.weight();
  const auto emb = standard_embedding(tower.group(n - 1), tower.group(n));
  const auto restricted = restrict_character(tower.phi_character(lambda), emb);
  return {"Res down " + to_string(lambda), restrict_one_step(lambda, tower.dims()),
          tower.decompose(restricted, n - 1)};
}

DecompositionCheck verify_quiver_arrows(WreathTower& tower, const MultiPartition& lambda)
{
  const int k = lambda.weight();
  const auto outer = tensor_outer(tower.phi(lambda), trivial_rep(tower.group(1)), tower.budget());
  const auto induced =
      induce(outer, block_embedding(outer.group(), tower.group(k + 1)), tower.budget());
  Decomposition formula;
  for (const auto& target : arrows_via_branching(lambda, tower.dims()))
    formula.add(target, 1);
  return {"arrows from " + to_string(lambda), formula,
          tower.decompose(character(induced), k + 1)};
}

OrthonormalityCheck verify_orthonormality(WreathTower& tower, int n)
{
  OrthonormalityCheck check;
  check.n = n;
  check.group_order = tower.group(n)->order();
  const auto labels = multipartitions_of(n, tower.l());
  check.irreducibles = labels.size();
  bool integral = true;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    const auto deg = static_cast<std::uint64_t>(tower.phi(labels[a]).degree());
    check.dimension_square_sum += deg * deg;
    for (std::size_t b = 0; b < labels.size(); ++b) {
      const Complex value =
          inner_product(tower.phi_character(labels[a]), tower.phi_character(labels[b]));
      const double want = a == b ? 1.0 : 0.0;
      check.worst_gram_error = std::max(check.worst_gram_error, std::abs(value - want));
      integral = integral && std::abs(value - std::round(value.real())) <= kMultiplicityTolerance;
    }
  }
  check.pass = integral && check.worst_gram_error <= kMultiplicityTolerance &&
               check.dimension_square_sum == check.group_order;
  return check;
}

bool VerificationReport::all_pass() const
{
  for (const auto& c : decompositions)
    if (!c.pass())
      return false;
  for (const auto& c : orthonormality)
    if (!c.pass)
      return false;
  return true;
}

VerificationReport verify_lr_all(WreathTower& tower, int k, int r)
{
  VerificationReport report{"lr", tower.base().group->name(), {}, {}};
  for (const auto& lambda : multipartitions_of(k, tower.l()))
    for (const auto& delta : multipartitions_of(r, tower.l()))
      report.decompositions.push_back(verify_wreath_lr(tower, lambda, delta));
  return report;
}

VerificationReport verify_branch_all(WreathTower& tower, int n)
{
  VerificationReport report{"branch", tower.base().group->name(), {}, {}};
  for (const auto& lambda : multipartitions_of(n, tower.l()))
    report.decompositions.push_back(verify_induce_one_step(tower, lambda));
  for (const auto& gamma : multipartitions_of(n + 1, tower.l()))
    report.decompositions.push_back(verify_restrict_one_step(tower, gamma));
  return report;
}

VerificationReport verify_quiver_arrows_all(WreathTower& tower, int k)
{
  VerificationReport report{"quiver-arrows", tower.base().group->name(), {}, {}};
  for (const auto& lambda : multipartitions_of(k, tower.l()))
    report.decompositions.push_back(verify_quiver_arrows(tower, lambda));
  return report;
}

VerificationReport verify_orthonormality_all(WreathTower& tower, int n)
{
  VerificationReport report{"orthonormality", tower.base().group->name(), {}, {}};
  report.orthonormality.push_back(verify_orthonormality(tower, n));
  return report;
}

std::string to_text(const VerificationReport& report)
{
  std::ostringstream out;
  std::size_t passed = 0;
  std::size_t total = 0;
  for (const auto& c : report.decompositions) {
    ++total;
    passed += c.pass() ? 1 : 0;
    out << (c.pass() ? "PASS " : "FAIL ") << c.label << "  formula=" << one_line(c.formula)
        << "  oracle=" << one_line(c.oracle) << "\n";
  }
  for (const auto& c : report.orthonormality) {
    ++total;
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "PASS " : "FAIL ") << "n=" << c.n << " irreducibles=" << c.irreducibles
        << " sum(dim^2)=" << c.dimension_square_sum << " |G|=" << c.group_order
        << " max|gram-I|=" << c.worst_gram_error << "\n";
  }
  out << report.mode << " on " << report.group << ": " << passed << "/" << total << " passed\n";
  return out.str();
}

nlohmann::json to_json(const VerificationReport& report)
{
  auto cases = nlohmann::json::array();
  for (const auto& c : report.decompositions)
    cases.push_back({{"label", c.label},
                     {"pass", c.pass()},
                     {"formula", to_json(c.formula)},
                     {"oracle", to_json(c.oracle)}});
  for (const auto& c : report.orthonormality)
    cases.push_back({{"label", "orthonormality n=" + std::to_string(c.n)},
                     {"pass", c.pass},
                     {"irreducibles", c.irreducibles},
                     {"dimension_square_sum", c.dimension_square_sum},
                     {"group_order", c.group_order},
                     {"worst_gram_error", c.worst_gram_error}});
  return {{"mode", report.mode}, {"group", report.group}, {"pass", report.all_pass()},
          {"cases", cases}};
}

} // namespace wreathlr::oracle
