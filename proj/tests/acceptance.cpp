// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "reference.hpp"
#include "wreathlr/oracle/kernels.hpp"
#include "wreathlr/oracle/wreath_oracle.hpp"
#include "wreathlr/quiver.hpp"
#include "wreathlr/tableau.hpp"
#include "wreathlr/wreath_rules.hpp"

using namespace wreathlr;
using namespace wreathlr::oracle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed expectations for one criterion.
class Expect {
public:
  void that(bool ok, const std::string& what)
  {
    ++checks_;
    if (!ok && failures_.size() < 5)
      failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  int checks() const { return checks_; }
  std::string summary() const
  {
    std::string s;
    for (const auto& f : failures_)
      s += (s.empty() ? "" : "; ") + f;
    return s;
  }

private:
  bool failed_ = false;
  int checks_ = 0;
  std::vector<std::string> failures_;
};

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
  if (a.size() != b.size())
    return 1e300;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void lr_example(Expect& e, std::string& note)
{
  const Partition gamma{4, 3, 1};
  const Partition lambda{2, 1};
  const Partition delta{3, 2};
  std::vector<double> times;
  std::vector<SkewTableau> tableaux;
  std::uint64_t c = 0;
  for (int i = 0; i < 11; ++i) {
    const auto t0 = Clock::now();
    tableaux = enumerate_lr_tableaux(gamma, lambda, delta);
    c = lr_coefficient(lambda, delta, gamma);
    times.push_back(seconds_since(t0) * 1e3);
  }
  std::sort(times.begin(), times.end());
  const double median_ms = times[times.size() / 2];
  e.that(c == 2, "coefficient is " + std::to_string(c));
  std::set<std::vector<std::vector<int>>> rows;
  for (const auto& t : tableaux)
    rows.insert(t.rows());
  e.that(rows == std::set<std::vector<std::vector<int>>>{{{1, 1}, {2, 2}, {1}}, {{1, 1}, {1, 2}, {2}}},
         "tableaux differ from the two expected fillings");
  e.that(median_ms < 1.0, "runtime " + std::to_string(median_ms) + " ms");
  note = "c=2, median " + std::to_string(median_ms) + " ms";
}

void lattice_word(Expect& e, std::string& note)
{
  const std::vector<int> word{1, 1, 3, 2, 2};
  e.that(!is_lattice_word(word), "11322 accepted");
  e.that(first_lattice_violation(word) == 3, "violation not at prefix 113");
  const SkewTableau t(SkewShape({4, 3, 1}, {2, 1}), {{1, 1}, {2, 3}, {2}});
  e.that(row_word(t) == word, "row word of the example tableau is not 11322");
  note = "first bad prefix length " + std::to_string(first_lattice_violation(word));
}

void classical_branching(Expect& e, std::string& note)
{
  e.that(lr_expand({2, 1}, {1}) ==
             PartitionMultiplicities{{Partition{3, 1}, 1}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}},
         "lr_expand([2,1],[1])");
  e.that(y_minus({2, 1}) == std::vector<Partition>{Partition{2}, Partition{1, 1}}, "y_minus([2,1])");
  note = "Ind = [3,1]+[2,2]+[2,1,1], Res = [2]+[1,1]";
}

void wreath_branching_example(Expect& e, std::string& note)
{
  const auto d = induce_one_step({{2}, {2, 1}, {1, 1, 1}}, DimensionVector({1, 2, 1}));
  const std::vector<std::pair<MultiPartition, std::uint64_t>> expected{
      {{{2, 1}, {2, 1}, {1, 1, 1}}, 1}, {{{3}, {2, 1}, {1, 1, 1}}, 1},
      {{{2}, {3, 1}, {1, 1, 1}}, 2},    {{{2}, {2, 2}, {1, 1, 1}}, 2},
      {{{2}, {2, 1, 1}, {1, 1, 1}}, 2}, {{{2}, {2, 1}, {2, 1, 1}}, 1},
      {{{2}, {2, 1}, {1, 1, 1, 1}}, 1}};
  e.that(d.size() == 7, "term count " + std::to_string(d.size()));
  for (const auto& [mp, m] : expected)
    e.that(d.multiplicity(mp) == m, "multiplicity of " + to_string(mp));
  note = std::to_string(d.size()) + " terms";
}

void quiver_figure(Expect& e, std::string& note)
{
  const auto q = build_quiver(2, 3);
  e.that(q.vertices().size() == 13, "vertex count");
  e.that(q.arrows().size() == 5, "arrow count");
  e.that(connected_components(q) == 8, "component count");

  std::set<std::pair<std::string, std::string>> arrows;
  for (const auto& [s, t] : q.arrows())
    arrows.emplace(to_string(q.vertices()[s]), to_string(q.vertices()[t]));
  e.that(arrows == std::set<std::pair<std::string, std::string>>{{"[[],[],[]]", "[[1],[],[]]"},
                                                                 {"[[1],[],[]]", "[[2],[],[]]"},
                                                                 {"[[1],[],[]]", "[[1,1],[],[]]"},
                                                                 {"[[],[1],[]]", "[[1],[1],[]]"},
                                                                 {"[[],[],[1]]", "[[1],[],[1]]"}},
         "arrows differ from the figure");

  const auto labels = component_labels(q);
  std::map<std::size_t, std::set<std::string>> by_label;
  for (std::size_t v = 0; v < labels.size(); ++v)
    by_label[labels[v]].insert(to_string(q.vertices()[v]));
  std::set<std::set<std::string>> components;
  for (auto& [id, members] : by_label)
    components.insert(members);
  e.that(components == std::set<std::set<std::string>>{{"[[],[],[]]", "[[1],[],[]]", "[[2],[],[]]",
                                                        "[[1,1],[],[]]"},
                                                       {"[[],[1],[]]", "[[1],[1],[]]"},
                                                       {"[[],[],[1]]", "[[1],[],[1]]"},
                                                       {"[[],[2],[]]"},
                                                       {"[[],[1,1],[]]"},
                                                       {"[[],[1],[1]]"},
                                                       {"[[],[],[2]]"},
                                                       {"[[],[],[1,1]]"}},
         "components differ from the figure");

  int formula_cases = 0;
  for (int l = 1; l <= 4; ++l)
    for (int n = 0; n <= 5; ++n) {
      std::uint64_t expected = 0;
      for (int k = 0; k <= n; ++k)
        expected += reference::multipartition_count(k, l - 1);
      e.that(connected_components(build_quiver(n, l)) == expected,
             "component formula at n=" + std::to_string(n) + " l=" + std::to_string(l));
      ++formula_cases;
    }
  note = "13 vertices, 5 arrows, 8 components; formula on " + std::to_string(formula_cases) + " cases";
}

void oracle_completeness(Expect& e, std::string& note)
{
  const auto start = Clock::now();
  std::vector<std::pair<std::string, int>> cases{{"C2", 1}, {"C2", 2}, {"C3", 1}, {"C3", 2},
                                                 {"S3", 1}, {"S3", 2}, {"C2", 3}};
  double worst = 0.0;
  for (const auto& [name, n] : cases) {
    WreathTower tower(builtin_group(name));
    const auto check = verify_orthonormality(tower, n);
    worst = std::max(worst, check.worst_gram_error);
    std::uint64_t expected_order = 1;
    for (int i = 0; i < n; ++i)
      expected_order *= tower.base().group->order() * static_cast<std::uint64_t>(i + 1);
    e.that(check.pass, name + " n=" + std::to_string(n) + " not orthonormal");
    e.that(check.dimension_square_sum == expected_order,
           name + " n=" + std::to_string(n) + " sum of squares");
    e.that(check.irreducibles == multipartition_count(n, tower.l()), name + " irreducible count");
  }
  const double elapsed = seconds_since(start);
  e.that(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream s;
  s << cases.size() << " groups, worst Gram error " << worst << ", " << elapsed << " s";
  note = s.str();
}

void wreath_lr_equivalence(Expect& e, std::string& note)
{
  int count = 0;
  {
    WreathTower tower(builtin_group("C2"));
    for (int k = 0; k <= 3; ++k)
      for (int r = 0; k + r <= 3; ++r)
        for (const auto& lambda : multipartitions_of(k, 2))
          for (const auto& delta : multipartitions_of(r, 2)) {
            e.that(verify_wreath_lr(tower, lambda, delta).pass(),
                   "C2 " + to_string(lambda) + " x " + to_string(delta));
            ++count;
          }
  }
  {
    WreathTower tower(builtin_group("S3"));
    const auto report = verify_lr_all(tower, 1, 1);
    for (const auto& c : report.decompositions) {
      e.that(c.pass(), "S3 " + c.label);
      ++count;
    }
  }
  note = std::to_string(count) + " pairs";
}

void branching_equivalence(Expect& e, std::string& note)
{
  int count = 0;
  for (const char* name : {"C2", "S3"}) {
    WreathTower tower(builtin_group(name));
    for (int n = 0; n <= 2; ++n) {
      const auto report = verify_branch_all(tower, n);
      for (const auto& c : report.decompositions) {
        e.that(c.pass(), std::string(name) + " " + c.label);
        ++count;
      }
    }
  }
  note = std::to_string(count) + " induction/restriction checks";
}

void quiver_arrow_equivalence(Expect& e, std::string& note)
{
  WreathTower tower(builtin_group("C2"));
  int count = 0;
  for (int k = 0; k <= 2; ++k) {
    const auto q = build_quiver(k + 1, 2);
    for (const auto& lambda : multipartitions_of(k, 2)) {
      const auto check = verify_quiver_arrows(tower, lambda);
      ++count;
      e.that(check.pass(), check.label);
      std::set<std::string> support;
      for (const auto& [mp, m] : check.oracle.terms()) {
        e.that(m <= 1, check.label + " multiplicity above one");
        support.insert(to_string(mp));
      }
      std::set<std::string> graph;
      const auto v = q.index_of(lambda);
      for (const auto& [s, t] : q.arrows())
        if (s == v)
          graph.insert(to_string(q.vertices()[t]));
      e.that(support == graph, check.label + " support differs from the quiver");
    }
  }
  note = std::to_string(count) + " sources";
}

// Ind_H^G Ind_K^H psi against Ind_K^G psi, through matrices and through the
// character kernel.
void transitivity(Expect& e, const Embedding& kh, const Embedding& hg, const MatrixRep& psi,
                  const std::string& label)
{
  const auto kg = compose(kh, hg);
  const auto chi = character(psi);
  const auto two_step = character(induce(induce(psi, kh), hg));
  const auto one_step = character(induce(psi, kg));
  const auto kernel_two = kernels::omp::induced_character(
      hg, kernels::serial::induced_character(kh, chi.values));
  const auto kernel_one = kernels::serial::induced_character(kg, chi.values);
  e.that(max_diff(two_step.values, one_step.values) < kMatrixTolerance, label + " matrix route");
  e.that(max_diff(two_step.values, kernel_one) < kMatrixTolerance, label + " kernel vs matrix");
  e.that(max_diff(kernel_two, kernel_one) < kMatrixTolerance, label + " kernel route");
}

void property_suites(Expect& e, std::string& note)
{
  int symmetry = 0;
  int dimension = 0;
  for (int k = 0; k <= 6; ++k)
    for (int r = 0; r <= 6; ++r)
      for (const auto& lambda : partitions_of(k))
        for (const auto& delta : partitions_of(r)) {
          const auto forward = lr_expand(lambda, delta);
          const auto backward = lr_expand(delta, lambda);
          for (const auto& gamma : partitions_of(k + r)) {
            const auto f = forward.count(gamma) ? forward.at(gamma) : 0;
            const auto b = backward.count(gamma) ? backward.at(gamma) : 0;
            e.that(f == b, "symmetry at " + to_string(gamma));
            ++symmetry;
          }
          std::uint64_t sum = 0;
          for (const auto& [gamma, c] : forward)
            sum += c * standard_tableau_count(gamma);
          e.that(sum == binomial(k + r, k) * standard_tableau_count(lambda) *
                            standard_tableau_count(delta),
                 "dimension identity for " + to_string(lambda) + "," + to_string(delta));
          ++dimension;
        }

  WreathTower tower(builtin_group("C2"));
  const auto g0 = tower.group(0);
  const auto g1 = tower.group(1);
  const auto g2 = tower.group(2);
  const auto g3 = tower.group(3);
  const auto blocks = GroupData::product({g1, g1});
  std::vector<int> first_factor;
  for (int x = 0; x < static_cast<int>(g1->order()); ++x)
    first_factor.push_back(blocks->join(std::vector<int>{x, g1->identity()}));
  const auto into_blocks = make_embedding(g1, blocks, first_factor);

  int chains = 0;
  transitivity(e, standard_embedding(g0, g1), standard_embedding(g1, g2), trivial_rep(g0),
               "1 < C2wrS1 < C2wrS2");
  ++chains;
  for (const auto& lambda : multipartitions_of(1, 2)) {
    transitivity(e, into_blocks, block_embedding(blocks, g2), tower.phi(lambda),
                 "C2wrS1 < (C2wrS1)^2 < C2wrS2 from " + to_string(lambda));
    transitivity(e, standard_embedding(g1, g2), standard_embedding(g2, g3), tower.phi(lambda),
                 "C2wrS1 < C2wrS2 < C2wrS3 from " + to_string(lambda));
    chains += 2;
  }
  for (const auto& a : multipartitions_of(1, 2))
    for (const auto& b : multipartitions_of(1, 2)) {
      const auto psi = tensor_outer(tower.phi(a), tower.phi(b));
      transitivity(e, block_embedding(psi.group(), g2), standard_embedding(g2, g3), psi,
                   "(C2wrS1)^2 < C2wrS2 < C2wrS3 from " + to_string(a) + " x " + to_string(b));
      ++chains;
    }
  note = std::to_string(symmetry) + " symmetry cases, " + std::to_string(dimension) +
         " dimension identities, " + std::to_string(chains) + " induction chains";
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<void(Expect&, std::string&)>>> criteria{
      {"LR coefficient example and its two tableaux", lr_example},
      {"lattice word 11322", lattice_word},
      {"classical branching reductions", classical_branching},
      {"seven-term wreath induction example", wreath_branching_example},
      {"quiver of S3 wr FI_2 and component formula", quiver_figure},
      {"oracle irreducibles are orthonormal and complete", oracle_completeness},
      {"oracle agrees with the wreath LR rule", wreath_lr_equivalence},
      {"oracle agrees with one-step induction and restriction", branching_equivalence},
      {"oracle agrees with quiver arrows", quiver_arrow_equivalence},
      {"property suites", property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Expect e;
    std::string note;
    const auto start = Clock::now();
    try {
      criteria[i].second(e, note);
    } catch (const std::exception& ex) {
      e.that(false, std::string("exception: ") + ex.what());
    }
    const bool ok = !e.failed();
    failed += ok ? 0 : 1;
    std::printf("%s %2zu %s [%d checks, %.2f s] %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), e.checks(), seconds_since(start),
                ok ? note.c_str() : e.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
