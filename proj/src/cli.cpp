#include "wreathlr/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreathlr/oracle/wreath_oracle.hpp"
#include "wreathlr/partition.hpp"
#include "wreathlr/quiver.hpp"
#include "wreathlr/tableau.hpp"
#include "wreathlr/wreath_rules.hpp"

namespace wreathlr::cli {

namespace {

constexpr const char* kGrammar = R"(Partitions are written as bracketed lists of weakly decreasing
positive integers, e.g. [3,2,1]; the empty partition is [].
Multipartitions are bracketed lists of partitions, one per irreducible of
the base group (the trivial one first), e.g. [[2],[1,1],[]].)";

std::vector<int> parse_dims(const std::string& text)
{
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("--dims expects comma-separated positive integers, got '" +
                                  text + "'");
    }
  }
  return dims;
}

nlohmann::json partition_terms_json(const PartitionMultiplicities& terms)
{
  auto arr = nlohmann::json::array();
  for (const auto& [p, m] : terms)
    arr.push_back({{"mult", m}, {"partition", p.parts()}});
  return {{"terms", arr}};
}

struct Options {
  // lr / tableaux
  std::string p1;
  std::string p2;
  std::string p3;
  // branch
  std::string direction;
  std::string dims;
  // quiver
  int n = -1;
  int l = -1;
  bool dot = false;
  bool components = false;
  // verify
  std::string group;
  std::string group_file;
  std::string mode;
  int k = -1;
  int r = -1;
  std::size_t budget = oracle::Budget{}.max_group_order;
  bool json = false;
};

int run_lr(const Options& o, std::ostream& out)
{
  const auto lambda = parse_partition(o.p1);
  const auto delta = parse_partition(o.p2);
  if (!o.p3.empty()) {
    const auto c = lr_coefficient(lambda, delta, parse_partition(o.p3));
    if (o.json)
      out << nlohmann::json{{"coefficient", c}}.dump() << "\n";
    else
      out << c << "\n";
    return kExitOk;
  }
  const auto terms = lr_expand(lambda, delta);
  if (o.json) {
    out << partition_terms_json(terms).dump() << "\n";
  } else {
    for (const auto& [gamma, c] : terms)
      out << c << " x " << to_string(gamma) << "\n";
  }
  return kExitOk;
}

int run_tableaux(const Options& o, std::ostream& out)
{
  const auto tableaux =
      enumerate_lr_tableaux(parse_partition(o.p1), parse_partition(o.p2), parse_partition(o.p3));
  if (o.json) {
    auto arr = nlohmann::json::array();
    for (const auto& t : tableaux)
      arr.push_back(t.rows());
    out << nlohmann::json{{"count", tableaux.size()}, {"tableaux", arr}}.dump() << "\n";
    return kExitOk;
  }
  for (const auto& t : tableaux)
    out << render(t) << "\n";
  out << tableaux.size() << " tableaux\n";
  return kExitOk;
}

void print_decomposition(const Decomposition& d, bool json, std::ostream& out)
{
  if (json)
    out << to_json(d).dump() << "\n";
  else
    out << to_text(d);
}

int run_wreath_lr(const Options& o, std::ostream& out)
{
  print_decomposition(wreath_lr_expand(parse_multipartition(o.p1), parse_multipartition(o.p2)),
                      o.json, out);
  return kExitOk;
}

int run_branch(const Options& o, std::ostream& out)
{
  const auto lambda = parse_multipartition(o.p1);
  const DimensionVector dims(parse_dims(o.dims));
  const auto d = o.direction == "up" ? induce_one_step(lambda, dims) : restrict_one_step(lambda, dims);
  print_decomposition(d, o.json, out);
  return kExitOk;
}

int run_quiver(const Options& o, std::ostream& out)
{
  const auto q = build_quiver(o.n, o.l);
  if (o.dot) {
    out << to_dot(q);
  } else if (o.json) {
    auto j = to_json(q);
    if (o.components)
      j["components"] = connected_components(q);
    out << j.dump() << "\n";
  } else if (o.components) {
    out << connected_components(q) << "\n";
  } else {
    out << "vertices: " << q.vertices().size() << "\n";
    for (std::size_t v = 0; v < q.vertices().size(); ++v)
      out << "  " << v << " " << to_string(q.vertices()[v]) << "\n";
    out << "arrows: " << q.arrows().size() << "\n";
    for (const auto& [s, t] : q.arrows())
      out << "  " << to_string(q.vertices()[s]) << " -> " << to_string(q.vertices()[t]) << "\n";
  }
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out)
{
  oracle::Budget budget;
  budget.max_group_order = o.budget;

  std::optional<oracle::BaseGroup> base;
  if (!o.group_file.empty()) {
    std::ifstream in(o.group_file);
    if (!in)
      throw std::invalid_argument("cannot open group file '" + o.group_file + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("group file is not valid JSON: ") + e.what());
    }
    base = oracle::load_group_json(j, o.group_file);
  } else {
    base = oracle::builtin_group(o.group);
  }
  oracle::WreathTower tower(std::move(*base), budget);

  auto need = [](int value, const char* flag) {
    if (value < 0)
      throw std::invalid_argument(std::string("this mode needs ") + flag);
    return value;
  };

  oracle::VerificationReport report;
  if (o.mode == "lr")
    report = oracle::verify_lr_all(tower, need(o.k, "--k"), need(o.r, "--r"));
  else if (o.mode == "branch")
    report = oracle::verify_branch_all(tower, need(o.n, "--n"));
  else if (o.mode == "quiver-arrows")
    report = oracle::verify_quiver_arrows_all(tower, o.k >= 0 ? o.k : need(o.n, "--k or --n"));
  else
    report = oracle::verify_orthonormality_all(tower, need(o.n, "--n"));

  if (o.json)
    out << oracle::to_json(report).dump(2) << "\n";
  else
    out << oracle::to_text(report);
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Littlewood-Richardson coefficients, branching rules for F wr S_n, and the "
               "quiver of F wr FI_n, with a brute-force character oracle"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  auto* lr = app.add_subcommand("lr", "LR coefficient c^gamma_{lambda,delta}, or the full "
                                      "expansion when gamma is omitted");
  lr->add_option("lambda", o.p1, "partition")->required();
  lr->add_option("delta", o.p2, "partition")->required();
  lr->add_option("gamma", o.p3, "partition");
  lr->add_flag("--json", o.json, "emit JSON");

  auto* tab = app.add_subcommand("tableaux", "list the LR tableaux of shape gamma/lambda with "
                                             "content delta");
  tab->add_option("gamma", o.p1, "outer partition")->required();
  tab->add_option("lambda", o.p2, "inner partition")->required();
  tab->add_option("delta", o.p3, "content partition")->required();
  tab->add_flag("--json", o.json, "emit JSON");

  auto* wlr = app.add_subcommand("wreath-lr", "decompose Ind(Phi_Lambda x Phi_Delta)");
  wlr->add_option("Lambda", o.p1, "multipartition")->required();
  wlr->add_option("Delta", o.p2, "multipartition")->required();
  wlr->add_flag("--json", o.json, "emit JSON");

  auto* branch = app.add_subcommand("branch", "one-step induction (up) or restriction (down)");
  branch->add_option("direction", o.direction, "up or down")
      ->required()
      ->check(CLI::IsMember({"up", "down"}));
  branch->add_option("Lambda", o.p1, "multipartition")->required();
  branch->add_option("--dims", o.dims, "dimensions of Irr F, trivial first: 1,d2,..,dl")
      ->required();
  branch->add_flag("--json", o.json, "emit JSON");

  auto* quiver = app.add_subcommand("quiver", "the quiver of F wr FI_n");
  quiver->add_option("--n", o.n, "largest object")->required()->check(CLI::NonNegativeNumber);
  quiver->add_option("--l", o.l, "number of irreducibles of F")->required()->check(CLI::PositiveNumber);
  auto* dot = quiver->add_flag("--dot", o.dot, "emit Graphviz DOT");
  auto* qjson = quiver->add_flag("--json", o.json, "emit JSON");
  dot->excludes(qjson);
  quiver->add_flag("--components", o.components, "report the number of connected components");

  auto* verify = app.add_subcommand("verify", "check the formulas against explicit representations");
  auto* g = verify->add_option("--group", o.group, "built-in base group")
                ->check(CLI::IsMember({"C2", "C3", "C4", "C5", "C6", "S3"}));
  auto* gf = verify->add_option("--group-file", o.group_file, "base group as JSON");
  g->excludes(gf);
  verify->add_option("--mode", o.mode, "what to verify")
      ->required()
      ->check(CLI::IsMember({"lr", "branch", "quiver-arrows", "orthonormality"}));
  verify->add_option("--n", o.n, "degree for branch/orthonormality")->check(CLI::NonNegativeNumber);
  verify->add_option("--k", o.k, "weight of Lambda")->check(CLI::NonNegativeNumber);
  verify->add_option("--r", o.r, "weight of Delta")->check(CLI::NonNegativeNumber);
  verify->add_option("--budget", o.budget, "largest group order to build")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json, "emit JSON");

  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (lr->parsed())
      return run_lr(o, out);
    if (tab->parsed())
      return run_tableaux(o, out);
    if (wlr->parsed())
      return run_wreath_lr(o, out);
    if (branch->parsed())
      return run_branch(o, out);
    if (quiver->parsed())
      return run_quiver(o, out);
    if (o.group.empty() && o.group_file.empty())
      throw std::invalid_argument("verify needs --group or --group-file");
    return run_verify(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

} // namespace wreathlr::cli
