#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wreathlr/oracle/representation.hpp"
#include "wreathlr/partition.hpp"
#include "wreathlr/wreath_rules.hpp"

namespace wreathlr::oracle {

/// A base group F with a complete, irredundant list of irreducible
/// representations, trivial first.
struct BaseGroup {
  GroupPtr group;
  std::vector<MatrixRep> irreps;

  int l() const noexcept { return static_cast<int>(irreps.size()); }
  DimensionVector dims() const;
};

/// C2..C6 or S3. Throws std::invalid_argument for any other name.
BaseGroup builtin_group(std::string_view name);

/// {"order":m,"mul":[[..]],"irreps":[{"degree":d,"matrices":[[[re,im]..]..]}]}
/// Validates the table, the homomorphism law, trivial-first ordering and
/// that the characters are orthonormal with sum of squared degrees = m.
BaseGroup load_group_json(const nlohmann::json& j, std::string name = "F");

/// Checks the properties load_group_json enforces; throws on failure.
void validate_base_group(const BaseGroup& base);

/// Phi^i_lambda = Ex(U_i^{(x)n}) (x) Infl(S^lambda) on `wreath` = F wr S_{|lambda|}.
MatrixRep phi_component(const BaseGroup& base, int i, const Partition& lambda, GroupPtr wreath);

/// Phi_Lambda on F wr S_n, as the induction of the outer product of the
/// Phi^i_{lambda_i} from the block subgroup F wr S_{n_1} x ... x F wr S_{n_l}.
MatrixRep build_phi(const MultiPartition& lambda, const BaseGroup& base, GroupPtr wreath,
                    const Budget& budget = {});

/// Caches F wr S_n and the irreducibles Phi_Lambda for one base group.
/// Not safe for concurrent use; give each thread its own tower.
class WreathTower {
public:
  explicit WreathTower(BaseGroup base, Budget budget = {});

  const BaseGroup& base() const noexcept { return base_; }
  const Budget& budget() const noexcept { return budget_; }
  int l() const noexcept { return base_.l(); }
  DimensionVector dims() const { return base_.dims(); }

  GroupPtr group(int n);
  const MatrixRep& phi(const MultiPartition& lambda);
  const ClassFunction& phi_character(const MultiPartition& lambda);

  /// Multiplicities <chi, Phi_Gamma> over all Gamma of weight n. Throws if
  /// any is non-integral or the constituents do not account for chi(1).
  Decomposition decompose(const ClassFunction& chi, int n);

private:
  BaseGroup base_;
  Budget budget_;
  std::map<int, GroupPtr> groups_;
  std::map<MultiPartition, MatrixRep, CanonicalOrder> phis_;
  std::map<MultiPartition, ClassFunction, CanonicalOrder> characters_;
};

/// One comparison between a closed formula and the explicit computation.
struct DecompositionCheck {
  std::string label;
  Decomposition formula;
  Decomposition oracle;
  bool pass() const { return formula == oracle; }
};

/// One orthonormality check for F wr S_n.
struct OrthonormalityCheck {
  int n = 0;
  std::size_t irreducibles = 0;
  std::uint64_t dimension_square_sum = 0;
  std::uint64_t group_order = 0;
  double worst_gram_error = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string mode;
  std::string group;
  std::vector<DecompositionCheck> decompositions;
  std::vector<OrthonormalityCheck> orthonormality;
  bool all_pass() const;
};

/// Ind_{F wr S_k x F wr S_r}^{F wr S_{k+r}} (Phi_Lambda x Phi_Delta) against
/// wreath_lr_expand.
DecompositionCheck verify_wreath_lr(WreathTower& tower, const MultiPartition& lambda,
                                    const MultiPartition& delta);

/// Ind_{F wr S_n}^{F wr S_{n+1}} Phi_Lambda against induce_one_step.
DecompositionCheck verify_induce_one_step(WreathTower& tower, const MultiPartition& lambda);

/// Res_{F wr S_{n-1}}^{F wr S_n} Phi_Lambda against restrict_one_step.
DecompositionCheck verify_restrict_one_step(WreathTower& tower, const MultiPartition& lambda);

/// Ind_{(F wr S_k) x F}^{F wr S_{k+1}} (Phi_Lambda x trivial) against
/// arrows_via_branching; every multiplicity must be 0 or 1.
DecompositionCheck verify_quiver_arrows(WreathTower& tower, const MultiPartition& lambda);

OrthonormalityCheck verify_orthonormality(WreathTower& tower, int n);

// Whole sweeps, as run by the CLI.
VerificationReport verify_lr_all(WreathTower& tower, int k, int r);
VerificationReport verify_branch_all(WreathTower& tower, int n);
VerificationReport verify_quiver_arrows_all(WreathTower& tower, int k);
VerificationReport verify_orthonormality_all(WreathTower& tower, int n);

std::string to_text(const VerificationReport& report);
nlohmann::json to_json(const VerificationReport& report);

} // namespace wreathlr::oracle
