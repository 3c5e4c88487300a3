#pragma once

#include <span>
#include <vector>

#include "wreathlr/oracle/group.hpp"
#include "wreathlr/oracle/kernels.hpp"
#include "wreathlr/partition.hpp"

namespace wreathlr::oracle {

/// Entrywise tolerance for the homomorphism law.
inline constexpr double kMatrixTolerance = 1e-9;
/// Tolerance when rounding inner products to multiplicities.
inline constexpr double kMultiplicityTolerance = 1e-6;

/// A homomorphism from a finite group into GL_d(C), stored as one matrix per
/// group element.
class MatrixRep {
public:
  /// Checks that every image is d x d and that the identity maps to I.
  MatrixRep(GroupPtr group, std::vector<Matrix> images);

  const GroupPtr& group() const noexcept { return group_; }
  int degree() const noexcept { return degree_; }
  const Matrix& image(int g) const { return images_.at(static_cast<std::size_t>(g)); }
  const std::vector<Matrix>& images() const noexcept { return images_; }

private:
  GroupPtr group_;
  int degree_ = 0;
  std::vector<Matrix> images_;
};

/// Values of a function on group elements, indexed like the group.
struct ClassFunction {
  GroupPtr group;
  std::vector<Complex> values;
};

MatrixRep trivial_rep(GroupPtr group);

/// Regular representation, built as the induction of the trivial
/// representation of the trivial subgroup.
MatrixRep regular_rep(GroupPtr group, const Budget& budget = {});

ClassFunction character(const MatrixRep& rep);

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)). Throws on a group mismatch.
Complex inner_product(const ClassFunction& a, const ClassFunction& b);

/// Rounds a real inner product to an integer; throws std::runtime_error if
/// it is further than kMultiplicityTolerance from one.
long long to_multiplicity(Complex value);

/// max |rho(ab) - rho(a)rho(b)| over all pairs.
double homomorphism_defect(const MatrixRep& rep);
/// The same defect over pairs (a, s) with s a generator; zero iff the
/// images define a homomorphism.
double generator_homomorphism_defect(const MatrixRep& rep);
double class_function_defect(const ClassFunction& chi);

/// Kronecker product of images; both representations of the same group.
MatrixRep tensor_inner(const MatrixRep& a, const MatrixRep& b);

/// Outer tensor product over the direct product of the factor groups.
MatrixRep tensor_outer(std::span<const MatrixRep> factors, const Budget& budget = {});
MatrixRep tensor_outer(const MatrixRep& a, const MatrixRep& b, const Budget& budget = {});

MatrixRep restrict_rep(const MatrixRep& rep, const Embedding& emb);
ClassFunction restrict_character(const ClassFunction& chi, const Embedding& emb);

/// Induced representation on the cosets gH. Coset representatives are the
/// smallest element index of each coset; block (j, i) of g is rep(h) where
/// g s_i = s_j h.
MatrixRep induce(const MatrixRep& rep, const Embedding& emb, const Budget& budget = {});

/// Young's orthogonal form for S^lambda on the symmetric group of the same
/// degree; weight(lambda) <= 5.
MatrixRep specht_rep(const Partition& lambda);

/// Pull back a representation of S_n along F wr S_n -> S_n.
MatrixRep inflate(const MatrixRep& sym_rep, GroupPtr wreath);

/// Extension of U^{(x)n} to F wr S_n: (f, pi) maps the tensor slot
/// pi^-1(x) into slot x and applies U(f(x)) there.
MatrixRep extend(const MatrixRep& irrep, GroupPtr wreath);

} // namespace wreathlr::oracle
