#include "wreathlr/oracle/representation.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace wreathlr::oracle {

namespace {

Matrix kron(const Matrix& a, const Matrix& b)
{
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what)
{
  if (!a->same_as(*b))
    throw std::invalid_argument(std::string(what) + ": representations live on different groups (" +
                                a->name() + " vs " + b->name() + ")");
}

// Standard tableaux of shape lambda, each as (row, col) per entry 0..n-1.
struct StandardTableau {
  std::vector<int> row;
  std::vector<int> col;
};

void fill_standard(const Partition& lambda, std::vector<int>& filled, StandardTableau& current,
                   std::vector<StandardTableau>& out)
{
  const int next = static_cast<int>(current.row.size());
  if (next == lambda.weight()) {
    out.push_back(current);
    return;
  }
  for (int r = 0; r < lambda.length(); ++r) {
    const int c = filled[static_cast<std::size_t>(r)];
    if (c == lambda.row(r))
      continue;
    if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= c)
      continue;
    ++filled[static_cast<std::size_t>(r)];
    current.row.push_back(r);
    current.col.push_back(c);
    fill_standard(lambda, filled, current, out);
    current.row.pop_back();
    current.col.pop_back();
    --filled[static_cast<std::size_t>(r)];
  }
}

} // namespace

MatrixRep::MatrixRep(GroupPtr group, std::vector<Matrix> images)
    : group_(std::move(group)), images_(std::move(images))
{
  if (!group_)
    throw std::invalid_argument("representation needs a group");
  if (images_.size() != group_->order())
    throw std::invalid_argument("representation needs one image per group element");
  degree_ = static_cast<int>(images_.front().rows());
  for (const auto& m : images_)
    if (m.rows() != degree_ || m.cols() != degree_)
      throw std::invalid_argument("representation images must be square of equal size");
  const Matrix& id = images_[static_cast<std::size_t>(group_->identity())];
  if ((id - Matrix::Identity(degree_, degree_)).cwiseAbs().maxCoeff() > kMatrixTolerance)
    throw std::invalid_argument("representation must send the identity to the identity matrix");
}

MatrixRep trivial_rep(GroupPtr group)
{
  std::vector<Matrix> images(group->order(), Matrix::Identity(1, 1));
  return MatrixRep(std::move(group), std::move(images));
}

MatrixRep regular_rep(GroupPtr group, const Budget& budget)
{
  const auto emb = trivial_embedding(std::move(group));
  return induce(trivial_rep(emb.sub), emb, budget);
}

ClassFunction character(const MatrixRep& rep)
{
  return {rep.group(), kernels::omp::traces(rep.images())};
}

Complex inner_product(const ClassFunction& a, const ClassFunction& b)
{
  require_same_group(a.group, b.group, "inner product");
  return kernels::omp::inner_product(a.values, b.values);
}

long long to_multiplicity(Complex value)
{
  const double rounded = std::round(value.real());
  if (std::abs(value - Complex(rounded, 0.0)) > kMultiplicityTolerance)
    throw std::runtime_error("inner product " + std::to_string(value.real()) + "+" +
                             std::to_string(value.imag()) + "i is not an integer");
  return static_cast<long long>(rounded);
}

double homomorphism_defect(const MatrixRep& rep)
{
  return kernels::omp::homomorphism_defect(*rep.group(), rep.images());
}

double generator_homomorphism_defect(const MatrixRep& rep)
{
  const auto& g = *rep.group();
  double worst = 0.0;
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int s : g.generators()) {
      const Matrix diff = rep.image(g.mul(a, s)) - rep.image(a) * rep.image(s);
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  return worst;
}

double class_function_defect(const ClassFunction& chi)
{
  return kernels::omp::class_function_defect(*chi.group, chi.values);
}

MatrixRep tensor_inner(const MatrixRep& a, const MatrixRep& b)
{
  require_same_group(a.group(), b.group(), "inner tensor product");
  std::vector<Matrix> images(a.images().size());
  for (std::size_t g = 0; g < images.size(); ++g)
    images[g] = kron(a.images()[g], b.images()[g]);
  return MatrixRep(a.group(), std::move(images));
}

MatrixRep tensor_outer(std::span<const MatrixRep> factors, const Budget& budget)
{
  std::vector<GroupPtr> groups;
  for (const auto& f : factors)
    groups.push_back(f.group());
  auto product = GroupData::product(std::move(groups), budget);
  std::vector<Matrix> images(product->order());
  for (std::size_t idx = 0; idx < images.size(); ++idx) {
    const auto parts = product->split(static_cast<int>(idx));
    Matrix m = Matrix::Identity(1, 1);
    for (std::size_t i = 0; i < parts.size(); ++i)
      m = kron(m, factors[i].image(parts[i]));
    images[idx] = std::move(m);
  }
  return MatrixRep(std::move(product), std::move(images));
}

MatrixRep tensor_outer(const MatrixRep& a, const MatrixRep& b, const Budget& budget)
{
  const std::vector<MatrixRep> both{a, b};
  return tensor_outer(both, budget);
}

MatrixRep restrict_rep(const MatrixRep& rep, const Embedding& emb)
{
  require_same_group(rep.group(), emb.group, "restriction");
  std::vector<Matrix> images;
  images.reserve(emb.image.size());
  for (int g : emb.image)
    images.push_back(rep.image(g));
  return MatrixRep(emb.sub, std::move(images));
}

ClassFunction restrict_character(const ClassFunction& chi, const Embedding& emb)
{
  require_same_group(chi.group, emb.group, "restriction");
  ClassFunction out{emb.sub, {}};
  for (int g : emb.image)
    out.values.push_back(chi.values[static_cast<std::size_t>(g)]);
  return out;
}

MatrixRep induce(const MatrixRep& rep, const Embedding& emb, const Budget& budget)
{
  require_same_group(rep.group(), emb.sub, "induction");
  const GroupData& G = *emb.group;
  const std::size_t index = G.order() / emb.sub->order();
  const auto d = static_cast<Eigen::Index>(rep.degree());
  if (index * static_cast<std::size_t>(d) > budget.max_degree)
    throw BudgetExceeded("induced degree " + std::to_string(index * static_cast<std::size_t>(d)) +
                         " exceeds the budget of " + std::to_string(budget.max_degree));

  std::vector<int> coset_of(G.order(), -1);
  std::vector<int> reps;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    if (coset_of[static_cast<std::size_t>(g)] >= 0)
      continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : emb.image)
      coset_of[static_cast<std::size_t>(G.mul(g, h))] = id;
  }

  const auto big = static_cast<Eigen::Index>(index) * d;
  std::vector<Matrix> images(G.order());
  const int order = static_cast<int>(G.order());
#pragma omp parallel for schedule(dynamic, 8)
  for (int g = 0; g < order; ++g) {
    Matrix m = Matrix::Zero(big, big);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const int t = G.mul(g, reps[i]);
      const auto j = static_cast<std::size_t>(coset_of[static_cast<std::size_t>(t)]);
      const int h = emb.preimage[static_cast<std::size_t>(G.mul(G.inverse(reps[j]), t))];
      m.block(static_cast<Eigen::Index>(j) * d, static_cast<Eigen::Index>(i) * d, d, d) =
          rep.image(h);
    }
    images[static_cast<std::size_t>(g)] = std::move(m);
  }
  return MatrixRep(emb.group, std::move(images));
}

MatrixRep specht_rep(const Partition& lambda)
{
  const int n = lambda.weight();
  if (n > 5)
    throw BudgetExceeded("Specht modules are built only for n <= 5");
  auto sym = GroupData::symmetric(n);

  std::vector<StandardTableau> basis;
  {
    std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
    StandardTableau current;
    fill_standard(lambda, filled, current, basis);
  }
  std::map<std::vector<int>, Eigen::Index> position;
  for (std::size_t b = 0; b < basis.size(); ++b)
    position.emplace(basis[b].row, static_cast<Eigen::Index>(b));
  const auto dim = static_cast<Eigen::Index>(basis.size());

  // rho(s_k) for the adjacent transposition of k and k+1, with axial
  // distance d = content(k+1) - content(k).
  std::vector<Matrix> simple;
  for (int k = 0; k + 1 < n; ++k) {
    Matrix m = Matrix::Zero(dim, dim);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& t = basis[b];
      const auto uk = static_cast<std::size_t>(k);
      const double d = (t.col[uk + 1] - t.row[uk + 1]) - (t.col[uk] - t.row[uk]);
      const auto col = static_cast<Eigen::Index>(b);
      m(col, col) = 1.0 / d;
      if (std::abs(d) > 1.0) {
        auto swapped = t.row;
        std::swap(swapped[uk], swapped[uk + 1]);
        m(position.at(swapped), col) = std::sqrt(1.0 - 1.0 / (d * d));
      }
    }
    simple.push_back(std::move(m));
  }

  std::vector<Matrix> images(sym->order());
  std::vector<char> done(sym->order(), 0);
  std::vector<std::size_t> queue{0};
  images[0] = Matrix::Identity(dim, dim);
  done[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto pi = perm_unrank(queue[head], n);
    for (int k = 0; k + 1 < n; ++k) {
      auto s = perm_unrank(0, n);
      std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]);
      const auto next = perm_rank(perm_compose(s, pi));
      if (done[next])
        continue;
      done[next] = 1;
      images[next] = simple[static_cast<std::size_t>(k)] * images[queue[head]];
      queue.push_back(next);
    }
  }
  return MatrixRep(std::move(sym), std::move(images));
}

MatrixRep inflate(const MatrixRep& sym_rep, GroupPtr wreath)
{
  if (wreath->kind() != GroupData::Kind::Wreath ||
      sym_rep.group()->symmetric_degree() != wreath->wreath_degree())
    throw std::invalid_argument("inflation needs a representation of S_n and the group F wr S_n");
  std::vector<Matrix> images(wreath->order());
  for (std::size_t idx = 0; idx < images.size(); ++idx)
    images[idx] = sym_rep.image(static_cast<int>(wreath->wreath_perm_rank(static_cast<int>(idx))));
  return MatrixRep(std::move(wreath), std::move(images));
}

MatrixRep extend(const MatrixRep& irrep, GroupPtr wreath)
{
  if (wreath->kind() != GroupData::Kind::Wreath || !irrep.group()->same_as(*wreath->base()))
    throw std::invalid_argument("extension needs a representation of F and the group F wr S_n");
  const int n = wreath->wreath_degree();
  const int d = irrep.degree();
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i)
    dim *= static_cast<std::size_t>(d);

  // Slot 0 is the most significant digit, matching Kronecker order.
  auto digits = [&](std::size_t code) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int x = n - 1; x >= 0; --x) {
      out[static_cast<std::size_t>(x)] = static_cast<int>(code % static_cast<std::size_t>(d));
      code /= static_cast<std::size_t>(d);
    }
    return out;
  };
  std::vector<std::vector<int>> multi(dim);
  for (std::size_t c = 0; c < dim; ++c)
    multi[c] = digits(c);

  std::vector<Matrix> images(wreath->order());
  const int order = static_cast<int>(wreath->order());
#pragma omp parallel for schedule(dynamic, 8)
  for (int idx = 0; idx < order; ++idx) {
    const auto [f, pi] = wreath->wreath_element(idx);
    const auto pi_inv = perm_inverse(pi);
    const auto edim = static_cast<Eigen::Index>(dim);
    Matrix m(edim, edim);
    for (std::size_t row = 0; row < dim; ++row) {
      for (std::size_t col = 0; col < dim; ++col) {
        Complex entry = 1.0;
        for (std::size_t x = 0; x < static_cast<std::size_t>(n) && entry != Complex(0.0); ++x) {
          const auto src = static_cast<std::size_t>(pi_inv[x]);
          entry *= irrep.image(f[x])(multi[row][x], multi[col][src]);
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = entry;
      }
    }
    images[static_cast<std::size_t>(idx)] = std::move(m);
  }
  return MatrixRep(std::move(wreath), std::move(images));
}

} // namespace wreathlr::oracle
