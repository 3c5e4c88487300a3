#include "wreathlr/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreathlr {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner))
{
  if (!contains(outer_, inner_))
    throw std::invalid_argument("skew shape: inner partition " + to_string(inner_) +
                                " does not fit in " + to_string(outer_));
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
  if (static_cast<int>(rows_.size()) > shape_.outer().length())
    throw std::invalid_argument("skew tableau: more rows than the outer shape");
  rows_.resize(static_cast<std::size_t>(shape_.outer().length()));
  for (int r = 0; r < shape_.outer().length(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != shape_.row_length(r))
      throw std::invalid_argument("skew tableau: row " + std::to_string(r) +
                                  " has the wrong number of entries");
    for (int v : row)
      if (v < 1)
        throw std::invalid_argument("skew tableau: entries must be positive");
  }
}

Composition SkewTableau::content() const
{
  std::vector<int> counts;
  for (const auto& row : rows_) {
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v)
        counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  return Composition(std::move(counts));
}

std::vector<int> row_word(const SkewTableau& t)
{
  std::vector<int> word;
  for (const auto& row : t.rows())
    word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

std::size_t first_lattice_violation(const std::vector<int>& word)
{
  std::vector<int> counts;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v < 1)
      return i + 1;
    if (static_cast<int>(counts.size()) < v)
      counts.resize(static_cast<std::size_t>(v), 0);
    const int now = ++counts[static_cast<std::size_t>(v - 1)];
    if (v > 1 && now > counts[static_cast<std::size_t>(v - 2)])
      return i + 1;
  }
  return 0;
}

bool is_lattice_word(const std::vector<int>& word)
{
  return first_lattice_violation(word) == 0;
}

bool is_semistandard(const SkewTableau& t)
{
  const auto& shape = t.shape();
  const auto& rows = t.rows();
  for (int r = 0; r < shape.outer().length(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!std::is_sorted(row.begin(), row.end()))
      return false;
    if (r == 0)
      continue;
    const auto& above = rows[static_cast<std::size_t>(r - 1)];
    // Box (r, c) sits below (r-1, c); positions are absolute columns.
    for (int c = shape.inner().row(r); c < shape.outer().row(r); ++c) {
      if (c < shape.inner().row(r - 1) || c >= shape.outer().row(r - 1))
        continue;
      const int here = row[static_cast<std::size_t>(c - shape.inner().row(r))];
      const int up = above[static_cast<std::size_t>(c - shape.inner().row(r - 1))];
      if (here <= up)
        return false;
    }
  }
  return true;
}

namespace {

// Fills boxes in row-word order (top to bottom, right to left within a row),
// so the lattice condition can be checked on every prefix as it is built.
class LrSearch {
public:
  LrSearch(const Partition& outer, const Partition& inner, const Partition& content)
      : shape_(outer, inner), content_(content.parts()),
        counts_(content_.size(), 0)
  {
    for (int r = 0; r < outer.length(); ++r)
      for (int c = outer.row(r) - 1; c >= inner.row(r); --c)
        order_.push_back({r, c});
    grid_.resize(static_cast<std::size_t>(outer.length()));
    for (int r = 0; r < outer.length(); ++r)
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer.row(r)), 0);
  }

  std::vector<SkewTableau> run()
  {
    place(0);
    return std::move(found_);
  }

private:
  struct Box {
    int row;
    int col;
  };

  void place(std::size_t step)
  {
    if (step == order_.size()) {
      emit();
      return;
    }
    const auto [r, c] = order_[step];
    auto& row = grid_[static_cast<std::size_t>(r)];

    int hi = static_cast<int>(content_.size());
    if (c + 1 < shape_.outer().row(r))
      hi = std::min(hi, row[static_cast<std::size_t>(c + 1)]);
    int lo = 1;
    if (r > 0 && c >= shape_.inner().row(r - 1) && c < shape_.outer().row(r - 1))
      lo = grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;

    for (int v = lo; v <= hi; ++v) {
      auto& count = counts_[static_cast<std::size_t>(v - 1)];
      if (count == content_[static_cast<std::size_t>(v - 1)])
        continue;
      if (v > 1 && count + 1 > counts_[static_cast<std::size_t>(v - 2)])
        continue;
      ++count;
      row[static_cast<std::size_t>(c)] = v;
      place(step + 1);
      --count;
    }
    row[static_cast<std::size_t>(c)] = 0;
  }

  void emit()
  {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape_.outer().length(); ++r) {
      const auto& full = grid_[static_cast<std::size_t>(r)];
      rows.emplace_back(full.begin() + shape_.inner().row(r), full.end());
    }
    found_.emplace_back(shape_, std::move(rows));
  }

  SkewShape shape_;
  std::vector<int> content_;
  std::vector<int> counts_;
  std::vector<Box> order_;
  std::vector<std::vector<int>> grid_;
  std::vector<SkewTableau> found_;
};

} // namespace

std::vector<SkewTableau> enumerate_lr_tableaux(const Partition& outer, const Partition& inner,
                                               const Partition& content)
{
  if (!contains(outer, inner))
    throw std::invalid_argument("LR tableaux: " + to_string(inner) + " is not contained in " +
                                to_string(outer));
  if (outer.weight() != inner.weight() + content.weight())
    throw std::invalid_argument("LR tableaux: weight of " + to_string(outer) +
                                " differs from the weights of " + to_string(inner) + " and " +
                                to_string(content));
  return LrSearch(outer, inner, content).run();
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& delta,
                             const Partition& gamma)
{
  if (gamma.weight() != lambda.weight() + delta.weight() || !contains(gamma, lambda))
    return 0;
  return enumerate_lr_tableaux(gamma, lambda, delta).size();
}

PartitionMultiplicities lr_expand(const Partition& lambda, const Partition& delta)
{
  PartitionMultiplicities out;
  for (const auto& gamma : partitions_of(lambda.weight() + delta.weight())) {
    if (!contains(gamma, lambda) || !contains(gamma, delta))
      continue;
    if (auto c = lr_coefficient(lambda, delta, gamma))
      out.emplace(gamma, c);
  }
  return out;
}

std::string render(const SkewTableau& t)
{
  std::string s;
  const auto& shape = t.shape();
  for (int r = 0; r < shape.outer().length(); ++r) {
    if (r)
      s += " / ";
    std::string row;
    for (int c = 0; c < shape.inner().row(r); ++c)
      row += row.empty() ? "." : " .";
    for (int v : t.rows()[static_cast<std::size_t>(r)])
      row += (row.empty() ? "" : " ") + std::to_string(v);
    s += row;
  }
  return s;
}

} // namespace wreathlr
