#include "schurp/tableau.hpp"

#include "schurp/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace schurp {

namespace {

// Linear-extension count over an explicit cell list. Cells are filled in
// increasing label order; a cell is addable once its left and upper
// neighbours (when part of the shape) are filled. Memoized on the filled-set
// bitmask, so shapes up to ~20 cells stay cheap.
class ExtensionCounter {
public:
  explicit ExtensionCounter(const std::vector<Cell>& cells)
      : cells_(cells), left_(cells.size()), up_(cells.size()) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      left_[i] = find(cells_[i].row, cells_[i].col - 1);
      up_[i] = find(cells_[i].row - 1, cells_[i].col);
    }
  }

  TableauCount count() {
    if (cells_.size() > 63)
      fail(ErrorCode::InvalidArgument, "shape too large for backtracking count");
    return rec(0);
  }

private:
  int find(int row, int col) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{row, col});
    if (it != cells_.end() && it->row == row && it->col == col)
      return static_cast<int>(it - cells_.begin());
    return -1;
  }

  TableauCount rec(std::uint64_t filled) {
    if (filled == (std::uint64_t{1} << cells_.size()) - 1) return 1;
    auto it = memo_.find(filled);
    if (it != memo_.end()) return it->second;
    TableauCount total = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (filled & (std::uint64_t{1} << i)) continue;
      bool left_ok = left_[i] < 0 || (filled & (std::uint64_t{1} << left_[i]));
      bool up_ok = up_[i] < 0 || (filled & (std::uint64_t{1} << up_[i]));
      if (left_ok && up_ok) total += rec(filled | (std::uint64_t{1} << i));
    }
    memo_.emplace(filled, total);
    return total;
  }

  const std::vector<Cell>& cells_;
  std::vector<int> left_;
  std::vector<int> up_;
  std::unordered_map<std::uint64_t, TableauCount> memo_;
};

}  // namespace

TableauCount count_shifted_standard_tableaux(const ShiftedSkewShape& shape) {
  ExtensionCounter counter(shape.cells());
  return counter.count();
}

TableauCount count_ordinary_standard_tableaux(const OrdinarySkewShape& shape) {
  ExtensionCounter counter(shape.cells());
  return counter.count();
}

TableauCount count_shifted_recursive(const StrictPartition& lambda, const StrictPartition& mu) {
  if (lambda.weight() < mu.weight()) return 0;
  std::map<StrictPartition, TableauCount> memo;
  auto rec = [&](auto&& self, const StrictPartition& shape) -> TableauCount {
    if (!contains(mu, shape)) return 0;
    if (shape.weight() == mu.weight()) return shape == mu ? 1 : 0;
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    TableauCount total = 0;
    for (const auto& below : strict_covers_below(shape)) total += self(self, below);
    memo.emplace(shape, total);
    return total;
  };
  return rec(rec, lambda);
}

}  // namespace schurp
