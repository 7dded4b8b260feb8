#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wblow/rational.hpp"

namespace wblow::detail {

// Incremental row echelon form over Q for sparse rows. The pivot of a row is
// its smallest column index, so callers choose the pivot order by how they
// number columns.
class SparseEchelon {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;
  using Row = std::vector<Entry>;  // strictly increasing columns, no zeros

  explicit SparseEchelon(std::uint32_t columns) : pivots_(columns) {}

  // Reduces `row` against the current pivots; stores it if independent.
  bool insert(Row row);

  std::uint64_t rank() const noexcept { return rank_; }
  std::uint32_t columns() const noexcept {
    return static_cast<std::uint32_t>(pivots_.size());
  }
  bool is_pivot(std::uint32_t col) const { return !pivots_[col].empty(); }

  // Sorts by column and merges duplicate columns.
  static Row normalize(Row row);

 private:
  std::vector<Row> pivots_;  // pivots_[c] has leading entry 1 at column c
  std::uint64_t rank_ = 0;
};

}  // namespace wblow::detail
