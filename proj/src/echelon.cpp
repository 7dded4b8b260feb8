#include "echelon.hpp"

#include <algorithm>

namespace wblow::detail {

SparseEchelon::Row SparseEchelon::normalize(Row row) {
  std::sort(row.begin(), row.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Row out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second == 0) out.pop_back();
    } else if (e.second != 0) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool SparseEchelon::insert(Row row) {
  Row scratch;
  while (!row.empty()) {
    const std::uint32_t lead = row.front().first;
    const Row& piv = pivots_[lead];
    if (piv.empty()) {
      Rational inv = 1 / row.front().second;
      for (auto& e : row) e.second *= inv;
      pivots_[lead] = std::move(row);
      ++rank_;
      return true;
    }
    // row -= row[lead] * piv, skipping the cancelled leading entry
    const Rational factor = row.front().second;
    scratch.clear();
    scratch.reserve(row.size() + piv.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < piv.size()) {
      if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        scratch.push_back(std::move(row[i++]));
      } else if (i >= row.size() || piv[j].first < row[i].first) {
        scratch.emplace_back(piv[j].first, -factor * piv[j].second);
        ++j;
      } else {
        Rational v = row[i].second - factor * piv[j].second;
        if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    std::swap(row, scratch);
  }
  return false;
}

}  // namespace wblow::detail
