#include "arcv/echelon.hpp"

#include <algorithm>

namespace arcv {

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

void RowEchelon::check_columns(const SparseRow& row) const {
  for (const auto& e : row)
    if (e.first >= pivot_of_col_.size())
      throw UsageError("RowEchelon: column " + std::to_string(e.first) +
                       " out of range (" + std::to_string(pivot_of_col_.size()) +
                       " columns)");
}

namespace {

// row -= factor * pivot, both sorted.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduce_normalized(SparseRow row) const {
  while (!row.empty()) {
    const int p = pivot_of_col_[row.front().first];
    if (p < 0) break;
    const Rational factor = row.front().second;
    row = axpy(row, factor, rows_[p]);
  }
  return row;
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  row = normalize_row(std::move(row));
  check_columns(row);
  return reduce_normalized(std::move(row));
}

bool RowEchelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead_inv = 1 / row.front().second;
  for (auto& e : row) e.second *= lead_inv;
  pivot_of_col_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowEchelon::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

}  // namespace arcv
