#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arcv/errors.hpp"
#include "arcv/rational.hpp"

namespace arcv {

/// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Sort by column, merge duplicates, drop zeros.
SparseRow normalize_row(SparseRow row);

/// Incremental row echelon form over Q on a fixed number of columns.
///
/// Stored rows have pairwise distinct leading columns and a leading
/// coefficient of 1. Rows are only reduced at their leading position, which
/// is all that rank and span membership need.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols) : pivot_of_col_(ncols, -1) {}

  std::size_t ncols() const { return pivot_of_col_.size(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Adds a row; returns true iff it was outside the previous span.
  bool insert(SparseRow row);
  bool contains(SparseRow row) const;
  /// Remainder of row after reduction against the stored pivots.
  SparseRow reduce(SparseRow row) const;

 private:
  void check_columns(const SparseRow& row) const;
  SparseRow reduce_normalized(SparseRow row) const;

  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_col_;
};

/// Echelonized matrix whose columns are an ordered list of keys (monomials of
/// one multidegree). Rows are given as key -> coefficient lists.
template <class Key, class Hash = std::hash<Key>>
class GradedPieceMatrix {
 public:
  explicit GradedPieceMatrix(std::vector<Key> column_index)
      : column_index_(std::move(column_index)), echelon_(column_index_.size()) {
    position_.reserve(column_index_.size());
    for (std::size_t i = 0; i < column_index_.size(); ++i)
      if (!position_.emplace(column_index_[i], static_cast<std::uint32_t>(i)).second)
        throw UsageError("GradedPieceMatrix: duplicate column key");
  }

  const std::vector<Key>& column_index() const { return column_index_; }
  std::size_t rank() const { return echelon_.rank(); }
  std::size_t ncols() const { return column_index_.size(); }
  const RowEchelon& echelon() const { return echelon_; }

  /// Throws UsageError if some key is not a column.
  template <class Terms>
  SparseRow to_row(const Terms& terms) const {
    SparseRow row;
    for (const auto& [key, coeff] : terms) {
      auto it = position_.find(key);
      if (it == position_.end())
        throw UsageError("GradedPieceMatrix: entry outside the column index");
      row.emplace_back(it->second, coeff);
    }
    return normalize_row(std::move(row));
  }

  template <class Terms>
  bool insert(const Terms& terms) { return echelon_.insert(to_row(terms)); }

  template <class Terms>
  bool contains(const Terms& terms) const {
    // Entries outside the index can never be in the span.
    for (const auto& [key, coeff] : terms)
      if (coeff != 0 && !position_.count(key)) return false;
    return echelon_.contains(to_row(terms));
  }

  bool insert_row(SparseRow row) { return echelon_.insert(std::move(row)); }

 private:
  std::vector<Key> column_index_;
  std::unordered_map<Key, std::uint32_t, Hash> position_;
  RowEchelon echelon_;
};

}  // namespace arcv
