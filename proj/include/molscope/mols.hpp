#pragma once

#include <array>
#include <vector>

#include "molscope/cell_set.hpp"
#include "molscope/latin_square.hpp"

namespace molscope {

// An ordered list of pairwise orthogonal latin squares of one order.
class MolsList {
 public:
  MolsList() = default;
  /// Throws SizeMismatch or NotOrthogonal (index = offending square).
  explicit MolsList(std::vector<LatinSquare> squares);
  explicit MolsList(LatinSquare square);

  static MolsList unchecked(std::vector<LatinSquare> squares);

  int order() const { return squares_.empty() ? 0 : squares_.front().order(); }
  int size() const { return static_cast<int>(squares_.size()); }
  const LatinSquare& operator[](int i) const { return squares_[static_cast<std::size_t>(i)]; }
  const std::vector<LatinSquare>& squares() const { return squares_; }

  auto operator<=>(const MolsList&) const = default;

 private:
  std::vector<LatinSquare> squares_;
};

// n^2 x width array in which every column pair realises each ordered
// symbol pair exactly once. Row i is stored at rows()[i*width .. +width).
class OrthogonalArray {
 public:
  OrthogonalArray() = default;
  /// Throws BadShape / BadSymbol / NotOrthogonal.
  OrthogonalArray(int n, int width, std::vector<Symbol> entries);

  static OrthogonalArray unchecked(int n, int width, std::vector<Symbol> entries);

  int order() const { return n_; }
  int width() const { return width_; }
  int num_rows() const { return n_ * n_; }
  Symbol operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * width_ + col)];
  }
  std::span<const Symbol> entries() const { return entries_; }

  /// Reorders columns: column j of the result is column order[j] of this.
  OrthogonalArray with_columns(std::span<const int> order) const;

  auto operator<=>(const OrthogonalArray&) const = default;

 private:
  int n_ = 0;
  int width_ = 0;
  std::vector<Symbol> entries_;
};

// n rows of an orthogonal array, stored as the cell set {(r,c)} of the
// list the array came from (row index = r*n + c).
struct CommonTransversal {
  CellSet cells;
  std::vector<int> row_indices() const;
};

OrthogonalArray to_oa(const MolsList& mols);

/// Reads an orthogonal array as a list, using columns row_col[0] and
/// row_col[1] as the row and column coordinates and the remaining
/// columns, in increasing order, as the squares. Throws InvalidColumns.
MolsList from_oa(const OrthogonalArray& oa, std::array<int, 2> row_col);

/// One square per 3-subset {a<b<c} of OA columns: a indexes rows, b
/// columns and c symbols. Ordered lexicographically by (a,b,c).
std::vector<LatinSquare> aspects(const MolsList& mols);
LatinSquare aspect(const OrthogonalArray& oa, int row_col, int col_col, int sym_col);

std::vector<CommonTransversal> common_transversals(const MolsList& mols);
int max_disjoint_common_transversals(const MolsList& mols);

/// Every way of adding one square. The new square takes symbol t on the
/// part of a 1-partition through cell (0,t), so its first row is in order.
std::vector<MolsList> extend(const MolsList& mols);
bool is_maximal(const MolsList& mols);

}  // namespace molscope
