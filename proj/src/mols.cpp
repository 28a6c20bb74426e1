#include "molscope/mols.hpp"

#include <algorithm>
#include <string>

#include "molscope/plex.hpp"

namespace molscope {

MolsList::MolsList(std::vector<LatinSquare> squares) : squares_(std::move(squares)) {
  for (std::size_t i = 0; i < squares_.size(); ++i) {
    if (squares_[i].order() != squares_.front().order()) {
      throw Error(ErrorKind::SizeMismatch, "square " + std::to_string(i) + " has a different order",
                  static_cast<int>(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!are_orthogonal(squares_[j], squares_[i])) {
        throw Error(ErrorKind::NotOrthogonal,
                    "squares " + std::to_string(j) + " and " + std::to_string(i),
                    static_cast<int>(i));
      }
    }
  }
}

MolsList::MolsList(LatinSquare square) { squares_.push_back(std::move(square)); }

MolsList MolsList::unchecked(std::vector<LatinSquare> squares) {
  MolsList m;
  m.squares_ = std::move(squares);
  return m;
}

OrthogonalArray OrthogonalArray::unchecked(int n, int width, std::vector<Symbol> entries) {
  OrthogonalArray oa;
  oa.n_ = n;
  oa.width_ = width;
  oa.entries_ = std::move(entries);
  return oa;
}

OrthogonalArray::OrthogonalArray(int n, int width, std::vector<Symbol> entries)
    : n_(n), width_(width), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxOrder || width < 2 ||
      entries_.size() != static_cast<std::size_t>(n * n * width)) {
    throw Error(ErrorKind::BadShape, "orthogonal array must be n^2 x width with width >= 2");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= n) {
      throw Error(ErrorKind::BadSymbol, "entry out of range", static_cast<int>(i) / width);
    }
  }
  for (int a = 0; a < width; ++a) {
    for (int b = a + 1; b < width; ++b) {
      std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
      for (int row = 0; row < n * n; ++row) {
        char& s = seen[static_cast<std::size_t>((*this)(row, a) * n + (*this)(row, b))];
        if (s) throw Error(ErrorKind::NotOrthogonal, "columns " + std::to_string(a) + "," + std::to_string(b), b);
        s = 1;
      }
    }
  }
}

OrthogonalArray OrthogonalArray::with_columns(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != width_ ||
      !is_permutation(std::vector<int>(order.begin(), order.end()))) {
    throw Error(ErrorKind::InvalidColumns, "column order must permute all columns");
  }
  std::vector<Symbol> out(entries_.size());
  for (int row = 0; row < num_rows(); ++row)
    for (int j = 0; j < width_; ++j)
      out[static_cast<std::size_t>(row * width_ + j)] = (*this)(row, order[static_cast<std::size_t>(j)]);
  return unchecked(n_, width_, std::move(out));
}

std::vector<int> CommonTransversal::row_indices() const {
  std::vector<int> out;
  cells.for_each([&](int i) { out.push_back(i); });
  return out;
}

OrthogonalArray to_oa(const MolsList& mols) {
  const int n = mols.order();
  const int width = mols.size() + 2;
  std::vector<Symbol> entries(static_cast<std::size_t>(n * n * width));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      auto* row = &entries[static_cast<std::size_t>((r * n + c) * width)];
      row[0] = static_cast<Symbol>(r);
      row[1] = static_cast<Symbol>(c);
      for (int i = 0; i < mols.size(); ++i) row[2 + i] = mols[i](r, c);
    }
  }
  return OrthogonalArray::unchecked(n, width, std::move(entries));
}

LatinSquare aspect(const OrthogonalArray& oa, int row_col, int col_col, int sym_col) {
  const int n = oa.order();
  std::vector<Symbol> cells(static_cast<std::size_t>(n * n));
  for (int row = 0; row < oa.num_rows(); ++row) {
    cells[static_cast<std::size_t>(oa(row, row_col) * n + oa(row, col_col))] = oa(row, sym_col);
  }
  return LatinSquare::unchecked(n, std::move(cells));
}

MolsList from_oa(const OrthogonalArray& oa, std::array<int, 2> row_col) {
  const int w = oa.width();
  if (row_col[0] == row_col[1] || row_col[0] < 0 || row_col[1] < 0 || row_col[0] >= w ||
      row_col[1] >= w) {
    throw Error(ErrorKind::InvalidColumns, "row/column coordinates must be two distinct columns");
  }
  std::vector<LatinSquare> squares;
  for (int col = 0; col < w; ++col) {
    if (col == row_col[0] || col == row_col[1]) continue;
    squares.push_back(aspect(oa, row_col[0], row_col[1], col));
  }
  return MolsList::unchecked(std::move(squares));
}

std::vector<LatinSquare> aspects(const MolsList& mols) {
  const OrthogonalArray oa = to_oa(mols);
  std::vector<LatinSquare> out;
  for (int a = 0; a < oa.width(); ++a)
    for (int b = a + 1; b < oa.width(); ++b)
      for (int c = b + 1; c < oa.width(); ++c) out.push_back(aspect(oa, a, b, c));
  return out;
}

std::vector<CommonTransversal> common_transversals(const MolsList& mols) {
  const PlexCatalogue cat = enumerate_plexes(build_profile(mols), 1);
  std::vector<CommonTransversal> out;
  out.reserve(static_cast<std::size_t>(cat.size()));
  for (CellSet cells : cat.cells()) out.push_back({cells});
  return out;
}

int max_disjoint_common_transversals(const MolsList& mols) {
  return max_disjoint(enumerate_plexes(build_profile(mols), 1));
}

std::vector<MolsList> extend(const MolsList& mols) {
  const int n = mols.order();
  const PlexCatalogue cat = enumerate_plexes(build_profile(mols), 1);
  std::vector<MolsList> out;
  for_each_partition(cat, [&](std::span<const int> parts) {
    std::vector<Symbol> cells(static_cast<std::size_t>(n * n));
    for (int t = 0; t < n; ++t) {
      cat.cells()[static_cast<std::size_t>(parts[static_cast<std::size_t>(t)])].for_each(
          [&](int cell) { cells[static_cast<std::size_t>(cell)] = static_cast<Symbol>(t); });
    }
    std::vector<LatinSquare> squares = mols.squares();
    squares.push_back(LatinSquare::unchecked(n, std::move(cells)));
    out.push_back(MolsList::unchecked(std::move(squares)));
    return true;
  });
  return out;
}

bool is_maximal(const MolsList& mols) {
  const PlexCatalogue cat = enumerate_plexes(build_profile(mols), 1);
  bool found = false;
  for_each_partition(cat, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return !found;
}

}  // namespace molscope
