#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "molscope/cell_set.hpp"
#include "molscope/mols.hpp"

namespace molscope {

// Per-cell bit words for a list of k MOLS of order n. Bit c marks column
// c; bit i*n + s marks symbol s of square i (1-based i).
class Profile {
 public:
  int order() const { return n_; }
  int num_squares() const { return k_; }
  int width_bits() const { return (k_ + 1) * n_; }
  Word128 operator()(int r, int c) const { return words_[static_cast<std::size_t>(r * n_ + c)]; }

  friend Profile build_profile(const MolsList& mols);

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Word128> words_;
};

/// Throws WidthExceeded when (k+1)*n exceeds 128 bits.
Profile build_profile(const MolsList& mols);

struct Plex {
  CellSet cells;
  int p = 1;
};

inline constexpr std::size_t kDefaultCatalogueCap = std::size_t{1} << 28;

// All p-plexes of a profile in lexicographic order of their per-row column
// choices, together with the skip table: skip(i, r) is the index of the
// first plex after i whose cells in row r differ from those of plex i.
class PlexCatalogue {
 public:
  int order() const { return n_; }
  int multiplicity() const { return p_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }

  Plex operator[](int i) const { return {cells_[static_cast<std::size_t>(i)], p_}; }
  std::span<const CellSet> cells() const { return cells_; }

  int skip(int index, int row) const {
    return skip_[static_cast<std::size_t>(index) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(row)];
  }

  // Plexes whose lowest row-0 column is c occupy [lead_begin(c), lead_begin(c+1)).
  int lead_begin(int c) const { return lead_[static_cast<std::size_t>(c)]; }

  friend PlexCatalogue enumerate_plexes(const Profile& profile, int p, std::size_t cap);

 private:
  int n_ = 0;
  int p_ = 1;
  std::vector<CellSet> cells_;
  std::vector<std::int32_t> skip_;
  std::vector<std::int32_t> lead_;
};

/// Backtracks row by row over p-subsets of each row, tracking how often
/// every column and symbol is already used. Throws OutOfRange for p outside
/// 1..n and CatalogueOverflow once more than `cap` plexes are found.
PlexCatalogue enumerate_plexes(const Profile& profile, int p,
                               std::size_t cap = kDefaultCatalogueCap);

/// Number of partitions of the cells into n/p plexes of the catalogue.
/// Each new part must contain the lowest uncovered cell of row 0, so for
/// p = 1 the i-th transversal uses cell (0,i). Zero when p does not divide n.
std::uint64_t count_partitions(const PlexCatalogue& catalogue);

/// Calls `visit` with catalogue indices of each partition, parts ordered by
/// their lowest row-0 cell. Returning false from `visit` stops the search.
void for_each_partition(const PlexCatalogue& catalogue,
                        const std::function<bool(std::span<const int>)>& visit);

/// Number of 1-partitions of L.
std::uint64_t theta(const LatinSquare& square);

/// Largest number of pairwise disjoint plexes in a 1-plex catalogue.
int max_disjoint(const PlexCatalogue& catalogue);

// A permutation of the n^2 cells mapping transversals to transversals,
// e.g. the cell action of an autoparatopism.
using CellPermutation = std::vector<int>;

/// Smallest size of an inclusion-maximal family of disjoint plexes from a
/// 1-plex catalogue. `symmetries` (optional) generate a group preserving
/// the catalogue and are only used to cut the search. Throws NoTransversals
/// for an empty catalogue.
int alpha(const PlexCatalogue& catalogue, std::span<const CellPermutation> symmetries = {});
int alpha(const LatinSquare& square);

/// Does every part of the family satisfy the p-plex condition for the list?
bool is_plex(const MolsList& mols, CellSet cells, int p);

}  // namespace molscope
