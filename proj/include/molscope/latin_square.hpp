#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "molscope/errors.hpp"
#include "molscope/permutation.hpp"

namespace molscope {

using Symbol = std::uint8_t;

inline constexpr int kMaxOrder = 10;

// An n x n latin square over symbols 0..n-1, stored row-major.
//
// Instances are only produced by `validate` or by library code that
// preserves the row/column invariants, so every LatinSquare in hand is
// a genuine latin square.
class LatinSquare {
 public:
  LatinSquare() = default;

  int order() const { return n_; }
  Symbol operator()(int r, int c) const { return cells_[static_cast<std::size_t>(r * n_ + c)]; }
  std::span<const Symbol> cells() const { return cells_; }
  std::span<const Symbol> row(int r) const {
    return std::span<const Symbol>(cells_).subspan(static_cast<std::size_t>(r * n_),
                                                   static_cast<std::size_t>(n_));
  }

  std::vector<int> column(int c) const;

  // Caller guarantees the latin property; used on hot paths that build
  // squares from structures already known to be latin.
  static LatinSquare unchecked(int n, std::vector<Symbol> cells) {
    return LatinSquare(n, std::move(cells));
  }

  auto operator<=>(const LatinSquare&) const = default;

 private:
  LatinSquare(int n, std::vector<Symbol> cells) : n_(n), cells_(std::move(cells)) {}

  int n_ = 0;
  std::vector<Symbol> cells_;
};

// Uniform row/column/symbol relabelling. The image of L has
// result[rows(r), cols(c)] = syms(L[r,c]).
struct Isotopism {
  Permutation rows;
  Permutation cols;
  Permutation syms;

  static Isotopism identity(int n);
  int order() const { return rows.size(); }
  Isotopism inverse() const;

  auto operator<=>(const Isotopism&) const = default;
};

// (a * b) applies b first, then a.
Isotopism operator*(const Isotopism& a, const Isotopism& b);

/// Checks a grid and returns it as a LatinSquare.
///
/// Throws Error with kind BadShape (non-square or order outside 1..10),
/// BadSymbol, DuplicateInRow or DuplicateInColumn; the error index is the
/// offending row or column.
LatinSquare validate(const std::vector<std::vector<int>>& grid);
LatinSquare validate(int n, std::span<const int> cells);

/// Permutes symbols so row 0 reads 0..n-1, then permutes rows so column 0
/// reads 0..n-1. The isotopism maps the input to the returned square.
std::pair<LatinSquare, Isotopism> reduce(const LatinSquare& square);

bool is_reduced(const LatinSquare& square);

LatinSquare apply_isotopism(const LatinSquare& square, const Isotopism& t);

LatinSquare transpose(const LatinSquare& square);

/// Number of 2x2 latin subsquares.
long count_intercalates(const LatinSquare& square);

/// Number of m x m latin subsquares, 2 <= m <= n/2.
long count_subsquares(const LatinSquare& square, int m);

/// |{(A[r,c], B[r,c])}|; equals n^2 exactly when A and B are orthogonal.
int count_distinct_pairs(const LatinSquare& a, const LatinSquare& b);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// True when phi applied uniformly to rows, columns and symbols fixes L.
bool is_automorphism(const LatinSquare& square, const Permutation& phi);

// Standard squares used throughout the tests and the CLI.
LatinSquare cyclic_square(int n);
/// Cayley table of (Z_p)^d in the usual base-p encoding of elements.
LatinSquare elementary_abelian_square(int p, int d);
/// The idempotent Steiner quasigroup of the Fano plane.
LatinSquare steiner_square_7();

}  // namespace molscope
