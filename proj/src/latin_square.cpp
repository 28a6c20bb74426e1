#include "molscope/latin_square.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace molscope {

std::vector<int> LatinSquare::column(int c) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) out[static_cast<std::size_t>(r)] = (*this)(r, c);
  return out;
}

Isotopism Isotopism::identity(int n) {
  return {Permutation::identity(n), Permutation::identity(n), Permutation::identity(n)};
}

Isotopism Isotopism::inverse() const { return {rows.inverse(), cols.inverse(), syms.inverse()}; }

Isotopism operator*(const Isotopism& a, const Isotopism& b) {
  return {a.rows * b.rows, a.cols * b.cols, a.syms * b.syms};
}

LatinSquare validate(int n, std::span<const int> cells) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::BadShape, "order " + std::to_string(n) + " outside 1.." +
                                         std::to_string(kMaxOrder));
  }
  if (cells.size() != static_cast<std::size_t>(n * n)) {
    throw Error(ErrorKind::BadShape, "expected " + std::to_string(n * n) + " cells");
  }
  std::vector<Symbol> out(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] < 0 || cells[i] >= n) {
      throw Error(ErrorKind::BadSymbol,
                  "symbol " + std::to_string(cells[i]) + " at row " + std::to_string(i / n),
                  static_cast<int>(i / static_cast<std::size_t>(n)));
    }
    out[i] = static_cast<Symbol>(cells[i]);
  }
  for (int r = 0; r < n; ++r) {
    unsigned seen = 0;
    for (int c = 0; c < n; ++c) {
      const unsigned bit = 1u << out[static_cast<std::size_t>(r * n + c)];
      if (seen & bit) throw Error(ErrorKind::DuplicateInRow, "row " + std::to_string(r), r);
      seen |= bit;
    }
  }
  for (int c = 0; c < n; ++c) {
    unsigned seen = 0;
    for (int r = 0; r < n; ++r) {
      const unsigned bit = 1u << out[static_cast<std::size_t>(r * n + c)];
      if (seen & bit) throw Error(ErrorKind::DuplicateInColumn, "column " + std::to_string(c), c);
      seen |= bit;
    }
  }
  return LatinSquare::unchecked(n, std::move(out));
}

LatinSquare validate(const std::vector<std::vector<int>>& grid) {
  const int n = static_cast<int>(grid.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(grid[static_cast<std::size_t>(r)].size()) != n) {
      throw Error(ErrorKind::BadShape, "row " + std::to_string(r) + " has wrong length", r);
    }
    flat.insert(flat.end(), grid[static_cast<std::size_t>(r)].begin(),
                grid[static_cast<std::size_t>(r)].end());
  }
  return validate(n, flat);
}

LatinSquare apply_isotopism(const LatinSquare& square, const Isotopism& t) {
  const int n = square.order();
  if (t.rows.size() != n || t.cols.size() != n || t.syms.size() != n) {
    throw Error(ErrorKind::SizeMismatch, "isotopism degree differs from square order");
  }
  std::vector<Symbol> out(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out[static_cast<std::size_t>(t.rows(r) * n + t.cols(c))] =
          static_cast<Symbol>(t.syms(square(r, c)));
    }
  }
  return LatinSquare::unchecked(n, std::move(out));
}

std::pair<LatinSquare, Isotopism> reduce(const LatinSquare& square) {
  const int n = square.order();
  std::vector<int> syms(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) syms[square(0, c)] = c;
  std::vector<int> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rows[static_cast<std::size_t>(r)] = syms[square(r, 0)];
  Isotopism t{Permutation(std::move(rows)), Permutation::identity(n), Permutation(std::move(syms))};
  LatinSquare reduced = apply_isotopism(square, t);
  return {std::move(reduced), std::move(t)};
}

bool is_reduced(const LatinSquare& square) {
  for (int i = 0; i < square.order(); ++i) {
    if (square(0, i) != i || square(i, 0) != i) return false;
  }
  return true;
}

LatinSquare transpose(const LatinSquare& square) {
  const int n = square.order();
  std::vector<Symbol> out(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(c * n + r)] = square(r, c);
  return LatinSquare::unchecked(n, std::move(out));
}

long count_intercalates(const LatinSquare& square) {
  const int n = square.order();
  long count = 0;
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = r1 + 1; r2 < n; ++r2)
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2)
          if (square(r1, c1) == square(r2, c2) && square(r1, c2) == square(r2, c1)) ++count;
  return count;
}

namespace {

// Enumerates m-subsets of 0..n-1 as bitmasks in increasing numeric order.
template <class F>
void for_each_subset(int n, int m, F&& f) {
  if (m > n) return;
  unsigned mask = (1u << m) - 1;
  const unsigned limit = 1u << n;
  while (mask < limit) {
    f(mask);
    const unsigned low = mask & (~mask + 1);
    const unsigned ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

}  // namespace

long count_subsquares(const LatinSquare& square, int m) {
  const int n = square.order();
  if (m < 2 || 2 * m > n) {
    throw Error(ErrorKind::OutOfRange,
                "subsquare order " + std::to_string(m) + " outside 2..n/2");
  }
  // Symbol bitmask of each row restricted to a column subset is computed on
  // the fly; a subsquare is a row/column selection whose rows all use the
  // same m symbols.
  long count = 0;
  for_each_subset(n, m, [&](unsigned rows) {
    int first = __builtin_ctz(rows);
    for_each_subset(n, m, [&](unsigned cols) {
      unsigned symbols = 0;
      for (unsigned cs = cols; cs; cs &= cs - 1) symbols |= 1u << square(first, __builtin_ctz(cs));
      for (unsigned rs = rows & (rows - 1); rs; rs &= rs - 1) {
        const int r = __builtin_ctz(rs);
        for (unsigned cs = cols; cs; cs &= cs - 1) {
          if (!(symbols & (1u << square(r, __builtin_ctz(cs))))) return;
        }
      }
      ++count;
    });
  });
  return count;
}

int count_distinct_pairs(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::SizeMismatch, "squares of different order");
  const int n = a.order();
  std::array<bool, kMaxOrder * kMaxOrder> seen{};
  int distinct = 0;
  for (int i = 0; i < n * n; ++i) {
    const int key = a.cells()[static_cast<std::size_t>(i)] * n + b.cells()[static_cast<std::size_t>(i)];
    if (!seen[static_cast<std::size_t>(key)]) {
      seen[static_cast<std::size_t>(key)] = true;
      ++distinct;
    }
  }
  return distinct;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  return count_distinct_pairs(a, b) == a.order() * a.order();
}

bool is_automorphism(const LatinSquare& square, const Permutation& phi) {
  const int n = square.order();
  if (phi.size() != n) throw Error(ErrorKind::SizeMismatch, "permutation degree differs from order");
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (square(phi(r), phi(c)) != phi(square(r, c))) return false;
  return true;
}

LatinSquare cyclic_square(int n) {
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[static_cast<std::size_t>(r * n + c)] = (r + c) % n;
  return validate(n, cells);
}

LatinSquare elementary_abelian_square(int p, int d) {
  int n = 1;
  for (int i = 0; i < d; ++i) n *= p;
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int sum = 0;
      for (int x = r, y = c, place = 1; place < n; x /= p, y /= p, place *= p) {
        sum += ((x % p + y % p) % p) * place;
      }
      cells[static_cast<std::size_t>(r * n + c)] = sum;
    }
  }
  return validate(n, cells);
}

LatinSquare steiner_square_7() {
  constexpr int lines[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                               {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  std::vector<int> cells(49);
  for (int x = 0; x < 7; ++x) cells[static_cast<std::size_t>(x * 7 + x)] = x;
  for (const auto& line : lines) {
    for (int i = 0; i < 3; ++i) {
      const int a = line[i], b = line[(i + 1) % 3], c = line[(i + 2) % 3];
      cells[static_cast<std::size_t>(a * 7 + b)] = c;
      cells[static_cast<std::size_t>(b * 7 + a)] = c;
    }
  }
  return validate(7, cells);
}

}  // namespace molscope
