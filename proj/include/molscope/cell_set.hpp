#pragma once

#include <bit>
#include <cstdint>

namespace molscope {

using Word128 = unsigned __int128;

inline int popcount128(Word128 w) {
  return std::popcount(static_cast<std::uint64_t>(w)) +
         std::popcount(static_cast<std::uint64_t>(w >> 64));
}

// Index of the lowest set bit; w must be non-zero.
inline int lowest_bit128(Word128 w) {
  const auto lo = static_cast<std::uint64_t>(w);
  return lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(w >> 64));
}

// A set of cells of an n x n square (n <= 10), bit r*n + c for cell (r,c).
class CellSet {
 public:
  constexpr CellSet() = default;
  constexpr explicit CellSet(Word128 bits) : bits_(bits) {}

  static CellSet single(int n, int r, int c) { return CellSet(Word128{1} << (r * n + c)); }

  Word128 bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return popcount128(bits_); }
  bool contains(int index) const { return (bits_ >> index) & 1; }
  bool contains(int n, int r, int c) const { return contains(r * n + c); }
  bool disjoint(CellSet other) const { return (bits_ & other.bits_) == 0; }
  int first() const { return lowest_bit128(bits_); }

  // Column mask of row r.
  unsigned row_mask(int n, int r) const {
    return static_cast<unsigned>(bits_ >> (r * n)) & ((1u << n) - 1);
  }

  CellSet& operator|=(CellSet o) { bits_ |= o.bits_; return *this; }
  CellSet& operator&=(CellSet o) { bits_ &= o.bits_; return *this; }
  friend CellSet operator|(CellSet a, CellSet b) { return CellSet(a.bits_ | b.bits_); }
  friend CellSet operator&(CellSet a, CellSet b) { return CellSet(a.bits_ & b.bits_); }
  friend CellSet operator~(CellSet a) { return CellSet(~a.bits_); }
  friend bool operator==(CellSet a, CellSet b) { return a.bits_ == b.bits_; }
  friend bool operator<(CellSet a, CellSet b) { return a.bits_ < b.bits_; }

  template <class F>
  void for_each(F&& f) const {
    for (Word128 w = bits_; w; w &= w - 1) f(lowest_bit128(w));
  }

 private:
  Word128 bits_ = 0;
};

inline CellSet full_cell_set(int n) {
  const int total = n * n;
  return CellSet(total == 128 ? ~Word128{0} : (Word128{1} << total) - 1);
}

}  // namespace molscope
