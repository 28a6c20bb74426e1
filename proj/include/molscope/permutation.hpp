#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace molscope {

// A bijection on 0..size()-1 stored as its image table: p[i] is where i goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  std::span<const int> image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  // (a * b)(i) = a(b(i)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

bool is_permutation(std::span<const int> image);

}  // namespace molscope
