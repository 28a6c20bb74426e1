#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "molscope/mols.hpp"

namespace molscope::exact_cover {

// Items 0..num_items-1 and subsets of them; a solution picks subsets
// covering every item exactly once.
struct Instance {
  int num_items = 0;
  std::vector<std::vector<int>> subsets;
};

/// Items: n rows, n columns, then n symbol slots per square. Subset r*n+c
/// covers the row, column and symbols of cell (r,c).
Instance transversal_instance(const MolsList& mols);

/// Items: the n^2 cells. One subset per transversal (given as cell indices
/// r*n+c).
Instance partition_instance(std::span<const std::vector<int>> transversals, int n);

/// Algorithm X on a dancing-links matrix, branching on the item with the
/// fewest remaining subsets (ties: lowest item index).
class Solver {
 public:
  explicit Solver(const Instance& instance);

  std::uint64_t count();
  /// `visit` gets the chosen subset indices (sorted). Return false to stop.
  void enumerate(const std::function<bool(std::span<const int>)>& visit);

 private:
  struct Node {
    int left, right, up, down, item, subset;
  };

  Node& at(int i) { return nodes_[static_cast<std::size_t>(i)]; }
  void cover(int item);
  void uncover(int item);
  bool search(std::uint64_t* count, const std::function<bool(std::span<const int>)>* visit);

  std::vector<Node> nodes_;
  std::vector<int> sizes_;  // indexed by header node
  std::vector<int> chosen_;
  int root_ = 0;
};

std::uint64_t solve_count(const Instance& instance);
std::vector<std::vector<int>> solve_all(const Instance& instance);

}  // namespace molscope::exact_cover
