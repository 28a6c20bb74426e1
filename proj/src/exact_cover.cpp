#include "molscope/exact_cover.hpp"

#include <algorithm>

namespace molscope::exact_cover {

Instance transversal_instance(const MolsList& mols) {
  const int n = mols.order();
  const int k = mols.size();
  Instance inst;
  inst.num_items = (2 + k) * n;
  inst.subsets.reserve(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<int> items{r, n + c};
      for (int i = 0; i < k; ++i) items.push_back((2 + i) * n + mols[i](r, c));
      inst.subsets.push_back(std::move(items));
    }
  }
  return inst;
}

Instance partition_instance(std::span<const std::vector<int>> transversals, int n) {
  Instance inst;
  inst.num_items = n * n;
  inst.subsets.assign(transversals.begin(), transversals.end());
  return inst;
}

// Node 0 is the root header; nodes 1..num_items are item headers.
Solver::Solver(const Instance& instance) {
  const int items = instance.num_items;
  nodes_.resize(static_cast<std::size_t>(items + 1));
  sizes_.assign(static_cast<std::size_t>(items + 1), 0);
  for (int i = 0; i <= items; ++i) {
    Node& h = at(i);
    h.left = i == 0 ? items : i - 1;
    h.right = i == items ? 0 : i + 1;
    h.up = h.down = i;
    h.item = i;
    h.subset = -1;
  }
  for (std::size_t s = 0; s < instance.subsets.size(); ++s) {
    int first = -1;
    for (int item : instance.subsets[s]) {
      const int header = item + 1;
      const int id = static_cast<int>(nodes_.size());
      Node node{};
      node.item = header;
      node.subset = static_cast<int>(s);
      node.down = header;
      node.up = at(header).up;
      if (first < 0) {
        node.left = node.right = id;
        first = id;
      } else {
        node.right = first;
        node.left = at(first).left;
      }
      nodes_.push_back(node);
      at(node.up).down = id;
      at(header).up = id;
      if (id != first) {
        at(node.left).right = id;
        at(first).left = id;
      }
      ++sizes_[header];
    }
  }
}

void Solver::cover(int item) {
  at(at(item).right).left = at(item).left;
  at(at(item).left).right = at(item).right;
  for (int i = at(item).down; i != item; i = at(i).down) {
    for (int j = at(i).right; j != i; j = at(j).right) {
      Node& x = at(j);
      at(x.down).up = x.up;
      at(x.up).down = x.down;
      --sizes_[x.item];
    }
  }
}

void Solver::uncover(int item) {
  for (int i = at(item).up; i != item; i = at(i).up) {
    for (int j = at(i).left; j != i; j = at(j).left) {
      Node& x = at(j);
      ++sizes_[x.item];
      at(x.down).up = j;
      at(x.up).down = j;
    }
  }
  at(at(item).right).left = item;
  at(at(item).left).right = item;
}

bool Solver::search(std::uint64_t* count,
                    const std::function<bool(std::span<const int>)>* visit) {
  if (at(root_).right == root_) {
    if (count) ++*count;
    if (visit) {
      std::vector<int> sorted = chosen_;
      std::sort(sorted.begin(), sorted.end());
      return (*visit)(sorted);
    }
    return true;
  }
  int best = -1;
  for (int h = at(root_).right; h != root_; h = at(h).right) {
    if (best < 0 || sizes_[h] < sizes_[best]) best = h;
  }
  if (sizes_[best] == 0) return true;
  cover(best);
  bool keep_going = true;
  for (int r = at(best).down; r != best && keep_going; r = at(r).down) {
    chosen_.push_back(at(r).subset);
    for (int j = at(r).right; j != r; j = at(j).right) cover(at(j).item);
    keep_going = search(count, visit);
    for (int j = at(r).left; j != r; j = at(j).left) uncover(at(j).item);
    chosen_.pop_back();
  }
  uncover(best);
  return keep_going;
}

std::uint64_t Solver::count() {
  std::uint64_t total = 0;
  search(&total, nullptr);
  return total;
}

void Solver::enumerate(const std::function<bool(std::span<const int>)>& visit) {
  search(nullptr, &visit);
}

std::uint64_t solve_count(const Instance& instance) { return Solver(instance).count(); }

std::vector<std::vector<int>> solve_all(const Instance& instance) {
  std::vector<std::vector<int>> out;
  Solver(instance).enumerate([&](std::span<const int> s) {
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace molscope::exact_cover
