#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace subduce::detail {

/// Disjoint sets over 0..n-1; the root of a set is its least element.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  /// False when x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace subduce::detail
