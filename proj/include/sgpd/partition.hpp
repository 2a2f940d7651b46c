#ifndef SGPD_PARTITION_HPP_
#define SGPD_PARTITION_HPP_

#include <cstddef>
#include <vector>

#include "sgpd/result.hpp"

namespace sgpd {

// Union-find over [0, n), used to close generating relations into
// equivalence relations.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      parent_[i] = static_cast<int>(i);
    }
  }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      // attach the larger root to the smaller so representatives stay small
      if (a < b) {
        parent_[b] = a;
      } else {
        parent_[a] = b;
      }
    }
  }

  std::size_t size() const { return parent_.size(); }

 private:
  mutable std::vector<int> parent_;
};

// A frozen quotient of the universe [0, n). Classes are identified by their
// minimal member and listed in increasing order of that representative.
class Partition {
 public:
  Partition() = default;

  explicit Partition(const DisjointSets& ds) {
    const std::size_t n = ds.size();
    rep_.assign(n, -1);
    class_index_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      int root = ds.find(static_cast<int>(i));
      if (rep_[root] == -1) {
        rep_[root] = static_cast<int>(i);  // first touch == minimal member
        class_index_[root] = static_cast<int>(classes_.size());
        classes_.emplace_back();
      }
      classes_[class_index_[root]].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      int root = ds.find(static_cast<int>(i));
      rep_[i] = rep_[root];
      class_index_[i] = class_index_[root];
    }
  }

  // Canonical representative: the minimal member of x's class.
  int representative(int x) const { return rep_[x]; }

  // Index of x's class in classes().
  int class_of(int x) const { return class_index_[x]; }

  bool same(int a, int b) const { return rep_[a] == rep_[b]; }

  const std::vector<std::vector<int>>& classes() const { return classes_; }

  const std::vector<int>& members(int class_idx) const { return classes_[class_idx]; }

  std::size_t class_count() const { return classes_.size(); }

  std::size_t universe_size() const { return rep_.size(); }

 private:
  std::vector<int> rep_;
  std::vector<int> class_index_;
  std::vector<std::vector<int>> classes_;
};

}  // namespace sgpd

#endif  // SGPD_PARTITION_HPP_
