#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "dualcanon/errors.hpp"

namespace dualcanon {

/// Strictly increasing set of 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> xs) : v_(xs) { normalize(); }
  explicit IndexSet(std::vector<int> xs) : v_(std::move(xs)) { normalize(); }

  static IndexSet range(int lo, int hi) {  // [lo, hi], empty if lo > hi
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet(std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  bool contains(int i) const {
    return std::binary_search(v_.begin(), v_.end(), i);
  }
  int operator[](int k) const { return v_[k]; }  // 0-based position
  const std::vector<int>& values() const { return v_; }

  void insert(int i) {
    v_.push_back(i);
    normalize();
  }

  /// Complement within [1, n].
  IndexSet complement(int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (!contains(i)) out.push_back(i);
    return IndexSet(std::move(out));
  }

  void check_bounds(int n) const {
    for (int i : v_)
      if (i < 1 || i > n) throw IndexOutOfRange();
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.v_ == b.v_;
  }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    for (int i : v_)
      if (i < 1) throw IndexOutOfRange();
  }
  std::vector<int> v_;
};

}  // namespace dualcanon
