#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace normcat {

/// A non-empty proper subset of {0,...,n-1}, members sorted ascending.
class Subset {
 public:
  Subset(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
    if (n_ < 2) throw std::invalid_argument("Subset: base set size must be at least 2");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw std::invalid_argument("Subset: must be non-empty");
    if (static_cast<int>(members_.size()) >= n_)
      throw std::invalid_argument("Subset: must be a proper subset");
    if (members_.front() < 0 || members_.back() >= n_)
      throw std::invalid_argument("Subset: member out of range");
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  int member(int i) const { return members_[i]; }

  bool contains(int x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  /// Position of x within the sorted member list; -1 when absent.
  int index_of(int x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) return -1;
    return static_cast<int>(it - members_.begin());
  }

  bool subset_of(const Subset& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(members_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }
  friend auto operator<=>(const Subset& a, const Subset& b) = default;

 private:
  int n_;
  std::vector<int> members_;
};

}  // namespace normcat
