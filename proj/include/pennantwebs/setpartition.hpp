#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pennantwebs/permutation.hpp"

namespace pennantwebs {

// A set partition of {1..n}. Blocks are kept canonical: each block sorted,
// blocks ordered by their minimum element. Web invariants do not depend on
// the ordering convention, so a fixed one keeps every output deterministic.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw std::invalid_argument("ground set must be nonempty");
    std::vector<bool> seen(n_, false);
    int count = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("empty block");
      std::sort(b.begin(), b.end());
      for (int v : b) {
        if (v < 1 || v > n_ || seen[v - 1])
          throw std::invalid_argument("blocks must partition {1..n}");
        seen[v - 1] = true;
        ++count;
      }
    }
    if (count != n_) throw std::invalid_argument("blocks must cover {1..n}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  bool has_singleton() const {
    for (const auto& b : blocks_)
      if (b.size() == 1) return true;
    return false;
  }

  // Text form: blocks separated by `|`, elements by `,`.
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += '|';
      for (size_t j = 0; j < blocks_[i].size(); ++j) {
        if (j) s += ',';
        s += std::to_string(blocks_[i][j]);
      }
    }
    return s;
  }

  // Parses the block text form; the ground-set size is the element count.
  static SetPartition parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string block_text;
    int n = 0;
    while (std::getline(ss, block_text, '|')) {
      std::vector<int> block;
      std::stringstream bs(block_text);
      std::string item;
      while (std::getline(bs, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad partition entry: " + item);
        block.push_back(v);
        ++n;
      }
      if (!block.empty()) blocks.push_back(std::move(block));
    }
    return SetPartition(n, std::move(blocks));
  }

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator!=(const SetPartition& o) const { return !(*this == o); }
  bool operator<(const SetPartition& o) const {
    return std::tie(n_, blocks_) < std::tie(o.n_, o.blocks_);
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// Two blocks cross iff some a < b < c < d has a,c in one block and b,d in
// the other; equivalently their merged membership sequence alternates at
// least four times.
inline bool blocks_cross(const std::vector<int>& x, const std::vector<int>& y) {
  size_t i = 0, j = 0;
  int runs = 0;
  int last = 0;  // 1 = x, 2 = y
  while (i < x.size() || j < y.size()) {
    int cur;
    if (j >= y.size() || (i < x.size() && x[i] < y[j])) {
      cur = 1;
      ++i;
    } else {
      cur = 2;
      ++j;
    }
    if (cur != last) {
      ++runs;
      last = cur;
    }
  }
  return runs >= 4;
}

inline bool is_noncrossing(const SetPartition& pi) {
  const auto& blocks = pi.blocks();
  for (size_t a = 0; a < blocks.size(); ++a)
    for (size_t b = a + 1; b < blocks.size(); ++b)
      if (blocks_cross(blocks[a], blocks[b])) return false;
  return true;
}

inline SetPartition apply_perm(const Permutation& w, const SetPartition& pi) {
  if (w.n() != pi.n()) throw std::invalid_argument("permutation and partition sizes differ");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pi.blocks().size());
  for (const auto& b : pi.blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(w(v));
    blocks.push_back(std::move(nb));
  }
  return SetPartition(pi.n(), std::move(blocks));
}

// rot is the action of the long cycle: i -> i-1, with 1 -> n.
inline SetPartition rotate(const SetPartition& pi) {
  return apply_perm(Permutation::long_cycle(pi.n()), pi);
}

// refl is the action of the long element: i -> n+1-i.
inline SetPartition reflect(const SetPartition& pi) {
  return apply_perm(Permutation::reversal(pi.n()), pi);
}

// All set partitions of {1..n} with exactly d blocks, optionally restricted
// to singleton-free and/or noncrossing ones, sorted by their canonical block
// lists.
inline std::vector<SetPartition> enumerate_partitions(int n, int d, bool no_singletons = false,
                                                      bool noncrossing_only = false) {
  if (n < 1 || d < 1 || d > n) throw std::invalid_argument("enumerate_partitions needs 1 <= d <= n");
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      if (static_cast<int>(blocks.size()) != d) return;
      SetPartition pi(n, blocks);
      if (no_singletons && pi.has_singleton()) return;
      if (noncrossing_only && !is_noncrossing(pi)) return;
      out.push_back(std::move(pi));
      return;
    }
    // Each remaining element can open at most one new block.
    if (static_cast<int>(blocks.size()) + (n - v + 1) < d) return;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      blocks[bi].push_back(v);
      place(v + 1);
      blocks[bi].pop_back();
    }
    if (static_cast<int>(blocks.size()) < d) {
      blocks.push_back({v});
      place(v + 1);
      blocks.pop_back();
    }
  };
  place(1);
  std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
    return a.blocks() < b.blocks();
  });
  return out;
}

struct BlockRoles {
  std::vector<int> minima;
  std::vector<int> middles;
  std::vector<int> maxima;
};

inline BlockRoles block_roles(const SetPartition& pi) {
  if (pi.has_singleton())
    throw std::invalid_argument("block roles are undefined for singleton blocks");
  BlockRoles roles;
  for (const auto& b : pi.blocks()) {
    roles.minima.push_back(b.front());
    roles.maxima.push_back(b.back());
    for (size_t i = 1; i + 1 < b.size(); ++i) roles.middles.push_back(b[i]);
  }
  std::sort(roles.minima.begin(), roles.minima.end());
  std::sort(roles.middles.begin(), roles.middles.end());
  std::sort(roles.maxima.begin(), roles.maxima.end());
  return roles;
}

// The unique noncrossing partition with the prescribed block minima, maxima
// and interior elements, built by a left-to-right stack scan: a minimum opens
// a block, a middle joins the top open block, a maximum closes it.
inline SetPartition noncrossing_completion(int n, const std::vector<int>& minima,
                                           const std::vector<int>& middles,
                                           const std::vector<int>& maxima) {
  if (minima.size() != maxima.size())
    throw std::invalid_argument("inconsistent roles: need equally many minima and maxima");
  std::vector<int> role(n + 1, 0);
  auto mark = [&](const std::vector<int>& v, int r) {
    for (int x : v) {
      if (x < 1 || x > n || role[x] != 0)
        throw std::invalid_argument("roles must partition {1..n}");
      role[x] = r;
    }
  };
  mark(minima, 1);
  mark(middles, 2);
  mark(maxima, 3);
  for (int x = 1; x <= n; ++x)
    if (role[x] == 0) throw std::invalid_argument("roles must cover {1..n}");

  std::vector<std::vector<int>> blocks;
  std::vector<size_t> stack;
  for (int x = 1; x <= n; ++x) {
    switch (role[x]) {
      case 1:
        stack.push_back(blocks.size());
        blocks.push_back({x});
        break;
      case 2:
        if (stack.empty())
          throw std::invalid_argument("inconsistent roles: middle element with no open block");
        blocks[stack.back()].push_back(x);
        break;
      case 3:
        if (stack.empty())
          throw std::invalid_argument("inconsistent roles: maximum with no open block");
        blocks[stack.back()].push_back(x);
        stack.pop_back();
        break;
    }
  }
  if (!stack.empty()) throw std::invalid_argument("inconsistent roles: unclosed block");
  return SetPartition(n, std::move(blocks));
}

}  // namespace pennantwebs
