#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pennantwebs/setpartition.hpp"

namespace pennantwebs {

namespace detail {

// Simultaneous swap of the values k and k+1 wherever the result is still
// increasing: a k becomes k+1 unless a box holding k+1 shares an edge with
// it, and symmetrically. All adjacency tests read the snapshot, not the
// partially rewritten grid.
inline void grid_tau(std::vector<std::vector<int>>& grid, int k) {
  auto value_at = [&](int r, int c) -> int {
    if (r < 0 || r >= static_cast<int>(grid.size())) return 0;
    if (c < 0 || c >= static_cast<int>(grid[r].size())) return 0;
    return grid[r][c];
  };
  auto has_neighbor = [&](int r, int c, int v) {
    return value_at(r - 1, c) == v || value_at(r + 1, c) == v || value_at(r, c - 1) == v ||
           value_at(r, c + 1) == v;
  };
  std::vector<std::pair<int, int>> to_up, to_down;
  for (int r = 0; r < static_cast<int>(grid.size()); ++r)
    for (int c = 0; c < static_cast<int>(grid[r].size()); ++c) {
      if (grid[r][c] == k && !has_neighbor(r, c, k + 1)) to_up.emplace_back(r, c);
      if (grid[r][c] == k + 1 && !has_neighbor(r, c, k)) to_down.emplace_back(r, c);
    }
  for (auto [r, c] : to_up) grid[r][c] = k + 1;
  for (auto [r, c] : to_down) grid[r][c] = k;
}

inline void grid_promotion(std::vector<std::vector<int>>& grid, int q) {
  for (int k = 1; k < q; ++k) grid_tau(grid, k);
}

inline void grid_evacuation(std::vector<std::vector<int>>& grid, int q) {
  for (int j = q; j >= 2; --j)
    for (int k = 1; k < j; ++k) grid_tau(grid, k);
}

}  // namespace detail

// A standard Young tableau: left-justified rows of weakly decreasing length
// filled bijectively with {1..n}, strictly increasing along rows and columns.
class StandardTableau {
 public:
  explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("empty tableau");
    int n = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) throw std::invalid_argument("empty tableau row");
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw std::invalid_argument("row lengths must weakly decrease");
      n += static_cast<int>(rows_[r].size());
    }
    std::vector<bool> seen(n, false);
    for (size_t r = 0; r < rows_.size(); ++r)
      for (size_t c = 0; c < rows_[r].size(); ++c) {
        const int v = rows_[r][c];
        if (v < 1 || v > n || seen[v - 1])
          throw std::invalid_argument("filling must use {1..n} bijectively");
        seen[v - 1] = true;
        if (c > 0 && rows_[r][c - 1] >= v) throw std::invalid_argument("rows must increase");
        if (r > 0 && rows_[r - 1][c] >= v) throw std::invalid_argument("columns must increase");
      }
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::vector<int> shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
  }

  int size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  int column_count() const { return static_cast<int>(rows_[0].size()); }

  // Entries of column j (0-based), top to bottom.
  std::vector<int> column(int j) const {
    std::vector<int> col;
    for (const auto& r : rows_)
      if (j < static_cast<int>(r.size())) col.push_back(r[j]);
    return col;
  }

  std::string to_string() const {
    std::string s;
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r) s += ';';
      for (size_t c = 0; c < rows_[r].size(); ++c) {
        if (c) s += ',';
        s += std::to_string(rows_[r][c]);
      }
    }
    return s;
  }

  static StandardTableau parse(const std::string& text) {
    return StandardTableau(parse_rows(text));
  }

  static std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, ';')) {
      std::vector<int> row;
      std::stringstream rs(row_text);
      std::string item;
      while (std::getline(rs, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad tableau entry: " + item);
        row.push_back(v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
  }

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
  bool operator!=(const StandardTableau& o) const { return !(*this == o); }
  bool operator<(const StandardTableau& o) const { return rows_ < o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

// All standard tableaux of the given shape, by placing 1..n into addable
// corners top to bottom.
inline std::vector<StandardTableau> enumerate_syt(const std::vector<int>& shape) {
  if (shape.empty()) throw std::invalid_argument("empty shape");
  for (size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1) throw std::invalid_argument("shape parts must be positive");
    if (i > 0 && shape[i] > shape[i - 1]) throw std::invalid_argument("shape must weakly decrease");
  }
  int n = 0;
  for (int part : shape) n += part;

  std::vector<std::vector<int>> rows(shape.size());
  std::vector<int> filled(shape.size(), 0);
  std::vector<StandardTableau> out;
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.emplace_back(rows);
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] >= shape[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      rows[r].push_back(v);
      ++filled[r];
      place(v + 1);
      --filled[r];
      rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

// A packed increasing tableau of two-row rectangular shape (m, m): strictly
// increasing rows and columns, entries exactly {1..q} with q the maximum.
class IncreasingTableau {
 public:
  IncreasingTableau(std::vector<int> top, std::vector<int> bottom)
      : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.empty() || top_.size() != bottom_.size())
      throw std::invalid_argument("increasing tableau needs two rows of equal positive length");
    q_ = 0;
    for (size_t c = 0; c < top_.size(); ++c) {
      if (top_[c] < 1 || bottom_[c] < 1) throw std::invalid_argument("entries must be positive");
      if (c > 0 && (top_[c] <= top_[c - 1] || bottom_[c] <= bottom_[c - 1]))
        throw std::invalid_argument("rows must strictly increase");
      if (bottom_[c] <= top_[c]) throw std::invalid_argument("columns must strictly increase");
      q_ = std::max({q_, top_[c], bottom_[c]});
    }
    std::vector<int> count(q_ + 1, 0);
    for (int v : top_) ++count[v];
    for (int v : bottom_) ++count[v];
    for (int v = 1; v <= q_; ++v)
      if (count[v] < 1 || count[v] > 2)
        throw std::invalid_argument("tableau must be packed with each value used once or twice");
  }

  int width() const { return static_cast<int>(top_.size()); }
  int max_entry() const { return q_; }
  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }

  std::string to_string() const {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
      }
      return s;
    };
    return join(top_) + ";" + join(bottom_);
  }

  static IncreasingTableau parse(const std::string& text) {
    auto rows = StandardTableau::parse_rows(text);
    if (rows.size() != 2) throw std::invalid_argument("increasing tableau text needs two rows");
    return IncreasingTableau(std::move(rows[0]), std::move(rows[1]));
  }

  bool operator==(const IncreasingTableau& o) const { return top_ == o.top_ && bottom_ == o.bottom_; }
  bool operator!=(const IncreasingTableau& o) const { return !(*this == o); }
  bool operator<(const IncreasingTableau& o) const {
    return std::tie(top_, bottom_) < std::tie(o.top_, o.bottom_);
  }

 private:
  std::vector<int> top_, bottom_;
  int q_;
};

inline IncreasingTableau tau(const IncreasingTableau& t, int k) {
  if (k < 1 || k >= t.max_entry()) throw std::invalid_argument("tau needs 1 <= k < q");
  std::vector<std::vector<int>> grid = {t.top(), t.bottom()};
  detail::grid_tau(grid, k);
  return IncreasingTableau(std::move(grid[0]), std::move(grid[1]));
}

// psi^q = tau_{q-1} o ... o tau_2 o tau_1, applied rightmost first.
inline IncreasingTableau k_promotion(const IncreasingTableau& t) {
  std::vector<std::vector<int>> grid = {t.top(), t.bottom()};
  detail::grid_promotion(grid, t.max_entry());
  return IncreasingTableau(std::move(grid[0]), std::move(grid[1]));
}

// eps^q = psi^1 o ... o psi^{q-1} o psi^q, applied rightmost first.
inline IncreasingTableau k_evacuation(const IncreasingTableau& t) {
  std::vector<std::vector<int>> grid = {t.top(), t.bottom()};
  detail::grid_evacuation(grid, t.max_entry());
  return IncreasingTableau(std::move(grid[0]), std::move(grid[1]));
}

// The same dynamics on standard tableaux of arbitrary partition shape.
inline StandardTableau tau_syt(const StandardTableau& t, int k) {
  if (k < 1 || k >= t.size()) throw std::invalid_argument("tau needs 1 <= k < n");
  auto grid = t.rows();
  detail::grid_tau(grid, k);
  return StandardTableau(std::move(grid));
}

inline StandardTableau k_promotion_syt(const StandardTableau& t) {
  auto grid = t.rows();
  detail::grid_promotion(grid, t.size());
  return StandardTableau(std::move(grid));
}

inline StandardTableau k_evacuation_syt(const StandardTableau& t) {
  auto grid = t.rows();
  detail::grid_evacuation(grid, t.size());
  return StandardTableau(std::move(grid));
}

// All packed increasing tableaux of shape (m, m) with maximum entry q,
// assigning each value in turn to the next free top slot, bottom slot, or
// both.
inline std::vector<IncreasingTableau> enumerate_increasing(int q, int m) {
  if (m < 1 || q <= m || q > 2 * m)
    throw std::invalid_argument("enumerate_increasing needs m < q <= 2m");
  std::vector<int> top, bottom;
  std::vector<IncreasingTableau> out;
  std::function<void(int)> place = [&](int v) {
    if (v > q) {
      if (static_cast<int>(top.size()) == m && static_cast<int>(bottom.size()) == m)
        out.emplace_back(top, bottom);
      return;
    }
    const int t = static_cast<int>(top.size());
    const int b = static_cast<int>(bottom.size());
    if (t < m) {
      top.push_back(v);
      place(v + 1);
      top.pop_back();
    }
    if (b < t) {
      bottom.push_back(v);
      place(v + 1);
      bottom.pop_back();
    }
    if (t < m && b < t) {
      top.push_back(v);
      bottom.push_back(v);
      place(v + 1);
      bottom.pop_back();
      top.pop_back();
    }
  };
  place(1);
  return out;
}

// Entries appearing twice, one per row.
inline std::vector<int> doubled_entries(const IncreasingTableau& t) {
  std::vector<int> twice;
  for (int v : t.top())
    if (std::binary_search(t.bottom().begin(), t.bottom().end(), v)) twice.push_back(v);
  return twice;
}

// The bijection onto standard Young tableaux of pennant shape: delete the
// doubled entries A from the top row, delete their right neighbours B from
// the bottom row, and append B to the bottom of column 1.
inline StandardTableau inc_to_syt(const IncreasingTableau& t) {
  const std::vector<int> a = doubled_entries(t);
  std::vector<int> b;
  const auto& bottom = t.bottom();
  for (size_t c = 0; c + 1 < bottom.size(); ++c)
    if (std::binary_search(a.begin(), a.end(), bottom[c])) b.push_back(bottom[c + 1]);

  std::vector<int> row1, row2;
  for (int v : t.top())
    if (!std::binary_search(a.begin(), a.end(), v)) row1.push_back(v);
  for (int v : bottom)
    if (!std::binary_search(b.begin(), b.end(), v)) row2.push_back(v);

  std::vector<std::vector<int>> rows = {row1, row2};
  for (int v : b) rows.push_back({v});
  return StandardTableau(std::move(rows));
}

inline IncreasingTableau syt_to_inc(const StandardTableau& u) {
  const auto& rows = u.rows();
  if (rows.size() < 2 || rows[0].size() != rows[1].size())
    throw std::invalid_argument("expected a pennant-shaped tableau");
  std::vector<int> b;
  for (size_t r = 2; r < rows.size(); ++r) {
    if (rows[r].size() != 1) throw std::invalid_argument("expected a pennant-shaped tableau");
    b.push_back(rows[r][0]);
  }
  std::sort(b.begin(), b.end());

  std::vector<int> bottom = rows[1];
  bottom.insert(bottom.end(), b.begin(), b.end());
  std::sort(bottom.begin(), bottom.end());

  std::vector<int> a;
  for (size_t c = 0; c + 1 < bottom.size(); ++c)
    if (std::binary_search(b.begin(), b.end(), bottom[c + 1])) a.push_back(bottom[c]);
  if (a.size() != b.size())
    throw std::invalid_argument("tableau is not in the image of the pennant bijection");

  std::vector<int> top = rows[0];
  top.insert(top.end(), a.begin(), a.end());
  std::sort(top.begin(), top.end());
  return IncreasingTableau(std::move(top), std::move(bottom));
}

// The bijection onto noncrossing partitions without singletons: entries seen
// only in the top row are block minima, only in the bottom row block maxima,
// and doubled entries are interior.
inline SetPartition inc_to_partition(const IncreasingTableau& t) {
  const std::vector<int> middles = doubled_entries(t);
  std::vector<int> minima, maxima;
  for (int v : t.top())
    if (!std::binary_search(middles.begin(), middles.end(), v)) minima.push_back(v);
  for (int v : t.bottom())
    if (!std::binary_search(middles.begin(), middles.end(), v)) maxima.push_back(v);
  return noncrossing_completion(t.max_entry(), minima, middles, maxima);
}

inline IncreasingTableau partition_to_inc(const SetPartition& pi) {
  if (pi.has_singleton())
    throw std::invalid_argument("the tableau bijection needs a singleton-free partition");
  if (!is_noncrossing(pi))
    throw std::invalid_argument("the tableau bijection needs a noncrossing partition");
  const BlockRoles roles = block_roles(pi);
  std::vector<int> top = roles.minima, bottom = roles.maxima;
  top.insert(top.end(), roles.middles.begin(), roles.middles.end());
  bottom.insert(bottom.end(), roles.middles.begin(), roles.middles.end());
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  return IncreasingTableau(std::move(top), std::move(bottom));
}

// Promotion orbit partition of Inc^q(m,m), deterministic: seeds are taken in
// enumeration order, each orbit listed in promotion order from its seed.
inline std::vector<std::vector<IncreasingTableau>> promotion_orbits(int q, int m) {
  std::vector<std::vector<IncreasingTableau>> orbits;
  std::set<IncreasingTableau> visited;
  for (const auto& seed : enumerate_increasing(q, m)) {
    if (visited.count(seed)) continue;
    std::vector<IncreasingTableau> orbit;
    IncreasingTableau cur = seed;
    do {
      visited.insert(cur);
      orbit.push_back(cur);
      cur = k_promotion(cur);
    } while (!(cur == seed));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace pennantwebs
