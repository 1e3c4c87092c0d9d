#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pennantwebs/polynomial.hpp"
#include "pennantwebs/setpartition.hpp"

namespace pennantwebs {

class SingletonBlockError : public std::invalid_argument {
 public:
  explicit SingletonBlockError(const std::string& what) : std::invalid_argument(what) {}
};

struct Cell {
  int row;    // 1-based
  int col;    // 0-based column position
  int value;
};

// Inversions of the row reading word (left to right, top to bottom): pairs
// read out of increasing order. Same-column pairs can be excluded, which is
// the convention for tableaux with permuted column entries.
inline long long reading_word_inversions(std::vector<Cell> cells, bool skip_same_column) {
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  long long inv = 0;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j) {
      if (skip_same_column && cells[i].col == cells[j].col) continue;
      if (cells[i].value > cells[j].value) ++inv;
    }
  return inv;
}

// A jellyfish tableau for an ordered list of blocks: rows 1 and 2 hold the
// two smallest elements of every block, each lower row holds exactly one
// entry, and every column lists its block in increasing order. The tableau
// is determined by the word assigning lower rows 3,4,... to columns.
class JellyfishTableau {
 public:
  JellyfishTableau(std::vector<std::vector<int>> ordered_blocks, std::vector<int> word)
      : blocks_(std::move(ordered_blocks)), word_(std::move(word)) {
    size_t extras = 0;
    for (size_t j = 0; j < blocks_.size(); ++j) {
      const auto& b = blocks_[j];
      if (b.size() < 2) throw SingletonBlockError("jellyfish tableaux need blocks of size >= 2");
      if (!std::is_sorted(b.begin(), b.end()) ||
          std::adjacent_find(b.begin(), b.end()) != b.end())
        throw std::invalid_argument("block must be strictly increasing");
      extras += b.size() - 2;
    }
    if (word_.size() != extras)
      throw std::invalid_argument("word length must match the number of lower-row entries");
    std::vector<size_t> used(blocks_.size(), 0);
    for (int j : word_) {
      if (j < 0 || j >= static_cast<int>(blocks_.size()))
        throw std::invalid_argument("word entry out of range");
      ++used[j];
    }
    for (size_t j = 0; j < blocks_.size(); ++j)
      if (used[j] != blocks_[j].size() - 2)
        throw std::invalid_argument("word multiplicities must match block sizes");
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& word() const { return word_; }
  int column_count() const { return static_cast<int>(blocks_.size()); }
  int row_count() const { return 2 + static_cast<int>(word_.size()); }

  // 1-based rows occupied by column j, in increasing order.
  std::vector<int> row_set(int j) const {
    std::vector<int> rows = {1, 2};
    for (size_t t = 0; t < word_.size(); ++t)
      if (word_[t] == j) rows.push_back(3 + static_cast<int>(t));
    return rows;
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    std::vector<size_t> next(blocks_.size(), 0);
    for (int j = 0; j < column_count(); ++j) {
      out.push_back({1, j, blocks_[j][0]});
      out.push_back({2, j, blocks_[j][1]});
      next[j] = 2;
    }
    for (size_t t = 0; t < word_.size(); ++t) {
      const int j = word_[t];
      out.push_back({3 + static_cast<int>(t), j, blocks_[j][next[j]++]});
    }
    return out;
  }

  long long inversion_number() const { return reading_word_inversions(cells(), false); }
  int sign() const { return inversion_number() % 2 == 0 ? 1 : -1; }

  bool operator==(const JellyfishTableau& o) const {
    return blocks_ == o.blocks_ && word_ == o.word_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> word_;
};

// All jellyfish tableaux for the blocks in the given order: one per multiset
// permutation of the column labels over the lower rows, in lexicographic
// word order.
inline std::vector<JellyfishTableau> enumerate_jellyfish_ordered(
    const std::vector<std::vector<int>>& ordered_blocks) {
  std::vector<int> word;
  for (size_t j = 0; j < ordered_blocks.size(); ++j) {
    if (ordered_blocks[j].size() < 2)
      throw SingletonBlockError("no jellyfish tableaux for a partition with a singleton block");
    word.insert(word.end(), ordered_blocks[j].size() - 2, static_cast<int>(j));
  }
  std::sort(word.begin(), word.end());
  std::vector<JellyfishTableau> out;
  do {
    out.emplace_back(ordered_blocks, word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

inline std::vector<JellyfishTableau> enumerate_jellyfish(const SetPartition& pi) {
  if (pi.has_singleton())
    throw SingletonBlockError("no jellyfish tableaux for a partition with a singleton block");
  return enumerate_jellyfish_ordered(pi.blocks());
}

inline long long inversion_number(const JellyfishTableau& t) { return t.inversion_number(); }
inline int sign(const JellyfishTableau& t) { return t.sign(); }

// A tableau obtained from a jellyfish tableau by reordering the set of
// columns (cells travel with their column) and/or permuting entries within
// columns. Only its sign is of interest; inversions ignore same-column pairs.
struct BarredColumn {
  std::vector<int> rows;     // occupied rows, increasing
  std::vector<int> entries;  // parallel to rows, any order
};

struct BarredTableau {
  std::vector<BarredColumn> columns;

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].rows.size() != columns[j].entries.size())
        throw std::invalid_argument("column rows/entries mismatch");
      for (size_t t = 0; t < columns[j].rows.size(); ++t)
        out.push_back({columns[j].rows[t], static_cast<int>(j), columns[j].entries[t]});
    }
    return out;
  }
};

inline BarredTableau to_barred(const JellyfishTableau& t) {
  BarredTableau out;
  for (int j = 0; j < t.column_count(); ++j) {
    BarredColumn col;
    col.rows = t.row_set(j);
    col.entries = t.blocks()[j];
    out.columns.push_back(std::move(col));
  }
  return out;
}

inline long long inversion_number_barred(const BarredTableau& t) {
  return reading_word_inversions(t.cells(), true);
}

inline int sign_barred(const BarredTableau& t) {
  return inversion_number_barred(t) % 2 == 0 ? 1 : -1;
}

// J(T): the product over blocks of the minor on the block's occupied rows
// and its elements as columns.
inline Polynomial jelly_product(const JellyfishTableau& t) {
  Polynomial prod = Polynomial::constant(1);
  for (int j = 0; j < t.column_count(); ++j) prod = prod * sym_minor(t.row_set(j), t.blocks()[j]);
  return prod;
}

struct WebInvariant {
  SetPartition pi;
  Polynomial poly;
};

// [pi] = sum over jellyfish tableaux of sgn(T) J(T); zero when pi has a
// singleton block. Independent of the block ordering convention.
inline WebInvariant web_invariant(const SetPartition& pi) {
  if (pi.has_singleton()) return {pi, Polynomial()};
  Polynomial sum;
  for (const auto& t : enumerate_jellyfish(pi)) {
    Polynomial contrib = jelly_product(t);
    sum += t.sign() == 1 ? contrib : -contrib;
  }
  return {pi, std::move(sum)};
}

}  // namespace pennantwebs
