#pragma once

// Independent reference implementations used to pin expected values in the
// test suites. These deliberately avoid the code paths they are checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pennantwebs/polynomial.hpp"
#include "pennantwebs/setpartition.hpp"

namespace oracles {

using pennantwebs::Monomial;
using pennantwebs::Polynomial;

// Plain recursive cofactor expansion along the first row, no memoization.
inline Polynomial naive_determinant(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return Polynomial::variable(rows[0], cols[0]);
  Polynomial det;
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Polynomial minor = naive_determinant(sub_rows, sub_cols);
    Polynomial entry = Polynomial::variable(rows[0], cols[j]);
    det += (j % 2 == 0) ? entry * minor : -(entry * minor);
  }
  return det;
}

// Dense exponent vector in explicit ranking order (row 1 ascending, row 2
// descending, rows >= 3 ascending) for a brute-force lexicographic maximum.
inline std::vector<int> dense_exponents(const Monomial& m, int max_row, int max_col) {
  std::vector<int> ranking;
  for (int c = 1; c <= max_col; ++c) ranking.push_back(pennantwebs::var_rank(1, c));
  for (int c = max_col; c >= 1; --c) ranking.push_back(pennantwebs::var_rank(2, c));
  for (int r = 3; r <= max_row; ++r)
    for (int c = 1; c <= max_col; ++c) ranking.push_back(pennantwebs::var_rank(r, c));

  std::vector<int> exps(ranking.size(), 0);
  for (const auto& [rank, exp] : m.factors()) {
    auto it = std::find(ranking.begin(), ranking.end(), rank);
    exps[it - ranking.begin()] = exp;
  }
  return exps;
}

inline Monomial brute_force_lex_max(const Polynomial& p, int max_row, int max_col) {
  const auto& terms = p.terms();
  size_t best = 0;
  std::vector<int> best_exps = dense_exponents(terms[0].first, max_row, max_col);
  for (size_t i = 1; i < terms.size(); ++i) {
    std::vector<int> exps = dense_exponents(terms[i].first, max_row, max_col);
    if (std::lexicographical_compare(best_exps.begin(), best_exps.end(), exps.begin(), exps.end())) {
      best = i;
      best_exps = std::move(exps);
    }
  }
  return terms[best].first;
}

// Literal quadruple condition a < b < c < d with a,c in one block, b,d in
// the other.
inline bool brute_force_crossing(const pennantwebs::SetPartition& pi) {
  const int n = pi.n();
  std::vector<int> block_of(n + 1, -1);
  for (size_t j = 0; j < pi.blocks().size(); ++j)
    for (int v : pi.blocks()[j]) block_of[v] = static_cast<int>(j);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
              block_of[a] != block_of[b])
            return true;
  return false;
}

inline unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Frame-Robinson-Thrall hook length count of standard tableaux.
inline unsigned long long hook_length_count(const std::vector<int>& shape) {
  int n = 0;
  for (int part : shape) n += part;
  std::vector<int> conj(shape.empty() ? 0 : shape[0], 0);
  for (size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) ++conj[c];
  unsigned long long hooks = 1;
  for (size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c)
      hooks *= static_cast<unsigned long long>(shape[r] - c + conj[c] - static_cast<int>(r) - 1);
  return factorial(n) / hooks;
}

inline long long word_inversions(const std::vector<int>& word) {
  long long inv = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  return inv;
}

// Dense exact Gaussian elimination: is the target a rational combination of
// the given polynomials? Independent of the triangular expansion path.
inline bool in_rational_span(const std::vector<Polynomial>& columns, const Polynomial& target) {
  std::map<Monomial, size_t, pennantwebs::MonomialLess> row_of;
  auto row_index = [&](const Monomial& m) {
    return row_of.emplace(m, row_of.size()).first->second;
  };
  for (const auto& p : columns)
    for (const auto& t : p.terms()) row_index(t.first);
  for (const auto& t : target.terms()) row_index(t.first);

  const size_t rows = row_of.size(), cols = columns.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1, 0));
  for (size_t j = 0; j < cols; ++j)
    for (const auto& t : columns[j].terms()) a[row_index(t.first)][j] = mpq_class(t.second);
  for (const auto& t : target.terms()) a[row_index(t.first)][cols] = mpq_class(t.second);

  size_t pivot_row = 0;
  for (size_t j = 0; j < cols && pivot_row < rows; ++j) {
    size_t p = pivot_row;
    while (p < rows && a[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][j] == 0) continue;
      const mpq_class f = a[r][j] / a[pivot_row][j];
      for (size_t c = j; c <= cols; ++c) a[r][c] -= f * a[pivot_row][c];
    }
    ++pivot_row;
  }
  for (size_t r = pivot_row; r < rows; ++r)
    if (a[r][cols] != 0) return false;
  return true;
}

// Small random polynomials for ring-axiom checks.
inline Polynomial random_polynomial(std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> nfactors(0, 3);
  std::uniform_int_distribution<int> row(1, 3), col(1, 4), exp(1, 2), coeff(-9, 9);
  std::vector<Polynomial::Term> terms;
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Factor> factors;
    const int fcount = nfactors(rng);
    for (int f = 0; f < fcount; ++f)
      factors.emplace_back(pennantwebs::var_rank(row(rng), col(rng)), exp(rng));
    terms.emplace_back(Monomial::from_factors(std::move(factors)), mpz_class(coeff(rng)));
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace oracles
