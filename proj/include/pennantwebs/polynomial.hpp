#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pennantwebs/permutation.hpp"

namespace pennantwebs {

// Exact sparse multivariate polynomials in the entries x[r,c] of a generic
// matrix. Coefficients are exact integers (mpz) in all construction paths;
// the rational instantiation (mpq) is used only when solving.
//
// The term order ranks variables
//   x[1,1] > x[1,2] > ... > x[1,n] > x[2,n] > x[2,n-1] > ... > x[2,1] >
//   x[3,1] > ... > x[k,n],
// i.e. row 2 descending by column, every other row ascending, and induces
// the lexicographic order on monomials. Ranks are independent of n, so the
// order is consistent across ground-set sizes.

inline constexpr int kMaxIndex = 64;

inline int var_rank(int row, int col) {
  if (row < 1 || row > kMaxIndex || col < 1 || col > kMaxIndex)
    throw std::invalid_argument("variable index out of range: x[" + std::to_string(row) + "," +
                                std::to_string(col) + "]");
  if (row == 2) return kMaxIndex + (kMaxIndex - col);
  return (row - 1) * kMaxIndex + (col - 1);
}

inline int var_row(int rank) { return rank / kMaxIndex + 1; }

inline int var_col(int rank) {
  const int row = var_row(rank);
  return row == 2 ? 2 * kMaxIndex - rank : rank % kMaxIndex + 1;
}

inline std::string var_text(int rank) {
  return "x[" + std::to_string(var_row(rank)) + "," + std::to_string(var_col(rank)) + "]";
}

// A monomial is a finite map variable -> positive exponent, stored as
// (rank, exponent) pairs sorted by ascending rank (most significant first).
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;

  static Monomial variable(int row, int col) {
    Monomial m;
    m.factors_.emplace_back(var_rank(row, col), 1);
    return m;
  }

  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [rank, exp] : factors) {
      if (exp < 0) throw std::invalid_argument("negative exponent");
      if (exp == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == rank)
        m.factors_.back().second += exp;
      else
        m.factors_.emplace_back(rank, exp);
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  int exponent(int row, int col) const {
    const int rank = var_rank(row, col);
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{rank, 0});
    return (it != factors_.end() && it->first == rank) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      if (a.factors_[i].first < b.factors_[j].first)
        out.factors_.push_back(a.factors_[i++]);
      else if (a.factors_[i].first > b.factors_[j].first)
        out.factors_.push_back(b.factors_[j++]);
      else {
        out.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
        ++i, ++j;
      }
    }
    for (; i < a.factors_.size(); ++i) out.factors_.push_back(a.factors_[i]);
    for (; j < b.factors_.size(); ++j) out.factors_.push_back(b.factors_[j]);
    return out;
  }

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += '*';
      s += var_text(factors_[i].first);
      if (factors_[i].second != 1) s += "^" + std::to_string(factors_[i].second);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;
};

// Lexicographic comparison under the variable ranking: returns +1 if a > b,
// -1 if a < b, 0 if equal. At the most significant variable where the
// exponents differ, the larger exponent wins.
inline int monomial_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first < fb[j].first) return +1;
    if (fa[i].first > fb[j].first) return -1;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? +1 : -1;
    ++i, ++j;
  }
  if (i < fa.size()) return +1;
  if (j < fb.size()) return -1;
  return 0;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_compare(a, b) < 0; }
};

template <class Coeff>
class PolynomialT {
 public:
  using Term = std::pair<Monomial, Coeff>;

  PolynomialT() = default;

  static PolynomialT zero() { return PolynomialT(); }

  static PolynomialT constant(Coeff c) {
    PolynomialT p;
    if (c != 0) p.terms_.emplace_back(Monomial(), std::move(c));
    return p;
  }

  static PolynomialT term(Monomial m, Coeff c) {
    PolynomialT p;
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  static PolynomialT variable(int row, int col) { return term(Monomial::variable(row, col), Coeff(1)); }

  // Sorts descending, combines equal monomials, strips zeros.
  static PolynomialT from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return monomial_compare(a.first, b.first) > 0; });
    PolynomialT p;
    p.terms_.reserve(ts.size());
    for (auto& t : ts) {
      if (t.second == 0) continue;
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("leading monomial of the zero polynomial");
    return terms_.front().first;
  }

  const Coeff& leading_coefficient() const {
    if (terms_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return terms_.front().second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  friend PolynomialT operator+(const PolynomialT& a, const PolynomialT& b) { return merge(a, b, false); }
  friend PolynomialT operator-(const PolynomialT& a, const PolynomialT& b) { return merge(a, b, true); }

  PolynomialT operator-() const {
    PolynomialT p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  PolynomialT& operator+=(const PolynomialT& o) { return *this = *this + o; }
  PolynomialT& operator-=(const PolynomialT& o) { return *this = *this - o; }

  friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialT();
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) prod.emplace_back(ta.first * tb.first, ta.second * tb.second);
    return from_terms(std::move(prod));
  }

  // Multiplying every term by a fixed monomial preserves the term order.
  PolynomialT times_term(const Monomial& m, const Coeff& c) const {
    PolynomialT p;
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.emplace_back(t.first * m, t.second * c);
    return p;
  }

  PolynomialT scaled(const Coeff& c) const { return times_term(Monomial(), c); }

  bool operator==(const PolynomialT& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolynomialT& o) const { return !(*this == o); }

  // Canonical text form: terms descending, `{sign}{|coeff|}*x[r,c]^e*...`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const auto& [m, c] = terms_[i];
      if (i) s += ' ';
      s += (c < 0 ? '-' : '+');
      Coeff a = c < 0 ? Coeff(-c) : c;
      s += a.get_str();
      if (!m.is_unit()) s += "*" + m.to_string();
    }
    return s;
  }

 private:
  static PolynomialT merge(const PolynomialT& a, const PolynomialT& b, bool subtract) {
    PolynomialT out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const int cmp = monomial_compare(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back(b.terms_[j]);
        if (subtract) out.terms_.back().second = -out.terms_.back().second;
        ++j;
      } else {
        Coeff c = subtract ? Coeff(a.terms_[i].second - b.terms_[j].second)
                           : Coeff(a.terms_[i].second + b.terms_[j].second);
        if (c != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      out.terms_.push_back(b.terms_[j]);
      if (subtract) out.terms_.back().second = -out.terms_.back().second;
    }
    return out;
  }

  std::vector<Term> terms_;
};

using Polynomial = PolynomialT<mpz_class>;
using QPolynomial = PolynomialT<mpq_class>;

inline QPolynomial to_rational(const Polynomial& p) {
  std::vector<QPolynomial::Term> ts;
  ts.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) ts.emplace_back(m, mpq_class(c));
  return QPolynomial::from_terms(std::move(ts));
}

namespace detail {

// Leibniz expansion; used for sizes <= 4.
inline Polynomial det_leibniz(const std::vector<int>& rows, const std::vector<int>& cols) {
  const size_t s = rows.size();
  std::vector<int> perm(s);
  for (size_t i = 0; i < s; ++i) perm[i] = static_cast<int>(i);
  std::vector<Polynomial::Term> terms;
  do {
    int inv = 0;
    for (size_t a = 0; a < s; ++a)
      for (size_t b = a + 1; b < s; ++b)
        if (perm[a] > perm[b]) ++inv;
    Monomial m;
    for (size_t i = 0; i < s; ++i) m = m * Monomial::variable(rows[i], cols[perm[i]]);
    terms.emplace_back(std::move(m), mpz_class(inv % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(std::move(terms));
}

// Cofactor expansion along the first remaining row, with sub-minors over
// column subsets computed once and shared across branches.
inline Polynomial det_cofactor(const std::vector<int>& rows, const std::vector<int>& cols) {
  const int s = static_cast<int>(rows.size());
  std::vector<Polynomial> minors(size_t(1) << s);
  for (int j = 0; j < s; ++j)
    minors[size_t(1) << j] = Polynomial::variable(rows[s - 1], cols[j]);
  for (int t = 2; t <= s; ++t) {
    std::vector<Polynomial> next(size_t(1) << s);
    const int row = rows[s - t];
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      if (__builtin_popcount(mask) != t) continue;
      Polynomial acc;
      int pos = 0;
      for (int j = 0; j < s; ++j) {
        if (!(mask & (1u << j))) continue;
        const mpz_class sgn = pos % 2 == 0 ? 1 : -1;
        acc += minors[mask ^ (1u << j)].times_term(Monomial::variable(row, cols[j]), sgn);
        ++pos;
      }
      next[mask] = std::move(acc);
    }
    minors = std::move(next);
  }
  return minors[(size_t(1) << s) - 1];
}

}  // namespace detail

// Exact determinant of the generic submatrix on the given rows and columns.
// Rows and columns are oriented lists: an odd rearrangement negates the
// result and a repeated index gives zero.
inline Polynomial sym_minor(std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty() || rows.size() != cols.size())
    throw std::invalid_argument("sym_minor needs equally many rows and columns, at least one each");
  for (int r : rows)
    if (r < 1 || r > kMaxIndex) throw std::invalid_argument("sym_minor row index out of range");
  for (int c : cols)
    if (c < 1 || c > kMaxIndex) throw std::invalid_argument("sym_minor column index out of range");

  int sign = 1;
  auto sort_tracking_sign = [&sign](std::vector<int>& v) {
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b)
        if (v[a] > v[b]) {
          std::swap(v[a], v[b]);
          sign = -sign;
        }
  };
  sort_tracking_sign(rows);
  sort_tracking_sign(cols);
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    return Polynomial();

  Polynomial det = rows.size() <= 4 ? detail::det_leibniz(rows, cols) : detail::det_cofactor(rows, cols);
  return sign == 1 ? det : -det;
}

inline const Monomial& leading_monomial(const Polynomial& p) { return p.leading_monomial(); }

// The ring endomorphism x[r,c] -> x[r,w(c)]. Satisfies v.(w.p) = (v o w).p.
template <class Coeff>
PolynomialT<Coeff> relabel_columns(const PolynomialT<Coeff>& p, const Permutation& w) {
  std::vector<typename PolynomialT<Coeff>::Term> ts;
  ts.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [rank, exp] : m.factors())
      factors.emplace_back(var_rank(var_row(rank), w(var_col(rank))), exp);
    ts.emplace_back(Monomial::from_factors(std::move(factors)), c);
  }
  return PolynomialT<Coeff>::from_terms(std::move(ts));
}

}  // namespace pennantwebs
