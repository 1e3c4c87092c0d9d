#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pennantwebs/jellyfish.hpp"
#include "pennantwebs/tableaux.hpp"

namespace pennantwebs {

class NotInSpanError : public std::runtime_error {
 public:
  explicit NotInSpanError(const std::string& what) : std::runtime_error(what) {}
};

// The pennant shape (d, d, 1^ell) on n = 2d + ell boxes; its conjugate is
// (ell+2, 2^{d-1}), so the generic matrix has ell + 2 rows.
struct PennantShape {
  int d;
  int ell;

  PennantShape(int d_, int ell_) : d(d_), ell(ell_) {
    if (d < 2 || ell < 0) throw std::invalid_argument("pennant shape needs d >= 2, ell >= 0");
  }

  static PennantShape for_params(int n, int d) {
    if (d < 2 || 2 * d > n) throw std::invalid_argument("pennant shape needs 2 <= d <= n/2");
    return PennantShape(d, n - 2 * d);
  }

  int n() const { return 2 * d + ell; }
  int matrix_rows() const { return ell + 2; }

  std::vector<int> shape() const {
    std::vector<int> s = {d, d};
    s.insert(s.end(), ell, 1);
    return s;
  }
};

// The five-term recurrence: with {1..n} split into A, B, singletons I, J
// and any further fixed blocks,
//   [{A u B, I u J}] + [{A u I, B u J}] + [{A u J, B u I}]
//     = [{A u I u J, B}] + [{A, B u I u J}],
// every bracket carrying the fixed blocks. Returns LHS - RHS, which is
// identically zero.
inline Polynomial five_term_residual(int n, const std::vector<int>& a, const std::vector<int>& b,
                                     int i, int j,
                                     const std::vector<std::vector<int>>& fixed_blocks = {}) {
  if (a.empty() || b.empty()) throw std::invalid_argument("five-term needs nonempty A and B");
  auto bracket = [&](std::vector<std::vector<int>> parts) {
    for (const auto& f : fixed_blocks) parts.push_back(f);
    return web_invariant(SetPartition(n, std::move(parts))).poly;
  };
  auto join = [](std::vector<int> x, std::vector<int> y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };

  Polynomial lhs = bracket({join(a, b), {i, j}});
  lhs += bracket({join(a, {i}), join(b, {j})});
  lhs += bracket({join(a, {j}), join(b, {i})});
  Polynomial rhs = bracket({join(a, {i, j}), b});
  rhs += bracket({a, join(b, {i, j})});
  return lhs - rhs;
}

// w . [pi], acting on columns of the generic matrix. Equals sgn(w) [w . pi].
inline Polynomial sn_act(const Permutation& w, const WebInvariant& v) {
  return relabel_columns(v.poly, w);
}

inline Polynomial sn_act(const Permutation& w, const Polynomial& p) {
  return relabel_columns(p, w);
}

struct BasisElement {
  WebInvariant invariant;
  Monomial lead;

  const SetPartition& pi() const { return invariant.pi; }
  const Polynomial& poly() const { return invariant.poly; }
};

using WebBasis = std::vector<BasisElement>;

// The web basis of the pennant Specht module: one invariant per noncrossing
// singleton-free partition, sorted by strictly decreasing leading monomial.
inline WebBasis build_basis(int n, int d) {
  PennantShape::for_params(n, d);
  WebBasis basis;
  for (const auto& pi : enumerate_partitions(n, d, /*no_singletons=*/true, /*noncrossing_only=*/true)) {
    WebInvariant inv = web_invariant(pi);
    Monomial lead = inv.poly.leading_monomial();
    basis.push_back({std::move(inv), std::move(lead)});
  }
  std::sort(basis.begin(), basis.end(), [](const BasisElement& x, const BasisElement& y) {
    return monomial_compare(x.lead, y.lead) > 0;
  });
  for (size_t i = 0; i + 1 < basis.size(); ++i)
    if (basis[i].lead == basis[i + 1].lead)
      throw std::logic_error("leading monomials of the web basis must be pairwise distinct");
  return basis;
}

// Exact coefficients over the web basis, kept in basis order.
struct BasisExpansion {
  std::vector<mpq_class> coeffs;

  bool is_integral() const {
    for (const auto& c : coeffs)
      if (c.get_den() != 1) return false;
    return true;
  }
};

// Triangular elimination against the strictly decreasing leading monomials:
// repeatedly cancel the residual's leading term with the unique basis element
// sharing it. A leading monomial matching no basis element means the input
// lies outside the span.
inline BasisExpansion expand_in_basis(const QPolynomial& p, const WebBasis& basis) {
  std::map<Monomial, size_t, MonomialLess> by_lead;
  for (size_t i = 0; i < basis.size(); ++i) by_lead.emplace(basis[i].lead, i);

  BasisExpansion out;
  out.coeffs.assign(basis.size(), mpq_class(0));
  QPolynomial residual = p;
  while (!residual.is_zero()) {
    auto it = by_lead.find(residual.leading_monomial());
    if (it == by_lead.end())
      throw NotInSpanError("polynomial is not in the span of the web basis (leading monomial " +
                           residual.leading_monomial().to_string() + ")");
    const BasisElement& b = basis[it->second];
    mpq_class c = residual.leading_coefficient() / mpq_class(b.poly().leading_coefficient());
    residual = residual - to_rational(b.poly()).scaled(c);
    out.coeffs[it->second] += c;
  }
  return out;
}

inline BasisExpansion expand_in_basis(const Polynomial& p, const WebBasis& basis) {
  return expand_in_basis(to_rational(p), basis);
}

// The standard-monomial invariant of a standard tableau: the product over
// columns of the top-justified minor on the column's entries.
inline Polynomial syt_invariant(const StandardTableau& t) {
  Polynomial prod = Polynomial::constant(1);
  for (int j = 0; j < t.column_count(); ++j) {
    const std::vector<int> col = t.column(j);
    std::vector<int> rows(col.size());
    for (size_t r = 0; r < col.size(); ++r) rows[r] = static_cast<int>(r) + 1;
    prod = prod * sym_minor(rows, col);
  }
  return prod;
}

using QMatrix = std::vector<std::vector<mpq_class>>;

inline QMatrix identity_matrix(size_t dim) {
  QMatrix m(dim, std::vector<mpq_class>(dim, 0));
  for (size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  const size_t dim = a.size();
  QMatrix out(dim, std::vector<mpq_class>(dim, 0));
  for (size_t i = 0; i < dim; ++i)
    for (size_t k = 0; k < dim; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < dim; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline mpq_class mat_trace(const QMatrix& m) {
  mpq_class t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// One nonzero entry per row and column, each +1 or -1.
inline bool is_signed_permutation(const QMatrix& m) {
  const size_t dim = m.size();
  std::vector<int> row_hits(dim, 0), col_hits(dim, 0);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      if (m[i][j] == 0) continue;
      if (m[i][j] != 1 && m[i][j] != -1) return false;
      ++row_hits[i];
      ++col_hits[j];
    }
  for (size_t i = 0; i < dim; ++i)
    if (row_hits[i] != 1 || col_hits[i] != 1) return false;
  return true;
}

// Matrix of w on the span of the web basis: column j expands w . [pi_j].
inline QMatrix action_matrix(const Permutation& w, const WebBasis& basis) {
  QMatrix m(basis.size(), std::vector<mpq_class>(basis.size(), 0));
  for (size_t j = 0; j < basis.size(); ++j) {
    const BasisExpansion e = expand_in_basis(sn_act(w, basis[j].invariant), basis);
    for (size_t i = 0; i < basis.size(); ++i) m[i][j] = e.coeffs[i];
  }
  return m;
}

inline QMatrix dihedral_matrix(const Permutation& w, int n, int d) {
  if (w.n() != n) throw std::invalid_argument("permutation size must match n");
  return action_matrix(w, build_basis(n, d));
}

inline int count_rotation_fixed_points(int n, int d, int k) {
  int count = 0;
  const Permutation rot_k = Permutation::long_cycle(n).power(k);
  for (const auto& pi : enumerate_partitions(n, d, true, true))
    if (apply_perm(rot_k, pi) == pi) ++count;
  return count;
}

}  // namespace pennantwebs
