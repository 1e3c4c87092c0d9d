#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pennantwebs/jellyfish.hpp"
#include "pennantwebs/setpartition.hpp"
#include "pennantwebs/tableaux.hpp"
#include "pennantwebs/webbasis.hpp"

namespace pennantwebs {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

using FiveTermVisitor = std::function<void(
    const std::vector<int>&, const std::vector<int>&, int, int, const std::vector<std::vector<int>>&)>;

// Every split of {1..n} into nonempty A, B, singletons i < j and fixed
// blocks, with {A, B} unordered (the recurrence is symmetric in both pairs).
inline void for_each_five_term_split(int n, const FiveTermVisitor& fn) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (v != i && v != j) rest.push_back(v);
      const int r = static_cast<int>(rest.size());
      for (int nblocks = 2; nblocks <= r; ++nblocks) {
        std::vector<std::vector<int>> blocks;
        std::function<void(int)> place = [&](int idx) {
          if (idx == r) {
            if (static_cast<int>(blocks.size()) != nblocks) return;
            for (size_t a = 0; a < blocks.size(); ++a)
              for (size_t b = a + 1; b < blocks.size(); ++b) {
                std::vector<std::vector<int>> fixed;
                for (size_t f = 0; f < blocks.size(); ++f)
                  if (f != a && f != b) fixed.push_back(blocks[f]);
                fn(blocks[a], blocks[b], i, j, fixed);
              }
            return;
          }
          if (static_cast<int>(blocks.size()) + (r - idx) < nblocks) return;
          for (size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(rest[idx]);
            place(idx + 1);
            blocks[bi].pop_back();
          }
          if (static_cast<int>(blocks.size()) < nblocks) {
            blocks.push_back({rest[idx]});
            place(idx + 1);
            blocks.pop_back();
          }
        };
        place(0);
      }
    }
}

inline void sample_five_term_splits(int n, int count, unsigned seed, const FiveTermVisitor& fn) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> point(1, n);
  for (int trial = 0; trial < count; ++trial) {
    int i = point(rng), j = point(rng);
    while (j == i) j = point(rng);
    if (i > j) std::swap(i, j);
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= n; ++v) {
      if (v == i || v == j) continue;
      std::uniform_int_distribution<size_t> slot(0, blocks.size());
      const size_t s = slot(rng);
      if (s == blocks.size())
        blocks.push_back({v});
      else
        blocks[s].push_back(v);
    }
    if (blocks.size() < 2) {
      --trial;
      continue;
    }
    std::uniform_int_distribution<size_t> pick(0, blocks.size() - 1);
    size_t a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    std::vector<std::vector<int>> fixed;
    for (size_t f = 0; f < blocks.size(); ++f)
      if (f != a && f != b) fixed.push_back(blocks[f]);
    fn(blocks[a], blocks[b], i, j, fixed);
  }
}

namespace detail {

inline std::vector<int> pennant_shape_vector(int n, int d) {
  std::vector<int> shape = {d, d};
  shape.insert(shape.end(), n - 2 * d, 1);
  return shape;
}

template <class Fn>
CheckResult run_check(const std::string& name, Fn&& body) {
  CheckResult result{name, true, ""};
  std::ostringstream detail;
  try {
    body(result.pass, detail);
  } catch (const std::exception& e) {
    result.pass = false;
    detail << "exception: " << e.what();
  }
  result.detail = detail.str();
  return result;
}

}  // namespace detail

// Property suite behind the `verify` command. Exhaustive bounds follow the
// per-property desk-scale caps; `n_max` lowers them uniformly.
inline std::vector<CheckResult> run_verification(int n_max) {
  using detail::pennant_shape_vector;
  using detail::run_check;
  std::vector<CheckResult> results;
  const auto cap = [n_max](int bound) { return std::min(n_max, bound); };

  results.push_back(run_check("minors match an independent cofactor expansion",
                              [&](bool& pass, std::ostringstream& detail) {
    long long checked = 0;
    for (int s = 1; s <= 5; ++s) {
      std::vector<int> rows, cols;
      for (int t = 1; t <= s; ++t) rows.push_back(t), cols.push_back(t + 1);
      Polynomial direct = sym_minor(rows, cols);
      Polynomial expanded;
      if (s == 1) {
        expanded = Polynomial::variable(rows[0], cols[0]);
      } else {
        for (int t = 0; t < s; ++t) {
          std::vector<int> sub_rows(rows.begin() + 1, rows.end());
          std::vector<int> sub_cols = cols;
          sub_cols.erase(sub_cols.begin() + t);
          const Polynomial cof =
              Polynomial::variable(rows[0], cols[t]) * sym_minor(sub_rows, sub_cols);
          expanded += t % 2 == 0 ? cof : -cof;
        }
      }
      pass = pass && direct == expanded;
      ++checked;
    }
    pass = pass && sym_minor({1, 2}, {4, 2}) == -sym_minor({1, 2}, {2, 4});
    pass = pass && sym_minor({1, 2}, {3, 3}).is_zero();
    detail << "sizes 1..5, " << checked << " expansions";
  }));

  results.push_back(run_check("column relabeling is a left group action",
                              [&](bool& pass, std::ostringstream& detail) {
    const int n = std::max(4, cap(6));
    const Polynomial p =
        sym_minor({1, 2}, {1, 3}) * sym_minor({1, 2}, {2, 4}) - sym_minor({1, 2, 3}, {1, 2, 3});
    std::mt19937 rng(7);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::shuffle(images.begin(), images.end(), rng);
      const Permutation w(images);
      std::shuffle(images.begin(), images.end(), rng);
      const Permutation v(images);
      pass = pass && relabel_columns(relabel_columns(p, w), v) == relabel_columns(p, v.compose(w));
    }
    detail << "25 pairs on n = " << n;
  }));

  results.push_back(run_check("noncrossing predicate, dihedral laws, completion round trip",
                              [&](bool& pass, std::ostringstream& detail) {
    long long partitions = 0;
    for (int n = 2; n <= cap(8); ++n)
      for (int d = 1; d <= n; ++d)
        for (const auto& pi : enumerate_partitions(n, d)) {
          ++partitions;
          SetPartition r = pi;
          for (int k = 0; k < n; ++k) r = rotate(r);
          pass = pass && r == pi && reflect(reflect(pi)) == pi;
          pass = pass && apply_perm(Permutation::reversal(n), pi) == reflect(pi);
          pass = pass && apply_perm(Permutation::long_cycle(n), pi) == rotate(pi);
        }
    for (int n = 4; n <= cap(10); ++n)
      for (int d = 2; 2 * d <= n; ++d)
        for (const auto& pi : enumerate_partitions(n, d, true, true)) {
          const BlockRoles roles = block_roles(pi);
          pass = pass &&
                 noncrossing_completion(n, roles.minima, roles.middles, roles.maxima) == pi;
        }
    detail << partitions << " partitions";
  }));

  results.push_back(run_check("partition counts match standard tableau counts",
                              [&](bool& pass, std::ostringstream& detail) {
    int families = 0;
    for (int n = 4; n <= cap(10); ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        pass = pass && enumerate_partitions(n, d, true, true).size() ==
                           enumerate_syt(pennant_shape_vector(n, d)).size();
        ++families;
      }
    detail << families << " families";
  }));

  results.push_back(run_check("jellyfish counts match the interleaving formula",
                              [&](bool& pass, std::ostringstream& detail) {
    long long tableaux = 0;
    for (int n = 4; n <= cap(9); ++n)
      for (int d = 1; 2 * d <= n; ++d)
        for (const auto& pi : enumerate_partitions(n, d, true)) {
          long long expected = 1;
          for (int v = 2; v <= n - 2 * d; ++v) expected *= v;
          for (const auto& b : pi.blocks())
            for (int v = 2; v <= static_cast<int>(b.size()) - 2; ++v) expected /= v;
          const auto tabs = enumerate_jellyfish(pi);
          tableaux += static_cast<long long>(tabs.size());
          pass = pass && static_cast<long long>(tabs.size()) == expected;
        }
    detail << tableaux << " tableaux";
  }));

  results.push_back(run_check("signs are invariant under column rearrangements",
                              [&](bool& pass, std::ostringstream& detail) {
    long long variants = 0;
    for (int n = 4; n <= cap(8); ++n)
      for (int d = 2; 2 * d <= n; ++d)
        for (const auto& pi : enumerate_partitions(n, d, true))
          for (const auto& t : enumerate_jellyfish(pi)) {
            const int expected = t.sign();
            BarredTableau base = to_barred(t);
            std::vector<size_t> order(base.columns.size());
            std::iota(order.begin(), order.end(), 0);
            do {
              BarredTableau variant;
              for (size_t j : order) variant.columns.push_back(base.columns[j]);
              std::function<void(size_t)> rec = [&](size_t col) {
                if (col == variant.columns.size()) {
                  ++variants;
                  pass = pass && sign_barred(variant) == expected;
                  return;
                }
                auto& entries = variant.columns[col].entries;
                std::sort(entries.begin(), entries.end());
                do {
                  rec(col + 1);
                } while (std::next_permutation(entries.begin(), entries.end()) && pass);
              };
              rec(0);
            } while (std::next_permutation(order.begin(), order.end()) && pass);
          }
    detail << variants << " rearrangements";
  }));

  results.push_back(run_check("lowest-entry sign recursion",
                              [&](bool& pass, std::ostringstream& detail) {
    long long removals = 0;
    for (int n = 5; n <= cap(8); ++n)
      for (int d = 2; 2 * d < n; ++d)
        for (const auto& pi : enumerate_partitions(n, d, true))
          for (const auto& t : enumerate_jellyfish(pi)) {
            const int m = t.word().back();
            const auto& block = t.blocks()[m];
            for (int k : block) {
              std::vector<std::vector<int>> blocks_k = t.blocks();
              blocks_k[m].erase(std::find(blocks_k[m].begin(), blocks_k[m].end(), k));
              const JellyfishTableau tk(blocks_k,
                                        {t.word().begin(), t.word().end() - 1});
              const long long larger =
                  std::count_if(block.begin(), block.end(), [&](int v) { return v > k; });
              const int predicted = (n - k - larger) % 2 == 0 ? tk.sign() : -tk.sign();
              pass = pass && t.sign() == predicted;
              ++removals;
            }
          }
    detail << removals << " removals";
  }));

  results.push_back(run_check("invariants use every column exactly once",
                              [&](bool& pass, std::ostringstream& detail) {
    long long monomials = 0;
    for (int n = 4; n <= cap(8); ++n)
      for (int d = 2; 2 * d <= n; ++d)
        for (const auto& pi : enumerate_partitions(n, d, true)) {
          const Polynomial p = web_invariant(pi).poly;
          for (const auto& [mono, coeff] : p.terms()) {
            std::vector<int> uses(n + 1, 0);
            for (const auto& [rank, exp] : mono.factors()) uses[var_col(rank)] += exp;
            for (int c = 1; c <= n; ++c) pass = pass && uses[c] == 1;
            ++monomials;
          }
        }
    detail << monomials << " monomials";
  }));

  results.push_back(run_check("web invariants are independent of block order",
                              [&](bool& pass, std::ostringstream& detail) {
    long long invariants = 0;
    for (int n = 4; n <= cap(8); ++n)
      for (int d = 2; 2 * d <= n; ++d)
        for (const auto& pi : enumerate_partitions(n, d, true)) {
          std::vector<std::vector<int>> reversed(pi.blocks().rbegin(), pi.blocks().rend());
          Polynomial again;
          for (const auto& t : enumerate_jellyfish_ordered(reversed)) {
            const Polynomial contrib = jelly_product(t);
            again += t.sign() == 1 ? contrib : -contrib;
          }
          pass = pass && again == web_invariant(pi).poly;
          ++invariants;
        }
    detail << invariants << " invariants";
  }));

  results.push_back(run_check("five-term recurrence",
                              [&](bool& pass, std::ostringstream& detail) {
    long long splits = 0;
    for (int n = 4; n <= cap(7); ++n)
      for_each_five_term_split(n, [&](const std::vector<int>& a, const std::vector<int>& b, int i,
                                      int j, const std::vector<std::vector<int>>& fixed) {
        pass = pass && five_term_residual(n, a, b, i, j, fixed).is_zero();
        ++splits;
      });
    long long sampled = 0;
    for (int n = 8; n <= cap(9); ++n)
      sample_five_term_splits(n, 200, 7000u + static_cast<unsigned>(n),
                              [&](const std::vector<int>& a, const std::vector<int>& b, int i,
                                  int j, const std::vector<std::vector<int>>& fixed) {
        pass = pass && five_term_residual(n, a, b, i, j, fixed).is_zero();
        ++sampled;
      });
    detail << splits << " exhaustive splits";
    if (sampled) detail << ", " << sampled << " sampled";
  }));

  results.push_back(run_check("permutations act by sign times the relabeled partition",
                              [&](bool& pass, std::ostringstream& detail) {
    long long actions = 0;
    for (int n = 4; n <= cap(7); ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        std::map<SetPartition, Polynomial> invariants;
        for (const auto& pi : enumerate_partitions(n, d, true))
          invariants.emplace(pi, web_invariant(pi).poly);
        for (int t = 1; t < n; ++t) {
          const Permutation s = Permutation::simple_transposition(n, t);
          for (const auto& [pi, poly] : invariants) {
            pass = pass && relabel_columns(poly, s) == -invariants.at(apply_perm(s, pi));
            ++actions;
          }
        }
        const Permutation c = Permutation::long_cycle(n);
        const Permutation w0 = Permutation::reversal(n);
        const int sign_c = (n - 1) % 2 == 0 ? 1 : -1;
        const int sign_w = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
        for (const auto& [pi, poly] : invariants) {
          const Polynomial& rot = invariants.at(rotate(pi));
          const Polynomial& refl = invariants.at(reflect(pi));
          pass = pass && relabel_columns(poly, c) == (sign_c == 1 ? rot : -rot);
          pass = pass && relabel_columns(poly, w0) == (sign_w == 1 ? refl : -refl);
          actions += 2;
        }
      }
    detail << actions << " actions";
  }));

  results.push_back(run_check("web basis: distinct leads, dimension, zero-residual expansions",
                              [&](bool& pass, std::ostringstream& detail) {
    long long expansions = 0;
    for (int n = 4; n <= cap(9); ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        const WebBasis basis = build_basis(n, d);
        pass = pass && basis.size() == enumerate_syt(pennant_shape_vector(n, d)).size();
        for (const auto& element : basis)
          for (const auto& block : element.pi().blocks())
            pass = pass && element.lead.exponent(1, block.front()) == 1 &&
                   element.lead.exponent(2, block.back()) == 1;
        for (const auto& sigma : enumerate_partitions(n, d, true)) {
          const Polynomial target = web_invariant(sigma).poly;
          const BasisExpansion e = expand_in_basis(target, basis);
          Polynomial recombined;
          for (size_t i = 0; i < basis.size(); ++i)
            recombined += basis[i].poly().scaled(e.coeffs[i].get_num());
          pass = pass && e.is_integral() && recombined == target;
          ++expansions;
        }
        for (const auto& t : enumerate_syt(pennant_shape_vector(n, d))) {
          expand_in_basis(syt_invariant(t), basis);
          ++expansions;
        }
      }
    detail << expansions << " expansions";
  }));

  results.push_back(run_check("dihedral matrices are signed permutations with matching traces",
                              [&](bool& pass, std::ostringstream& detail) {
    int matrices = 0;
    for (int n = 4; n <= cap(8); ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        const WebBasis basis = build_basis(n, d);
        const QMatrix mc = action_matrix(Permutation::long_cycle(n), basis);
        const QMatrix mw = action_matrix(Permutation::reversal(n), basis);
        pass = pass && is_signed_permutation(mw);
        QMatrix power = identity_matrix(basis.size());
        for (int k = 1; k <= n; ++k) {
          power = mat_mul(mc, power);
          pass = pass && is_signed_permutation(power);
          const int sign = ((n - 1) * k) % 2 == 0 ? 1 : -1;
          pass = pass && mat_trace(power) == sign * count_rotation_fixed_points(n, d, k);
          ++matrices;
        }
      }
    detail << matrices << " powers";
  }));

  results.push_back(run_check("value swaps are involutions and orbits divide the maximum entry",
                              [&](bool& pass, std::ostringstream& detail) {
    long long tableaux = 0;
    for (int q = 2; q <= cap(10); ++q)
      for (int m = 1; m < q; ++m) {
        if (q > 2 * m) continue;
        for (const auto& t : enumerate_increasing(q, m)) {
          for (int k = 1; k < q; ++k) pass = pass && tau(tau(t, k), k) == t;
          pass = pass && k_evacuation(k_evacuation(t)) == t;
          ++tableaux;
        }
        for (const auto& orbit : promotion_orbits(q, m)) pass = pass && q % orbit.size() == 0;
      }
    detail << tableaux << " tableaux";
  }));

  results.push_back(run_check("tableau bijections intertwine the dihedral actions",
                              [&](bool& pass, std::ostringstream& detail) {
    long long tableaux = 0;
    for (int q = 2; q <= cap(10); ++q)
      for (int m = 1; m < q; ++m) {
        if (q > 2 * m) continue;
        const auto tabs = enumerate_increasing(q, m);
        std::set<SetPartition> images;
        for (const auto& t : tabs) {
          const SetPartition pi = inc_to_partition(t);
          images.insert(pi);
          pass = pass && partition_to_inc(pi) == t;
          pass = pass && inc_to_partition(k_promotion(t)) == rotate(pi);
          pass = pass && inc_to_partition(k_evacuation(t)) == reflect(pi);
          pass = pass && syt_to_inc(inc_to_syt(t)) == t;
          ++tableaux;
        }
        pass = pass && images.size() == tabs.size() &&
               images.size() == enumerate_partitions(q, q - m, true, true).size();
      }
    detail << tableaux << " tableaux";
  }));

  results.push_back(run_check(
      "standard-tableau bijection: evacuation-equivariant, promotion witness found",
      [&](bool& pass, std::ostringstream& detail) {
    bool witness = false;
    long long tableaux = 0;
    for (int q = 2; q <= cap(8); ++q)
      for (int m = 1; m < q; ++m) {
        if (q > 2 * m) continue;
        for (const auto& t : enumerate_increasing(q, m)) {
          pass = pass && inc_to_syt(k_evacuation(t)) == k_evacuation_syt(inc_to_syt(t));
          if (!(inc_to_syt(k_promotion(t)) == k_promotion_syt(inc_to_syt(t)))) witness = true;
          ++tableaux;
        }
      }
    if (cap(8) >= 5) pass = pass && witness;  // the smallest witness needs q = 5
    detail << tableaux << " tableaux, promotion witness " << (witness ? "found" : "missing");
  }));

  return results;
}

}  // namespace pennantwebs
