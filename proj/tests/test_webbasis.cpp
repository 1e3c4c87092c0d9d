#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "oracles.hpp"
#include "pennantwebs/webbasis.hpp"

using namespace pennantwebs;

namespace {

Polynomial plucker(int i, int j) { return sym_minor({1, 2}, {i, j}); }

Polynomial bracket(const std::string& text) { return web_invariant(SetPartition::parse(text)).poly; }

// All ways to split {1..n} into A, B, singletons i < j and fixed blocks:
// pick the pair {i, j}, set-partition the rest, choose two of its blocks as
// A and B (unordered), keep the others fixed.
void for_each_five_term_split(
    int n, const std::function<void(const std::vector<int>&, const std::vector<int>&, int, int,
                                    const std::vector<std::vector<int>>&)>& fn) {
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

}  // namespace

TEST_CASE("five-term recurrence") {
  SECTION("base case on four points reduces to the Plucker relation") {
    REQUIRE(five_term_residual(4, {1}, {2}, 3, 4).is_zero());
    const Polynomial sum = bracket("1,2|3,4") + bracket("1,3|2,4") + bracket("1,4|2,3");
    REQUIRE(sum.is_zero());
    REQUIRE((plucker(1, 2) * plucker(3, 4) - plucker(1, 3) * plucker(2, 4) +
             plucker(1, 4) * plucker(2, 3))
                .is_zero());
  }

  SECTION("two larger sets on six points") {
    REQUIRE(five_term_residual(6, {1, 2}, {3, 4}, 5, 6).is_zero());
  }

  SECTION("a fixed block on eight points") {
    REQUIRE(five_term_residual(8, {1, 2}, {3, 4}, 5, 6, {{7, 8}}).is_zero());
  }

  SECTION("all splits up to n = 6") {
    for (int n = 4; n <= 6; ++n)
      for_each_five_term_split(n, [&](const std::vector<int>& a, const std::vector<int>& b, int i,
                                      int j, const std::vector<std::vector<int>>& fixed) {
        REQUIRE(five_term_residual(n, a, b, i, j, fixed).is_zero());
      });
  }

  SECTION("malformed splits are rejected") {
    REQUIRE_THROWS_AS(five_term_residual(4, {1, 3}, {2}, 3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(five_term_residual(5, {1}, {2}, 3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(five_term_residual(4, {}, {1, 2}, 3, 4), std::invalid_argument);
  }
}

TEST_CASE("symmetric group action on invariants") {
  SECTION("a transposition inside a block negates the invariant") {
    const WebInvariant v = web_invariant(SetPartition::parse("1,2|3,4"));
    REQUIRE(sn_act(Permutation::simple_transposition(4, 1), v) == -v.poly);
  }

  SECTION("the long cycle rotates with sign") {
    const WebInvariant v = web_invariant(SetPartition::parse("1,2|3,4"));
    REQUIRE(sn_act(Permutation::long_cycle(4), v) == -bracket("1,4|2,3"));
  }

  SECTION("w . [pi] = sgn(w) [w . pi] for simple transpositions, n <= 6") {
    for (int n = 4; n <= 6; ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        std::map<SetPartition, Polynomial> invariants;
        for (const auto& pi : enumerate_partitions(n, d, true))
          invariants.emplace(pi, web_invariant(pi).poly);
        for (int t = 1; t < n; ++t) {
          const Permutation s = Permutation::simple_transposition(n, t);
          for (const auto& [pi, poly] : invariants)
            REQUIRE(relabel_columns(poly, s) == -invariants.at(apply_perm(s, pi)));
        }
      }
  }

  SECTION("reversal reflects with the global sign, n = 6") {
    const int n = 6;
    const Permutation w0 = Permutation::reversal(n);
    const int global = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    for (int d = 2; 2 * d <= n; ++d)
      for (const auto& pi : enumerate_partitions(n, d, true)) {
        const Polynomial lhs = sn_act(w0, web_invariant(pi));
        const Polynomial rhs = web_invariant(reflect(pi)).poly;
        REQUIRE(lhs == (global == 1 ? rhs : -rhs));
      }
  }
}

TEST_CASE("web basis construction") {
  SECTION("four points, two blocks") {
    const WebBasis basis = build_basis(4, 2);
    REQUIRE(basis.size() == 2);
    REQUIRE(basis[0].pi() == SetPartition::parse("1,4|2,3"));
    REQUIRE(basis[1].pi() == SetPartition::parse("1,2|3,4"));
  }

  SECTION("dimensions match standard tableau counts") {
    REQUIRE(build_basis(6, 2).size() == 9);
    REQUIRE(build_basis(6, 3).size() == 5);
    for (int n = 4; n <= 8; ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        std::vector<int> shape = {d, d};
        shape.insert(shape.end(), n - 2 * d, 1);
        REQUIRE(build_basis(n, d).size() == oracles::hook_length_count(shape));
      }
  }

  SECTION("leading monomials collect block minima in row 1 and maxima in row 2") {
    for (int n = 4; n <= 7; ++n)
      for (int d = 2; 2 * d <= n; ++d)
        for (const auto& element : build_basis(n, d)) {
          const auto& blocks = element.pi().blocks();
          for (const auto& block : blocks) {
            REQUIRE(element.lead.exponent(1, block.front()) == 1);
            REQUIRE(element.lead.exponent(2, block.back()) == 1);
          }
        }
  }
}

TEST_CASE("expansion in the web basis") {
  SECTION("basis elements expand to unit vectors") {
    const WebBasis basis = build_basis(6, 2);
    for (size_t j = 0; j < basis.size(); ++j) {
      const BasisExpansion e = expand_in_basis(basis[j].poly(), basis);
      for (size_t i = 0; i < basis.size(); ++i)
        REQUIRE(e.coeffs[i] == (i == j ? 1 : 0));
    }
  }

  SECTION("the crossing matching on four points resolves with coefficients -1, -1") {
    const WebBasis basis = build_basis(4, 2);
    const BasisExpansion e = expand_in_basis(bracket("1,3|2,4"), basis);
    REQUIRE(basis[0].pi() == SetPartition::parse("1,4|2,3"));
    REQUIRE(e.coeffs[0] == -1);
    REQUIRE(e.coeffs[1] == -1);
    // cross-check: the recurrence rearranges to
    // [{13,24}] = -[{12,34}] - [{14,23}] once the singleton terms vanish
    REQUIRE(bracket("1,3|2,4") == -bracket("1,2|3,4") - bracket("1,4|2,3"));
  }

  SECTION("every invariant of a singleton-free partition lies in the span") {
    for (int n = 4; n <= 7; ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        const WebBasis basis = build_basis(n, d);
        for (const auto& sigma : enumerate_partitions(n, d, true)) {
          const Polynomial target = web_invariant(sigma).poly;
          const BasisExpansion e = expand_in_basis(target, basis);
          Polynomial recombined;
          for (size_t i = 0; i < basis.size(); ++i) {
            REQUIRE(e.coeffs[i].get_den() == 1);
            recombined += basis[i].poly().scaled(e.coeffs[i].get_num());
          }
          REQUIRE(recombined == target);
        }
      }
  }

  SECTION("uncrossing relations: expansions agree with the recurrence rearrangement") {
    // [{A u I, B u J}] = -[{A u B, I u J}] - [{A u J, B u I}]
    //                    + [{A u I u J, B}] + [{A, B u I u J}]
    struct Instance {
      int n;
      std::vector<int> a, b;
      int i, j;
    };
    for (const Instance& inst : std::vector<Instance>{
             {4, {1}, {2}, 3, 4},
             {5, {1, 5}, {3}, 2, 4},
             {5, {2, 3}, {5}, 1, 4},
             {6, {1, 2}, {4, 5}, 3, 6},
             {6, {1, 6}, {3, 4}, 2, 5}}) {
      const int d = 2;
      const WebBasis basis = build_basis(inst.n, d);
      auto join = [](std::vector<int> x, std::vector<int> y) {
        x.insert(x.end(), y.begin(), y.end());
        std::sort(x.begin(), x.end());
        return x;
      };
      auto inv = [&](std::vector<std::vector<int>> blocks) {
        return web_invariant(SetPartition(inst.n, std::move(blocks))).poly;
      };
      const Polynomial lhs = inv({join(inst.a, {inst.i}), join(inst.b, {inst.j})});
      const Polynomial rhs = -inv({join(inst.a, inst.b), {inst.i, inst.j}}) -
                             inv({join(inst.a, {inst.j}), join(inst.b, {inst.i})}) +
                             inv({join(inst.a, {inst.i, inst.j}), inst.b}) +
                             inv({inst.a, join(inst.b, {inst.i, inst.j})});
      REQUIRE(expand_in_basis(lhs, basis).coeffs == expand_in_basis(rhs, basis).coeffs);
    }
  }

  SECTION("polynomials outside the span are reported") {
    const WebBasis basis = build_basis(4, 2);
    REQUIRE_THROWS_AS(expand_in_basis(Polynomial::variable(1, 1), basis), NotInSpanError);
  }
}

TEST_CASE("standard monomial invariants") {
  SECTION("two-row tableaux give products of Plucker variables") {
    REQUIRE(syt_invariant(StandardTableau({{1, 3}, {2, 4}})) == plucker(1, 2) * plucker(3, 4));
    REQUIRE(syt_invariant(StandardTableau({{1, 2}, {3, 4}})) == plucker(1, 3) * plucker(2, 4));
  }

  SECTION("a pennant tableau mixes one tall minor with Plucker factors") {
    const StandardTableau t({{1, 4}, {2, 6}, {3}, {5}});
    REQUIRE(syt_invariant(t) ==
            sym_minor({1, 2, 3, 4}, {1, 2, 3, 5}) * sym_minor({1, 2}, {4, 6}));
  }

  SECTION("standard monomials lie in the web span and conversely, n <= 7") {
    for (int n = 4; n <= 7; ++n)
      for (int d = 2; 2 * d <= n; ++d) {
        std::vector<int> shape = {d, d};
        shape.insert(shape.end(), n - 2 * d, 1);
        const WebBasis basis = build_basis(n, d);

        std::vector<Polynomial> standard_monomials;
        for (const auto& t : enumerate_syt(shape)) {
          const Polynomial p = syt_invariant(t);
          expand_in_basis(p, basis);  // throws if outside the span
          standard_monomials.push_back(p);
        }
        REQUIRE(standard_monomials.size() == basis.size());
        for (const auto& element : basis)
          REQUIRE(oracles::in_rational_span(standard_monomials, element.poly()));
      }
  }
}

TEST_CASE("dihedral action matrices") {
  SECTION("identity acts as the identity matrix") {
    REQUIRE(dihedral_matrix(Permutation::identity(4), 4, 2) == identity_matrix(2));
  }

  SECTION("rotation matrix on four points") {
    const QMatrix m = dihedral_matrix(Permutation::long_cycle(4), 4, 2);
    const QMatrix expected = {{0, -1}, {-1, 0}};
    REQUIRE(m == expected);
  }

  SECTION("rotation and reflection are signed permutation matrices with global signs") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
      const WebBasis basis = build_basis(n, d);
      const QMatrix mc = action_matrix(Permutation::long_cycle(n), basis);
      const QMatrix mw = action_matrix(Permutation::reversal(n), basis);
      REQUIRE(is_signed_permutation(mc));
      REQUIRE(is_signed_permutation(mw));
      const int sign_c = (n - 1) % 2 == 0 ? 1 : -1;
      const int sign_w = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
      for (size_t j = 0; j < basis.size(); ++j) {
        const SetPartition rot = rotate(basis[j].pi());
        const SetPartition refl = reflect(basis[j].pi());
        for (size_t i = 0; i < basis.size(); ++i) {
          REQUIRE(mc[i][j] == (basis[i].pi() == rot ? mpq_class(sign_c) : mpq_class(0)));
          REQUIRE(mw[i][j] == (basis[i].pi() == refl ? mpq_class(sign_w) : mpq_class(0)));
        }
      }
    }
  }

  SECTION("the sixth power of rotation on six points is the identity") {
    const WebBasis basis = build_basis(6, 2);
    const QMatrix mc = action_matrix(Permutation::long_cycle(6), basis);
    QMatrix power = identity_matrix(basis.size());
    for (int k = 0; k < 6; ++k) power = mat_mul(mc, power);
    REQUIRE(power == identity_matrix(basis.size()));
  }

  SECTION("traces count rotation fixed points up to sign") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{6, 2}, {6, 3}}) {
      const WebBasis basis = build_basis(n, d);
      const QMatrix mc = action_matrix(Permutation::long_cycle(n), basis);
      QMatrix power = identity_matrix(basis.size());
      for (int k = 1; k <= n; ++k) {
        power = mat_mul(mc, power);
        REQUIRE(is_signed_permutation(power));
        const int sign = ((n - 1) * k) % 2 == 0 ? 1 : -1;
        REQUIRE(mat_trace(power) == sign * count_rotation_fixed_points(n, d, k));
      }
    }
  }
}
