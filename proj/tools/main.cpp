// Command-line front end: every computation is deterministic and prints in
// the canonical orders, so identical invocations are byte-identical.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pennantwebs/json_io.hpp"
#include "pennantwebs/verify.hpp"

using namespace pennantwebs;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

// Block lists in the order they were typed; tableau listings honor this
// order while the invariant itself does not depend on it.
std::vector<std::vector<int>> parse_blocks_as_typed(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  std::string block_text;
  while (std::getline(ss, block_text, '|')) {
    std::vector<int> block;
    std::stringstream bs(block_text);
    std::string item;
    while (std::getline(bs, item, ',')) block.push_back(std::stoi(item));
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

SetPartition parse_partition_checked(const std::string& text, int n_flag) {
  SetPartition pi = SetPartition::parse(text);
  if (n_flag > 0 && n_flag != pi.n())
    throw std::invalid_argument("--n is " + std::to_string(n_flag) + " but the partition covers {1.." +
                                std::to_string(pi.n()) + "}");
  return pi;
}

int run_invariant(const std::string& partition_text, int n_flag, const std::string& format) {
  const SetPartition pi = parse_partition_checked(partition_text, n_flag);
  const Polynomial poly = web_invariant(pi).poly;

  std::vector<JellyfishTableau> tabs;
  if (!pi.has_singleton()) {
    std::vector<std::vector<int>> typed = parse_blocks_as_typed(partition_text);
    for (auto& b : typed) std::sort(b.begin(), b.end());
    tabs = enumerate_jellyfish_ordered(typed);
  }

  if (format == "json") {
    json j;
    j["pi"] = pi.to_string();
    j["invariant"] = polynomial_to_json(poly);
    json tableaux = json::array();
    json inversions = json::array();
    json signs = json::array();
    for (const auto& t : tabs) {
      tableaux.push_back(jellyfish_to_json(t));
      inversions.push_back(t.inversion_number());
      signs.push_back(t.sign());
    }
    j["tableaux"] = tableaux;
    j["inversions"] = inversions;
    j["signs"] = signs;
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  std::cout << "partition: " << pi.to_string() << "\n";
  std::cout << "tableaux: " << tabs.size() << "\n";
  std::string invs, signs;
  for (size_t i = 0; i < tabs.size(); ++i) {
    if (i) invs += ',', signs += ',';
    invs += std::to_string(tabs[i].inversion_number());
    signs += tabs[i].sign() == 1 ? '+' : '-';
  }
  std::cout << "inversions: " << invs << "\n";
  std::cout << "signs: " << signs << "\n";
  std::cout << "invariant: " << poly.to_string() << "\n";
  return kExitOk;
}

int run_basis(int n, int d, const std::string& format) {
  const WebBasis basis = build_basis(n, d);
  std::vector<int> shape = {d, d};
  shape.insert(shape.end(), n - 2 * d, 1);
  const size_t syt_count = enumerate_syt(shape).size();
  const bool match = basis.size() == syt_count;

  if (format == "json") {
    json elements = json::array();
    for (const auto& e : basis)
      elements.push_back({{"pi", e.pi().to_string()}, {"lead", e.lead.to_string()}});
    json j = {{"n", n},
              {"d", d},
              {"dimension", basis.size()},
              {"standard_tableaux", syt_count},
              {"dimension_match", match},
              {"elements", elements}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "dimension: " << basis.size() << "\n";
    std::cout << "standard_tableaux: " << syt_count << "\n";
    std::cout << "dimension_match: " << (match ? "true" : "false") << "\n";
    for (size_t i = 0; i < basis.size(); ++i)
      std::cout << (i + 1) << ". pi=" << basis[i].pi().to_string()
                << " lead=" << basis[i].lead.to_string() << "\n";
  }
  return match ? kExitOk : kExitVerificationFailed;
}

int run_expand(const std::string& partition_text, int n_flag, const std::string& format) {
  const SetPartition pi = parse_partition_checked(partition_text, n_flag);
  const int n = pi.n(), d = pi.block_count();
  if (d < 2 || 2 * d > n)
    throw std::invalid_argument("expansion needs 2 <= d <= n/2 (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  const WebBasis basis = build_basis(n, d);
  const BasisExpansion e = expand_in_basis(web_invariant(pi).poly, basis);

  if (format == "json") {
    std::cout << expansion_to_json(pi, basis, e).dump() << "\n";
  } else {
    std::cout << "target: " << pi.to_string() << "\n";
    for (size_t i = 0; i < basis.size(); ++i) {
      if (e.coeffs[i] == 0) continue;
      std::cout << basis[i].pi().to_string() << ": " << e.coeffs[i].get_str() << "\n";
    }
  }
  return kExitOk;
}

int run_act(const std::string& perm_text, const std::string& partition_text, int n_flag,
            const std::string& format) {
  const SetPartition pi = parse_partition_checked(partition_text, n_flag);
  const Permutation w = Permutation::parse(perm_text);
  if (w.n() != pi.n()) throw std::invalid_argument("permutation and partition sizes differ");

  const SetPartition image = apply_perm(w, pi);
  const Polynomial acted = sn_act(w, web_invariant(pi));
  const Polynomial expected = web_invariant(image).poly;
  const bool verified = acted == (w.sign() == 1 ? expected : -expected);

  if (format == "json") {
    json j = {{"result", image.to_string()}, {"sign", w.sign()}, {"verified", verified}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "result: " << image.to_string() << "\n";
    std::cout << "sign: " << (w.sign() == 1 ? "+1" : "-1") << "\n";
    std::cout << "verified: " << (verified ? "true" : "false") << "\n";
  }
  return verified ? kExitOk : kExitVerificationFailed;
}

int run_five_term(const std::string& a_text, const std::string& b_text, int i, int j,
                  const std::string& fixed_text, int n_flag, const std::string& format) {
  const std::vector<int> a = parse_int_list(a_text);
  const std::vector<int> b = parse_int_list(b_text);
  std::vector<std::vector<int>> fixed;
  if (!fixed_text.empty()) fixed = parse_blocks_as_typed(fixed_text);

  int n = static_cast<int>(a.size() + b.size()) + 2;
  for (const auto& f : fixed) n += static_cast<int>(f.size());
  if (n_flag > 0 && n_flag != n)
    throw std::invalid_argument("--n disagrees with the union of A, B, I, J and fixed blocks");

  const Polynomial residual = five_term_residual(n, a, b, i, j, fixed);
  if (format == "json") {
    json out = {{"residual", polynomial_to_json(residual)}, {"zero", residual.is_zero()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "residual: " << residual.to_string() << "\n";
  }
  return residual.is_zero() ? kExitOk : kExitVerificationFailed;
}

int run_step(const std::string& tableau_text, bool evacuate, const std::string& format) {
  const IncreasingTableau t = IncreasingTableau::parse(tableau_text);
  const IncreasingTableau out = evacuate ? k_evacuation(t) : k_promotion(t);
  if (format == "json")
    std::cout << json{{"tableau", out.to_string()}}.dump() << "\n";
  else
    std::cout << out.to_string() << "\n";
  return kExitOk;
}

int run_orbits(int q, int m, const std::string& format) {
  const auto orbits = promotion_orbits(q, m);
  if (format == "json") {
    std::cout << orbits_to_json(q, m, orbits).dump() << "\n";
  } else {
    for (size_t i = 0; i < orbits.size(); ++i) {
      std::cout << "orbit " << (i + 1) << " (size " << orbits[i].size() << "):";
      for (const auto& t : orbits[i]) std::cout << " " << t.to_string();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_bijection(const std::string& tableau_text, const std::string& format) {
  const IncreasingTableau t = IncreasingTableau::parse(tableau_text);
  const StandardTableau u = inc_to_syt(t);
  const SetPartition pi = inc_to_partition(t);
  if (format == "json") {
    json j = {{"increasing", t.to_string()}, {"standard", u.to_string()}, {"partition", pi.to_string()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "increasing: " << t.to_string() << "\n";
    std::cout << "standard: " << u.to_string() << "\n";
    std::cout << "partition: " << pi.to_string() << "\n";
  }
  return kExitOk;
}

int run_verify(int n_max, const std::string& format) {
  const auto results = run_verification(n_max);
  size_t passed = 0;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      if (r.pass) ++passed;
    }
    std::cout << json{{"n_max", n_max}, {"passed", passed}, {"total", results.size()}, {"checks", arr}}.dump()
              << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      if (r.pass) ++passed;
    }
    std::cout << "verified " << passed << "/" << results.size() << " checks with n_max " << n_max
              << "\n";
  }
  return passed == results.size() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact web invariants of set partitions: noncrossing bases of pennant Specht "
               "modules, uncrossing expansions, and increasing-tableau dynamics"};
  app.require_subcommand(1);

  std::string partition_text, perm_text, tableau_text, a_text, b_text, fixed_text;
  std::string format = "text";
  int n_flag = 0, d_flag = 0, i_flag = 0, j_flag = 0, q_flag = 0, m_flag = 0, n_max = 7;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
  };

  CLI::App* invariant = app.add_subcommand("invariant", "web invariant of a set partition");
  invariant->add_option("--partition", partition_text, "blocks, e.g. \"1,4|2,3,6,10|5,7,8,9\"")
      ->required();
  invariant->add_option("--n", n_flag, "ground-set size (checked against the partition)");
  add_format(invariant);

  CLI::App* basis = app.add_subcommand("basis", "noncrossing web basis with leading monomials");
  basis->add_option("--n", n_flag, "ground-set size")->required();
  basis->add_option("--d", d_flag, "number of blocks")->required();
  add_format(basis);

  CLI::App* expand = app.add_subcommand("expand", "expand an invariant over the noncrossing basis");
  expand->add_option("--partition", partition_text, "target partition")->required();
  expand->add_option("--n", n_flag, "ground-set size (checked against the partition)");
  add_format(expand);

  CLI::App* act = app.add_subcommand("act", "permutation action on an invariant");
  act->add_option("--perm", perm_text, "one-line permutation, e.g. \"4,1,2,3\"")->required();
  act->add_option("--partition", partition_text, "partition")->required();
  act->add_option("--n", n_flag, "ground-set size (checked against the partition)");
  add_format(act);

  CLI::App* five = app.add_subcommand("five-term", "five-term recurrence residual");
  five->add_option("--A", a_text, "comma list")->required();
  five->add_option("--B", b_text, "comma list")->required();
  five->add_option("--I", i_flag, "single element")->required();
  five->add_option("--J", j_flag, "single element")->required();
  five->add_option("--fixed", fixed_text, "fixed blocks, e.g. \"7,8|9,10\"");
  five->add_option("--n", n_flag, "ground-set size (checked against the split)");
  add_format(five);

  CLI::App* promote = app.add_subcommand("promote", "one promotion step of an increasing tableau");
  promote->add_option("--tableau", tableau_text, "rows separated by ';', e.g. \"1,2;3,4\"")
      ->required();
  add_format(promote);

  CLI::App* evacuate = app.add_subcommand("evacuate", "evacuation of an increasing tableau");
  evacuate->add_option("--tableau", tableau_text, "rows separated by ';'")->required();
  add_format(evacuate);

  CLI::App* orbits = app.add_subcommand("orbits", "promotion orbit report for Inc^q(m,m)");
  orbits->add_option("--q", q_flag, "maximum entry")->required();
  orbits->add_option("--m", m_flag, "row length")->required();
  add_format(orbits);

  CLI::App* bijection = app.add_subcommand("bijection", "increasing / standard / partition triple");
  bijection->add_option("--tableau", tableau_text, "increasing tableau")->required();
  add_format(bijection);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite up to a bound");
  verify->add_option("--n-max", n_max, "ground-set bound (exhaustive recurrence capped at 7, "
                                       "sampled beyond)")
      ->default_val(7);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*invariant) return run_invariant(partition_text, n_flag, format);
    if (*basis) return run_basis(n_flag, d_flag, format);
    if (*expand) return run_expand(partition_text, n_flag, format);
    if (*act) return run_act(perm_text, partition_text, n_flag, format);
    if (*five) return run_five_term(a_text, b_text, i_flag, j_flag, fixed_text, n_flag, format);
    if (*promote) return run_step(tableau_text, false, format);
    if (*evacuate) return run_step(tableau_text, true, format);
    if (*orbits) return run_orbits(q_flag, m_flag, format);
    if (*bijection) return run_bijection(tableau_text, format);
    if (*verify) return run_verify(n_max, format);
  } catch (const NotInSpanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
