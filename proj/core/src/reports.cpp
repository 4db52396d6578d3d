#include "blocksort/reports.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "blocksort/averages.hpp"
#include "blocksort/block_sorter.hpp"
#include "blocksort/cycle_graph.hpp"
#include "blocksort/cycle_products.hpp"
#include "blocksort/errors.hpp"
#include "blocksort/version.hpp"

namespace blocksort {

using nlohmann::json;

namespace {
json base_report() { return json{{"schema", kSchema}}; }
std::string dump(const json& j) { return j.dump(2) + "\n"; }
}  // namespace

std::string distance_report(const Permutation& p) {
  json j = base_report();
  j["input"] = to_one_line_string(p);
  j["n"] = p.degree();
  j["c_graph"] = alternating_cycle_count(p);
  j["distance"] = bi_distance(p);
  return dump(j);
}

std::string sort_report(const Permutation& p) {
  const SortCertificate cert = greedy_sort(p);
  json j = base_report();
  j["input"] = to_one_line_string(p);
  j["n"] = p.degree();
  j["distance"] = cert.claimed_distance;
  json moves = json::array();
  for (const auto& m : cert.moves) moves.push_back({m.i, m.k, m.j, m.l});
  j["moves"] = std::move(moves);
  json states = json::array();
  Permutation cur = p;
  states.push_back(to_one_line_string(cur));
  for (const auto& m : cert.moves) {
    cur = apply_block_interchange(cur, m);
    states.push_back(to_one_line_string(cur));
  }
  j["states"] = std::move(states);
  return dump(j);
}

std::string graph_report(const Permutation& p) {
  const CycleGraph g(p);
  json j = base_report();
  j["input"] = to_one_line_string(p);
  j["n"] = g.n();
  json black = json::array(), gray = json::array();
  for (const auto& [from, to] : g.black_edges()) black.push_back({from, to});
  for (const auto& [from, to] : g.gray_edges()) gray.push_back({from, to});
  j["black_edges"] = std::move(black);
  j["gray_edges"] = std::move(gray);
  j["alternating_cycles"] = g.cycles();
  j["c"] = g.cycle_count();
  return dump(j);
}

std::string prob_report(const ProbOptions& opt) {
  if (opt.h < 2) throw std::invalid_argument("prob needs h >= 2");
  if (opt.i < 1 || opt.i > opt.h || opt.j < 1 || opt.j > opt.h ||
      opt.i == opt.j)
    throw std::invalid_argument("pair must be two distinct elements of 1..h");

  const Rational formula = same_cycle_probability(opt.h);
  json j = base_report();
  j["h"] = opt.h;
  j["pair"] = {opt.i, opt.j};
  j["formula"] = fraction_string(formula);

  if (opt.exact) {
    Rational value;
    if (opt.h <= 7) {
      j["method"] = "exact";
      value = same_cycle_exhaustive(opt.h, opt.i, opt.j);
    } else if (opt.h <= 10) {
      // pair-independent by conjugation symmetry; the all-pairs scan is out
      // of reach here
      j["method"] = "exact-reduced";
      value = same_cycle_exhaustive_reduced(opt.h);
    } else {
      throw std::invalid_argument(
          "exact mode enumerates and supports h <= 10; use --trials");
    }
    j["value"] = fraction_string(value);
    j["agrees"] = value == formula;
  } else {
    const SameCycleEstimate est = same_cycle_montecarlo(
        opt.h, opt.i, opt.j, opt.trials, opt.seed, opt.jobs);
    j["method"] = "montecarlo";
    j["value"] = est.value;
    j["stderr"] = est.stderr_;
    j["hits"] = est.hits;
    j["trials"] = est.trials;
    j["seed"] = est.seed;
    j["jobs"] = est.jobs;
    const double target = mpq_get_d(formula.get_mpq_t());
    j["agrees"] = std::abs(est.value - target) <= 4.0 * est.stderr_;
  }
  return dump(j);
}

std::string hultman_csv(int n, HultmanMethod method) {
  HultmanTable table;
  switch (method) {
    case HultmanMethod::direct: table = hultman_direct(n); break;
    case HultmanMethod::product: table = hultman_product(n); break;
    case HultmanMethod::formula: table = hultman_formula_table(n); break;
  }
  std::ostringstream os;
  os << "n,k,count,method\n";
  for (int k = 1; k <= n + 1; ++k)
    os << n << ',' << k << ',' << table.at(k).get_str() << ','
       << to_string(method) << '\n';
  return os.str();
}

std::string table_csv(int max_n) {
  if (max_n < 1) throw std::invalid_argument("table needs max-n >= 1");
  std::ostringstream os;
  os << "n,k,count,method\n";
  for (int n = 1; n <= max_n; ++n) {
    const HultmanTable table = hultman_formula_table(n);
    for (int k = 1; k <= n + 1; ++k)
      os << n << ',' << k << ',' << table.at(k).get_str() << ",formula\n";
  }
  return os.str();
}

std::string averages_csv(int max_n, int brute_max) {
  if (max_n < 1) throw std::invalid_argument("averages needs max-n >= 1");
  std::ostringstream os;
  os << "n,a_exact,a_float,b_exact,b_float,brute_checked\n";
  for (int n = 1; n <= max_n; ++n) {
    const Rational a = avg_cycles_closed(n);
    const Rational b = avg_distance_closed(n);
    bool checked = false;
    if (n >= 2 && n <= brute_max) {
      bool ok = true;
      if (n <= 10) { ok = ok && avg_cycles_brute(n) == a; checked = true; }
      if (n <= 8) { ok = ok && avg_distance_brute(n) == b; checked = true; }
      if (!ok)
        throw invariant_violation("brute-force average disagrees at n = " +
                                  std::to_string(n));
    }
    os << n << ',' << fraction_string(a) << ',' << decimal_string(a, 20)
       << ',' << fraction_string(b) << ',' << decimal_string(b, 20) << ','
       << (checked ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace blocksort
