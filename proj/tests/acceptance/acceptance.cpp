// One line per acceptance criterion: "[PASS]" or "[FAIL]", the criterion
// number, what was compared, the pinned tolerance and the observed values.
// Exit status is non-zero when any gated criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "nearplanar/classify.hpp"
#include "nearplanar/constructions.hpp"
#include "nearplanar/planarity.hpp"
#include "nearplanar/rigidity.hpp"
#include "nearplanar/sparsity.hpp"
#include "oracles.hpp"

using namespace nearplanar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "nearplanar");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  const auto p = t.rfind('\n');
  return p == std::string::npos ? t : t.substr(p + 1);
}

std::map<int, std::string> g_enumerated;

const std::string& enumerated(int n) {
  auto it = g_enumerated.find(n);
  if (it == g_enumerated.end()) it = g_enumerated.emplace(n, cli({"enumerate", "--n", std::to_string(n)}).out).first;
  return it->second;
}

// enumerate --n N | tabulate --table T --n N, through the command-line entry point.
Outcome table_rows(int table, const std::map<int, std::string>& expected, double budget_n8) {
  Outcome o;
  for (const auto& [n, row] : expected) {
    const auto start = Clock::now();
    const CliRun r = cli({"tabulate", "--table", std::to_string(table), "--n", std::to_string(n)}, enumerated(n));
    const double t = seconds_since(start);
    const std::string got = last_line(r.out);
    const bool ok = r.code == 0 && got == row && (n != 8 || t <= budget_n8);
    o.pass = o.pass && ok;
    o.detail += " n=" + std::to_string(n) + ":" + (r.code == 0 ? got : "error " + r.err) + (ok ? "" : " (want " + row + ")") +
                " [" + fmt(t) + "s]";
  }
  return o;
}

Outcome criterion1() {
  return table_rows(1,
                    {{5, "5,1,1,1,1,1"}, {6, "6,13,12,8,11,2"}, {7, "7,207,190,40,156,4"}, {8, "8,5143,4482,258,3398,10"}},
                    600.0);
}

Outcome criterion2() {
  return table_rows(2, {{6, "6,7,7,7,7,2"}, {7, "7,135,133,39,121,4"}, {8, "8,3637,3512,257,3000,10"}}, 600.0);
}

Outcome criterion3() {
  Outcome o = table_rows(3, {{6, "6,12,7,5,7,7,0"}, {7, "7,190,133,57,133,133,0"}, {8, "8,4482,3511,971,3512,3511,1"}},
                         600.0);
  // Every apex graph's rank verdict, computed separately with each default prime.
  const auto primes = default_primes();
  std::int64_t checked = 0;
  std::int64_t unstable = 0;
  for (int n = 6; n <= 8; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (planar(g) || !is_k_apex(g, 1)) continue;
      ++checked;
      std::vector<bool> verdicts;
      for (auto p : primes) {
        RandomConfig rc;
        rc.primes = {p};
        verdicts.push_back(generic_rank(g, 3, rc).rank == g.size());
      }
      if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) != verdicts.end()) ++unstable;
    }
  }
  o.pass = o.pass && unstable == 0;
  o.detail += "; prime stability: " + std::to_string(unstable) + " of " + std::to_string(checked) +
              " apex graphs differ between the two default primes (tolerance 0)";
  return o;
}

Outcome criterion4() {
  const CliRun r = cli({"classify", "--dim", "3"}, cli({"gen", "double-banana"}).out);
  Outcome o;
  if (r.code != 0) return {false, "classify failed: " + r.err};
  const auto j = nlohmann::json::parse(r.out);
  const auto& a = j["apicity"];
  const Graph db = catalog("double_banana");
  const EdgeSet circ = unique_circuit(db, 3);
  const bool tight = j["sparsity_3_6"]["tight"] == true;
  const int rank = j["rigidity_3d"]["rank"];
  const bool circuit_all = circ == db.edges() && j["rigidity_3d"]["circuit"] == true;
  const bool flexible = j["rigidity_3d"]["rigid"] == false;
  const std::vector<int> profile = {a["vertex"], a["edge"], a["critical_vertex"], a["critical_edge"]};
  const bool not_gr = j["global_rigidity_3d"]["globally_rigid"] == false;
  const int g = j["gcr"];
  o.pass = tight && rank == 17 && circuit_all && flexible && profile == std::vector<int>{1, 2, 3, 8} && not_gr && g == 5;
  o.detail = std::string(" tight=") + (tight ? "yes" : "no") + " rank=" + std::to_string(rank) +
             " circuit=" + std::to_string(circ.size()) + "/18 edges rigid=" + (flexible ? "no" : "yes") + " profile=(" +
             std::to_string(profile[0]) + "," + std::to_string(profile[1]) + "," + std::to_string(profile[2]) + "," +
             std::to_string(profile[3]) + ") globally_rigid=" + (not_gr ? "no" : "yes") + " gcr=" + std::to_string(g) +
             " (tolerance: exact)";
  return o;
}

Outcome criterion5() {
  const std::vector<std::string> ids = {"edge-apex-independence",
                                        "critical-apex-independence",
                                        "critical-2-apex-independence",
                                        "critical-k-edge-apex-independence",
                                        "critical-edge-apex-independent",
                                        "edge-apex-global-rigidity",
                                        "apex-low-degree-independence",
                                        "two-edge-apex-4d",
                                        "three-edge-apex-5d",
                                        "three-edge-apex-4d-k6",
                                        "tight-edge-apex-rank-bound"};
  Outcome o;
  const auto start = Clock::now();
  for (const auto& id : ids) {
    const CliRun r = cli({"verify", "--theorem", id, "--max-n", "8"});
    if (r.code == 1) {
      o.pass = false;
      o.detail += " " + id + ": error " + r.err;
      continue;
    }
    const auto j = nlohmann::json::parse(r.out);
    const std::size_t bad = j["counterexamples"].size();
    o.pass = o.pass && r.code == 0 && bad == 0;
    o.detail += " " + id + "=" + std::to_string(bad) + "/" + std::to_string(j["applicable"].get<std::int64_t>());
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t <= 1800.0;
  o.detail += " (counterexamples/applicable over connected n <= 8; tolerance 0; " + fmt(t) + "s of 1800s)";
  return o;
}

Outcome criterion6() {
  enum { A = 0, B, C, Cp, D, Dp, E, Ep };
  const Graph fig4 = catalog("fig4_triangulation");
  const StructureTree t4 = structure_tree(fig4);
  auto is_path = [](const StructureTree& t) {
    if (t.links.size() + 1 != t.blocks.size()) return false;
    std::vector<int> deg(t.blocks.size(), 0);
    for (const auto& l : t.links) ++deg[l.a], ++deg[l.b];
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
  };
  EdgeSet k5;
  const int five[5] = {A, B, C, D, E};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.push_back(Edge{five[i], five[j]});
  std::sort(k5.begin(), k5.end());
  const EdgeSet circ = unique_circuit(fig4.with_edge(A, C), 3);
  const StructureTree t5 = structure_tree(catalog("fig5_triangulation"));
  Outcome o;
  o.pass = t4.blocks.size() == 5 && is_path(t4) && circ == k5 && t5.blocks.size() == 3;
  o.detail = " fig4 blocks=" + std::to_string(t4.blocks.size()) + (is_path(t4) ? " (path)" : " (not a path)") +
             "; circuit after ac = " + std::to_string(circ.size()) + " edges" + (circ == k5 ? " = K5 on a,b,c,d,e" : "") +
             "; fig5 blocks=" + std::to_string(t5.blocks.size()) + " (tolerance: exact)";
  (void)Cp, (void)Dp, (void)Ep;
  return o;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Outcome criterion7() {
  Outcome o;
  // (a) coning
  std::int64_t a_bad = 0, a_n = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const Graph c = cone(g);
      for (int d = 1; d <= 3; ++d) {
        ++a_n;
        if (is_independent(g, d) != is_independent(c, d + 1)) ++a_bad;
        if (g.size() > 0 && is_circuit(g, d) != is_circuit(c, d + 1)) ++a_bad;
      }
    }
  }
  // (b) d = 1 cycle matroid on every labelled graph n <= 7; d = 2 against
  // (2,3)-sparsity on connected graphs n <= 7 (both sides are componentwise).
  std::int64_t b_bad = 0, b_n = 0;
  for (int n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back(Edge{u, v});
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      for (int i = 0; i < pairs; ++i)
        if (mask >> i & 1U) g.add_edge(all[i].u, all[i].v);
      ++b_n;
      if (generic_rank(g, 1).rank != n - g.component_count()) ++b_bad;
    }
    for (const Graph& g : enumerate_connected(n)) {
      ++b_n;
      if (is_independent(g, 2) != check_sparsity(g, {2, 3}).sparse) ++b_bad;
    }
  }
  // (c) sparsity against subset enumeration
  std::mt19937_64 rng(20240);
  std::int64_t c_bad = 0, c_n = 0;
  const std::pair<int, int> params[] = {{3, 6}, {2, 3}, {1, 1}, {3, 5}, {2, 4}, {1, 0}};
  for (int i = 0; i < 1000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
    for (auto [k, l] : params) {
      ++c_n;
      if (check_sparsity(g, {k, l}).sparse != oracle::sparse(g, k, l, k)) ++c_bad;
    }
  }
  // (d) rank stability: 5 seeds x 2 primes, each prime alone
  std::int64_t d_bad = 0;
  const auto primes = default_primes();
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
    const int d = 1 + static_cast<int>(rng() % 4);
    std::vector<int> ranks;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (auto p : primes) {
        RandomConfig rc;
        rc.primes = {p};
        rc.seed = seed;
        ranks.push_back(generic_rank(g, d, rc).rank);
      }
    }
    if (std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) != ranks.end()) ++d_bad;
  }
  // (e) exact rational oracle
  std::int64_t e_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
    const int d = 1 + static_cast<int>(rng() % 4);
    int exact = 0;
    for (std::uint64_t s = 0; s < 3; ++s) exact = std::max(exact, oracle::exact_rigidity_rank(g, d, 7919 * i + s));
    if (generic_rank(g, d).rank != exact) ++e_bad;
  }
  // (f) catalog self-validation
  std::int64_t f_bad = 0, f_n = 0;
  for (const std::string& name : catalog_names()) {
    std::vector<std::vector<int>> ps;
    if (name == "k_n") ps = {{4}, {5}, {6}, {7}};
    else if (name == "k_mn") ps = {{3, 3}, {2, 5}};
    else if (name == "cycle" || name == "wheel") ps = {{3}, {5}};
    else if (name == "cone_of_wheel") ps = {{3}, {4}, {5}, {6}};
    else if (name == "fiorini_family2") ps = {{2}, {3}, {4}, {5}};
    else if (name == "apex_genus_family") ps = {{1}, {2}, {3}, {4}};
    else ps = {{}};
    for (const auto& p : ps) {
      ++f_n;
      if (!catalog_entry(name, p).valid()) ++f_bad;
    }
  }
  o.pass = a_bad + b_bad + c_bad + d_bad + e_bad + f_bad == 0;
  o.detail = " (a) coning " + std::to_string(a_bad) + "/" + std::to_string(a_n) + " (b) d=1,2 " + std::to_string(b_bad) +
             "/" + std::to_string(b_n) + " (c) sparsity " + std::to_string(c_bad) + "/" + std::to_string(c_n) +
             " (d) stability " + std::to_string(d_bad) + "/1000 (e) exact oracle " + std::to_string(e_bad) +
             "/200 (f) catalog " + std::to_string(f_bad) + "/" + std::to_string(f_n) + " (mismatches/cases; tolerance 0)";
  return o;
}

// The n = 9, 10 rows and the 10/11-vertex circuit counts need external
// censuses.  The gate only checks that a census file is accepted and
// counted; an incomplete file must be refused.
Outcome criterion8() {
  const std::string path = "acceptance_census_n7.g6";
  {
    std::ofstream f(path);
    f << enumerated(7);
  }
  const CliRun ok = cli({"tabulate", "--table", "1", "--n", "7", "--census", path});
  {
    std::ofstream f(path);
    f << enumerated(7).substr(0, enumerated(7).size() / 2);
  }
  const CliRun partial = cli({"tabulate", "--table", "1", "--n", "7", "--census", path});
  std::remove(path.c_str());
  Outcome o;
  o.pass = ok.code == 0 && last_line(ok.out) == "7,207,190,40,156,4" && partial.code == 1;
  o.detail = " declared out of gate: n=9,10 table rows and the 45/1133 circuit counts were not run; census-file "
             "ingestion: complete n=7 file -> " +
             last_line(ok.out) + ", truncated file -> exit " + std::to_string(partial.code);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 table 1 rows n=5..8 (exact; n=8 within 600s)", criterion1},
      {"2 table 2 rows n=6..8 (exact)", criterion2},
      {"3 table 3 rows n=6..8 (exact) and two-prime stability", criterion3},
      {"4 double banana dossier", criterion4},
      {"5 rule verification, exhaustive n<=8", criterion5},
      {"6 structure tree walkthrough", criterion6},
      {"7 property suites (a)-(f)", criterion7},
      {"8 external census harness", criterion8},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ":" << o.detail << " {" << fmt(seconds_since(start))
              << "s}" << std::endl;
  }
  return all ? 0 : 1;
}
