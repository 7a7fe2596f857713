#include "nearplanar/classify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "nearplanar/detail/parallel.hpp"
#include "nearplanar/planarity.hpp"

namespace nearplanar {

using ordered_json = nlohmann::ordered_json;

// facts ----------------------------------------------------------------------

GraphFacts::GraphFacts(Graph g, RandomConfig cfg) : g_(std::move(g)), cfg_(std::move(cfg)), m_(g_.size()) {}

bool GraphFacts::planar() {
  if (!planar_) planar_ = nearplanar::planar(g_);
  return *planar_;
}

const std::vector<int>& GraphFacts::apex_vertices() {
  if (!apex_vertices_) {
    std::vector<int> out;
    for (int v = 0; v < g_.order(); ++v)
      if (nearplanar::planar(g_.without_vertex(v))) out.push_back(v);
    apex_vertices_ = std::move(out);
  }
  return *apex_vertices_;
}

bool GraphFacts::apex() {
  if (vertex_apicity_) return vertex_apicity_->value <= 1;
  return planar() || !apex_vertices().empty();
}

bool GraphFacts::critically_apex() {
  if (!critically_apex_) {
    if (critical_vertex_apicity_) {
      critically_apex_ = *critical_vertex_apicity_ <= 1;
    } else if (planar()) {
      critically_apex_ = true;
    } else {
      critically_apex_ = static_cast<int>(apex_vertices().size()) == g_.order();
    }
  }
  return *critically_apex_;
}

bool GraphFacts::edge_apex() { return k_edge_apex(1); }

bool GraphFacts::critically_edge_apex() {
  if (!critically_edge_apex_) {
    if (critical_edge_apicity_) {
      critically_edge_apex_ = *critical_edge_apicity_ <= 1;
    } else if (planar()) {
      critically_edge_apex_ = true;
    } else {
      bool all = true;
      for (const Edge& e : g_.edges()) {
        if (!nearplanar::planar(g_.without_edges({e}))) {
          all = false;
          break;
        }
      }
      critically_edge_apex_ = all;
    }
  }
  return *critically_edge_apex_;
}

bool GraphFacts::k_edge_apex(int k) {
  if (edge_apicity_) return edge_apicity_->value <= k;
  if (k >= 0 && planar()) return true;
  auto it = k_edge_apex_.find(k);
  if (it == k_edge_apex_.end()) it = k_edge_apex_.emplace(k, is_k_edge_apex(g_, k)).first;
  return it->second;
}

const VertexApicity& GraphFacts::vertex_apicity() {
  if (!vertex_apicity_) vertex_apicity_ = nearplanar::vertex_apicity(g_);
  return *vertex_apicity_;
}

const EdgeApicity& GraphFacts::edge_apicity() {
  if (!edge_apicity_) edge_apicity_ = nearplanar::edge_apicity(g_);
  return *edge_apicity_;
}

int GraphFacts::critical_vertex_apicity() {
  if (!critical_vertex_apicity_) critical_vertex_apicity_ = nearplanar::critical_vertex_apicity(g_);
  return *critical_vertex_apicity_;
}

int GraphFacts::critical_edge_apicity() {
  if (!critical_edge_apicity_) critical_edge_apicity_ = nearplanar::critical_edge_apicity(g_);
  return *critical_edge_apicity_;
}

const SparsityVerdict& GraphFacts::sparsity() {
  if (!sparsity_) sparsity_ = check_sparsity(g_, SparsityParams{3, 6, -1});
  return *sparsity_;
}

const RankResult& GraphFacts::rank(int d) {
  auto it = rank_.find(d);
  if (it == rank_.end()) it = rank_.emplace(d, generic_rank(g_, d, cfg_)).first;
  return it->second;
}

bool GraphFacts::independent(int d) { return rank(d).rank == m_; }

bool GraphFacts::rigid() { return rank(3).rank == rigid_rank(g_.order(), 3); }

bool GraphFacts::minimally_rigid() { return rigid() && independent(3); }

bool GraphFacts::circuit() {
  // A circuit has a one-dimensional stress space supported on every edge.
  if (m_ == 0 || rank(3).rank != m_ - 1) return false;
  return static_cast<int>(unique_circuit(g_, 3, cfg_).size()) == m_;
}

const GlobalRigidityResult& GraphFacts::global_rigidity() {
  if (!global_) global_ = is_globally_rigid_randomized(g_, 3, cfg_);
  return *global_;
}

int GraphFacts::gcr() {
  if (!gcr_) {
    int d = 1;
    while (!independent(d)) ++d;
    gcr_ = d + 1;
  }
  return *gcr_;
}

int GraphFacts::connectivity() {
  if (!connectivity_) connectivity_ = nearplanar::connectivity(g_);
  return *connectivity_;
}

int GraphFacts::clique_number() {
  if (!clique_number_) clique_number_ = nearplanar::clique_number(g_);
  return *clique_number_;
}

bool GraphFacts::is_cone_of_wheel() {
  if (!cone_of_wheel_) cone_of_wheel_ = nearplanar::is_cone_of_wheel(g_);
  return *cone_of_wheel_;
}

namespace {

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !g.is_connected()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// G is a wheel iff some vertex of degree n - 1 leaves a cycle.
bool is_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  for (int h = 0; h < n; ++h)
    if (g.degree(h) == n - 1 && is_cycle(g.without_vertex(h))) return true;
  return false;
}

bool is_k5(const Graph& g) { return g.order() == 5 && g.is_complete(); }

}  // namespace

bool is_cone_of_wheel(const Graph& g) {
  const int n = g.order();
  // Rim r = n - 2: 2r rim and hub edges, r + 1 edges at the apex.
  if (n < 5 || g.size() != 3 * n - 5) return false;
  for (int a = 0; a < n; ++a)
    if (g.degree(a) == n - 1 && is_wheel(g.without_vertex(a))) return true;
  return false;
}

// rules ----------------------------------------------------------------------

std::string to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::kAgree:
      return "agree";
    case RuleStatus::kCounterexample:
      return "counterexample";
    case RuleStatus::kConjectured:
      return "conjectured";
    case RuleStatus::kUndecided:
      return "undecided";
  }
  return "unknown";
}

namespace {

enum class Applies { kNo, kYes, kConjectured };

struct RuleDef {
  RuleInfo info;
  std::string quantity;
  std::function<Applies(GraphFacts&)> applies;
  std::function<bool(GraphFacts&)> predict;
  // Nullopt when the computation is undecided.
  std::function<std::optional<bool>(GraphFacts&)> compute;
};

Applies when(bool b) { return b ? Applies::kYes : Applies::kNo; }

std::optional<bool> global_verdict(GraphFacts& f) {
  const Verdict v = f.global_rigidity().verdict;
  if (v == Verdict::kUndecided) return std::nullopt;
  return v == Verdict::kYes;
}

// Apex vertex of G whose deletion leaves a triangulation, or -1.
int triangulation_apex(GraphFacts& f) {
  const Graph& g = f.graph();
  for (int v = 0; v < g.order(); ++v) {
    const Graph rest = g.without_vertex(v);
    if (rest.size() == 3 * rest.order() - 6 && is_triangulation(rest)) return v;
  }
  return -1;
}

bool neighbourhood_is_k4(const Graph& g, int v) {
  if (g.degree(v) != 4) return false;
  const Graph h = g.induced(g.neighbors(v));
  return h.is_complete();
}

const std::vector<RuleDef>& rule_table() {
  static const std::vector<RuleDef> table = [] {
    std::vector<RuleDef> t;
    auto sparse = [](GraphFacts& f) { return f.sparse(); };
    auto independent3 = [](GraphFacts& f) -> std::optional<bool> { return f.independent(3); };

    t.push_back({{"planar-independence", "planar graphs are independent in dimension 3"},
                 "independent",
                 [](GraphFacts& f) { return when(f.planar()); },
                 [](GraphFacts&) { return true; },
                 independent3});
    t.push_back({{"maxwell-sparsity", "independent in dimension 3 implies (3,6)-sparse"},
                 "sparse_or_dependent",
                 [](GraphFacts&) { return Applies::kYes; },
                 [](GraphFacts&) { return true; },
                 [](GraphFacts& f) -> std::optional<bool> { return !f.independent(3) || f.sparse(); }});
    t.push_back({{"edge-apex-independence", "edge-apex: independent iff (3,6)-sparse"},
                 "independent",
                 [](GraphFacts& f) { return when(f.edge_apex()); },
                 sparse,
                 independent3});
    t.push_back({{"tight-edge-apex-rank-bound",
                  "(3,6)-tight and k-edge-apex with k >= 1: rank >= 3n - 5 - k"},
                 "rank_bound_holds",
                 [](GraphFacts& f) { return when(f.tight()); },
                 [](GraphFacts&) { return true; },
                 [](GraphFacts& f) -> std::optional<bool> {
                   const int k = std::max(1, f.edge_apicity().value);
                   return f.rank(3).rank >= 3 * f.order() - 5 - k;
                 }});
    t.push_back({{"apex-low-degree-independence",
                  "apex vertex of degree 2, 3, 4 or n - 1: independent iff (3,6)-sparse; degree 5 is "
                  "conjectured"},
                 "independent",
                 [](GraphFacts& f) {
                   const Graph& g = f.graph();
                   const int n = g.order();
                   bool five = false;
                   for (int v : f.apex_vertices()) {
                     const int k = g.degree(v);
                     if (k == 2 || k == 3 || k == 4 || k == n - 1) return Applies::kYes;
                     if (k == 5) five = true;
                   }
                   return five ? Applies::kConjectured : Applies::kNo;
                 },
                 sparse,
                 independent3});
    t.push_back({{"critical-apex-independence", "critically apex: independent iff (3,6)-sparse"},
                 "independent",
                 [](GraphFacts& f) { return when(f.critically_apex()); },
                 sparse,
                 independent3});
    t.push_back({{"critical-2-apex-independence", "critically 2-apex: independent iff (3,6)-sparse"},
                 "independent",
                 [](GraphFacts& f) { return when(f.critically_apex() || f.critical_vertex_apicity() <= 2); },
                 sparse,
                 independent3});
    t.push_back({{"critical-k-edge-apex-independence",
                  "critically k-edge-apex with k <= 7 or n >= k + 5: independent iff (3,6)-sparse"},
                 "independent",
                 [](GraphFacts& f) {
                   const int k = f.critical_edge_apicity();
                   return when(k <= 7 || f.order() >= k + 5);
                 },
                 sparse,
                 independent3});
    t.push_back({{"critical-edge-apex-independent", "critically edge-apex other than K5: independent"},
                 "independent",
                 [](GraphFacts& f) { return when(f.critically_edge_apex() && !is_k5(f.graph())); },
                 [](GraphFacts&) { return true; },
                 independent3});
    t.push_back({{"critical-edge-apex-not-minimally-rigid",
                  "non-planar critically edge-apex: not minimally rigid"},
                 "minimally_rigid",
                 [](GraphFacts& f) { return when(!f.planar() && f.critically_edge_apex()); },
                 [](GraphFacts&) { return false; },
                 [](GraphFacts& f) -> std::optional<bool> { return f.minimally_rigid(); }});
    t.push_back({{"edge-apex-global-rigidity",
                  "edge-apex on n >= 5 vertices: globally rigid iff |E| = 3n - 5 and 4-connected"},
                 "globally_rigid",
                 [](GraphFacts& f) { return when(f.order() >= 5 && f.edge_apex()); },
                 [](GraphFacts& f) { return f.size() == 3 * f.order() - 5 && f.connectivity() >= 4; },
                 global_verdict});
    t.push_back({{"edge-apex-rigid-circuit",
                  "edge-apex on n >= 5 vertices: rigid circuit iff |E| = 3n - 5 and 4-connected"},
                 "rigid_circuit",
                 [](GraphFacts& f) { return when(f.order() >= 5 && f.edge_apex()); },
                 [](GraphFacts& f) { return f.size() == 3 * f.order() - 5 && f.connectivity() >= 4; },
                 [](GraphFacts& f) -> std::optional<bool> { return f.rigid() && f.circuit(); }});
    t.push_back({{"apex-over-triangulation-global-rigidity",
                  "n >= 6 and G - v a triangulation: globally rigid iff 4-connected and N(v) does not "
                  "induce K4"},
                 "globally_rigid",
                 [](GraphFacts& f) { return when(f.order() >= 6 && triangulation_apex(f) >= 0); },
                 [](GraphFacts& f) {
                   const int v = triangulation_apex(f);
                   return f.connectivity() >= 4 && !neighbourhood_is_k4(f.graph(), v);
                 },
                 global_verdict});
    t.push_back({{"critical-edge-apex-global-rigidity",
                  "non-planar critically edge-apex: globally rigid iff K5"},
                 "globally_rigid",
                 [](GraphFacts& f) { return when(!f.planar() && f.critically_edge_apex()); },
                 [](GraphFacts& f) { return is_k5(f.graph()); },
                 global_verdict});
    t.push_back({{"critical-apex-global-rigidity",
                  "non-planar critically apex: globally rigid iff cone of a wheel"},
                 "globally_rigid",
                 [](GraphFacts& f) { return when(!f.planar() && f.critically_apex()); },
                 [](GraphFacts& f) { return f.is_cone_of_wheel(); },
                 global_verdict});
    t.push_back({{"critical-apex-gcr", "critically apex: gcr = 5 iff cone of a wheel, else gcr <= 4"},
                 "gcr_is_5",
                 [](GraphFacts& f) { return when(f.critically_apex()); },
                 [](GraphFacts& f) { return f.is_cone_of_wheel(); },
                 [](GraphFacts& f) -> std::optional<bool> {
                   const int c = f.gcr();
                   if (c > 5) return !f.is_cone_of_wheel();  // always a disagreement
                   return c == 5;
                 }});
    t.push_back({{"two-edge-apex-4d", "2-edge-apex: independent in dimension 4"},
                 "independent_4d",
                 [](GraphFacts& f) { return when(f.k_edge_apex(2)); },
                 [](GraphFacts&) { return true; },
                 [](GraphFacts& f) -> std::optional<bool> { return f.independent(4); }});
    t.push_back({{"three-edge-apex-5d", "3-edge-apex: independent in dimension 5"},
                 "independent_5d",
                 [](GraphFacts& f) { return when(f.k_edge_apex(3)); },
                 [](GraphFacts&) { return true; },
                 [](GraphFacts& f) -> std::optional<bool> { return f.independent(5); }});
    t.push_back({{"three-edge-apex-4d-k6", "3-edge-apex: independent in dimension 4 iff no K6"},
                 "independent_4d",
                 [](GraphFacts& f) { return when(f.k_edge_apex(3)); },
                 [](GraphFacts& f) { return f.clique_number() < 6; },
                 [](GraphFacts& f) -> std::optional<bool> { return f.independent(4); }});
    t.push_back({{"k-apex-dimension", "k-apex: independent in dimension 3 + k"},
                 "independent_3_plus_k",
                 [](GraphFacts&) { return Applies::kYes; },
                 [](GraphFacts&) { return true; },
                 [](GraphFacts& f) -> std::optional<bool> { return f.independent(3 + f.vertex_apicity().value); }});
    t.push_back({{"fixture-apex-sparse-independence",
                  "deliberately false: apex graphs are independent iff (3,6)-sparse",
                  false},
                 "independent",
                 [](GraphFacts& f) { return when(f.apex()); },
                 sparse,
                 independent3});
    return t;
  }();
  return table;
}

const RuleDef& find_rule(const std::string& id) {
  for (const RuleDef& r : rule_table())
    if (r.info.id == id) return r;
  throw UnknownRuleError("unknown rule '" + id + "'");
}

RuleOutcome run_rule(const RuleDef& r, GraphFacts& f, Applies a) {
  RuleOutcome out;
  out.rule = r.info.id;
  out.quantity = r.quantity;
  out.predicted = r.predict(f);
  const std::optional<bool> c = r.compute(f);
  out.computed = c.value_or(false);
  if (!c) {
    out.status = RuleStatus::kUndecided;
  } else if (a == Applies::kConjectured) {
    out.status = RuleStatus::kConjectured;
  } else {
    out.status = *c == out.predicted ? RuleStatus::kAgree : RuleStatus::kCounterexample;
  }
  return out;
}

}  // namespace

const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> infos = [] {
    std::vector<RuleInfo> v;
    for (const RuleDef& r : rule_table()) v.push_back(r.info);
    std::stable_partition(v.begin(), v.end(), [](const RuleInfo& i) { return i.asserted; });
    return v;
  }();
  return infos;
}

bool is_known_rule(const std::string& id) {
  for (const RuleDef& r : rule_table())
    if (r.info.id == id) return true;
  return false;
}

std::optional<RuleOutcome> evaluate_rule(const std::string& id, GraphFacts& facts) {
  const RuleDef& r = find_rule(id);
  const Applies a = r.applies(facts);
  if (a == Applies::kNo) return std::nullopt;
  return run_rule(r, facts, a);
}

bool edge_apex_independence_rule(const Graph& g) {
  if (!is_k_edge_apex(g, 1)) throw RuleNotApplicableError("edge-apex-independence: graph is not edge-apex");
  return is_sparse_36(g);
}

bool global_rigidity_edge_apex_rule(const Graph& g) {
  if (g.order() < 5 || !is_k_edge_apex(g, 1))
    throw RuleNotApplicableError("edge-apex-global-rigidity: needs an edge-apex graph on at least 5 vertices");
  return g.size() == 3 * g.order() - 5 && connectivity(g) >= 4;
}

std::vector<RuleOutcome> critical_class_rules(GraphFacts& facts) {
  static const char* const ids[] = {"critical-apex-independence",        "critical-2-apex-independence",
                                    "critical-k-edge-apex-independence", "critical-edge-apex-independent",
                                    "critical-edge-apex-not-minimally-rigid", "critical-edge-apex-global-rigidity",
                                    "critical-apex-global-rigidity",     "critical-apex-gcr"};
  std::vector<RuleOutcome> out;
  for (const char* id : ids)
    if (auto o = evaluate_rule(id, facts)) out.push_back(*o);
  return out;
}

// gcr and mlt ----------------------------------------------------------------

const std::vector<std::string>& mlt_rule_order() {
  static const std::vector<std::string> order = {
      "complete-mlt",      "gcr-le-4-equality",   "edge-apex-mlt", "critical-apex-mlt", "critical-edge-apex-mlt",
      "two-edge-apex-mlt", "three-edge-apex-mlt", "k-apex-mlt",    "mlt-le-gcr"};
  return order;
}

MltBounds mlt_gcr_bounds(GraphFacts& f) {
  MltBounds b;
  b.gcr = f.gcr();
  const Graph& g = f.graph();

  // Lower bounds: K_w is globally rigid in dimension w - 2 on w vertices;
  // a graph globally rigid in 3 dimensions on >= 5 vertices gives 5.
  b.lower = 1;
  b.lower_rule = "trivial";
  if (g.order() >= 2 && f.clique_number() > b.lower) {
    b.lower = f.clique_number();
    b.lower_rule = "clique-lower-bound";
  }
  if (g.order() >= 5 && b.lower < 5 && f.globally_rigid()) {
    b.lower = 5;
    b.lower_rule = "globally-rigid-lower-bound";
  }

  // Equality rules in precedence order.
  std::optional<std::string> equality;
  if (g.is_complete()) {
    b.lower = b.upper = g.order();
    b.equals_gcr = g.order() == b.gcr;
    b.rule = "complete-mlt";
    b.lower_rule = "complete-mlt";
    return b;
  }
  if (b.gcr <= 4) equality = "gcr-le-4-equality";
  else if (f.edge_apex()) equality = "edge-apex-mlt";
  else if (f.critically_apex()) equality = "critical-apex-mlt";
  else if (f.critically_edge_apex()) equality = "critical-edge-apex-mlt";
  else if (f.k_edge_apex(3) && f.clique_number() >= 6) equality = "three-edge-apex-mlt";
  if (equality) {
    b.lower = b.upper = b.gcr;
    b.equals_gcr = true;
    b.rule = *equality;
    return b;
  }

  // Upper bounds: tightest wins, ties to the earlier rule.
  std::vector<std::pair<std::string, int>> bounds;
  if (f.k_edge_apex(2)) bounds.emplace_back("two-edge-apex-mlt", 5);
  if (f.k_edge_apex(3)) bounds.emplace_back("three-edge-apex-mlt", 5);
  bounds.emplace_back("k-apex-mlt", 4 + f.vertex_apicity().value);
  bounds.emplace_back("mlt-le-gcr", b.gcr);
  const auto& order = mlt_rule_order();
  auto pos = [&](const std::string& id) { return std::find(order.begin(), order.end(), id) - order.begin(); };
  const auto best = std::min_element(bounds.begin(), bounds.end(), [&](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : pos(x.first) < pos(y.first);
  });
  b.upper = std::min(best->second, b.gcr);
  b.rule = best->first;
  b.equals_gcr = false;
  return b;
}

MltBounds mlt_gcr_bounds(const Graph& g, const RandomConfig& cfg) {
  GraphFacts f(g, cfg);
  return mlt_gcr_bounds(f);
}

// reports --------------------------------------------------------------------

std::uint64_t graph_seed(std::uint64_t base, std::uint64_t index) { return derive_seed(base, 0x67726170685fULL, index); }

std::vector<std::string> ClassificationReport::consistency_violations() const {
  std::vector<std::string> out;
  if (circuit && independent) out.push_back("circuit but independent");
  if (minimally_rigid && !(rigid && independent)) out.push_back("minimally rigid but not rigid and independent");
  if (globally_rigid() && n >= 2 && !rigid) out.push_back("globally rigid but not rigid");
  if (mlt.lower > mlt.upper) out.push_back("mlt lower bound exceeds upper bound");
  if (mlt.upper > mlt.gcr) out.push_back("mlt upper bound exceeds gcr");
  return out;
}

namespace {

ordered_json edges_json(const EdgeSet& es) {
  ordered_json a = ordered_json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

std::vector<std::uint64_t> distinct_primes(const std::vector<std::uint64_t>& per_trial) {
  std::vector<std::uint64_t> out;
  for (auto p : per_trial)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::string canonical_or_empty(const Graph& g) {
  try {
    return canonical_code(g, std::max(g.order(), kDefaultCanonicalLimit)).bytes;
  } catch (const Error&) {
    return {};
  }
}

}  // namespace

std::string ClassificationReport::to_json() const {
  ordered_json j;
  if (index >= 0) j["index"] = index;
  j["graph6"] = graph6;
  j["canonical"] = canonical;
  j["n"] = n;
  j["m"] = m;
  j["planar"] = planar;
  j["apicity"] = {{"vertex", apicity.vertex.value},
                  {"edge", apicity.edge.value},
                  {"critical_vertex", apicity.critical_vertex},
                  {"critical_edge", apicity.critical_edge},
                  {"vertex_witness", apicity.vertex.witness},
                  {"edge_witness", edges_json(apicity.edge.witness)}};
  ordered_json sp = {{"sparse", sparsity.sparse}, {"tight", sparsity.tight}};
  sp["violating_set"] = sparsity.violating_set ? ordered_json(sparsity.violating_set->to_vector()) : ordered_json();
  j["sparsity_3_6"] = sp;
  j["rigidity_3d"] = {{"rank", rank.rank},
                      {"independent", independent},
                      {"rigid", rigid},
                      {"minimally_rigid", minimally_rigid},
                      {"circuit", circuit},
                      {"provenance",
                       {{"primes", distinct_primes(rank.primes)},
                        {"rank_per_prime", rank.rank_per_prime},
                        {"trials", rank.trials},
                        {"stable", rank.stable},
                        {"best_prime", rank.best_prime},
                        {"best_seed", rank.best_seed},
                        {"failure_bound", rank.failure_bound}}}};
  j["global_rigidity_3d"] = {
      {"globally_rigid", globally_rigid()}, {"verdict", to_string(global.verdict)}, {"rule", global.rule}};
  j["gcr"] = mlt.gcr;
  ordered_json mj = {{"lower", mlt.lower},
                     {"upper", mlt.upper},
                     {"equals_gcr", mlt.equals_gcr},
                     {"rule", mlt.rule},
                     {"lower_rule", mlt.lower_rule}};
  mj["value"] = mlt.lower == mlt.upper ? ordered_json(mlt.lower) : ordered_json();
  j["mlt"] = mj;
  ordered_json rs = ordered_json::array();
  for (const RuleOutcome& r : rules)
    rs.push_back({{"rule", r.rule},
                  {"quantity", r.quantity},
                  {"status", to_string(r.status)},
                  {"predicted", r.predicted},
                  {"computed", r.computed}});
  j["rules"] = rs;
  j["counterexample"] = counterexample;
  return j.dump();
}

ClassificationReport classify(const Graph& g, const ClassifyConfig& cfg) {
  GraphFacts f(g, cfg.random);
  ClassificationReport r;
  r.graph6 = write_graph6(g);
  r.canonical = canonical_or_empty(g);
  r.index = cfg.index;
  r.n = g.order();
  r.m = g.size();
  r.planar = f.planar();
  r.apicity.vertex = f.vertex_apicity();
  r.apicity.edge = f.edge_apicity();
  r.apicity.critical_vertex = f.critical_vertex_apicity();
  r.apicity.critical_edge = f.critical_edge_apicity();
  r.sparsity = f.sparsity();
  r.rank = f.rank(3);
  r.independent = f.independent(3);
  r.rigid = f.rigid();
  r.minimally_rigid = f.minimally_rigid();
  r.circuit = f.circuit();
  r.global = f.global_rigidity();
  r.mlt = mlt_gcr_bounds(f);
  for (const RuleInfo& info : rule_catalog()) {
    if (!info.asserted) continue;
    if (auto o = evaluate_rule(info.id, f)) {
      if (o->status == RuleStatus::kCounterexample) r.counterexample = true;
      r.rules.push_back(*o);
    }
  }
  return r;
}

// verification ---------------------------------------------------------------

std::vector<std::string> asserted_rules() {
  std::vector<std::string> out;
  for (const RuleInfo& i : rule_catalog())
    if (i.asserted) out.push_back(i.id);
  return out;
}

std::string VerificationReport::to_json() const {
  ordered_json j;
  j["theorem"] = theorem;
  j["census"] = census;
  j["graphs"] = graphs;
  j["applicable"] = applicable;
  j["conjectured"] = conjectured;
  j["undecided"] = undecided;
  j["pass"] = pass();
  ordered_json ids = ordered_json::array();
  ordered_json details = ordered_json::array();
  for (const Counterexample& c : counterexamples) {
    ids.push_back(c.graph6);
    details.push_back(
        {{"graph6", c.graph6}, {"rule", c.rule}, {"predicted", c.predicted}, {"computed", c.computed}, {"seed", c.seed}});
  }
  j["counterexamples"] = ids;
  j["counterexample_details"] = details;
  j["primes"] = primes;
  j["elapsed_seconds"] = elapsed_seconds;
  return j.dump();
}

VerificationReport verify_theorem(const std::string& theorem, const std::vector<Graph>& census,
                                  const std::string& census_description, const RunOptions& opt) {
  std::vector<std::string> ids;
  if (theorem == "all") {
    ids = asserted_rules();
  } else {
    find_rule(theorem);
    ids = {theorem};
  }
  const auto start = std::chrono::steady_clock::now();

  struct PerGraph {
    int applicable = 0;
    int conjectured = 0;
    int undecided = 0;
    std::vector<Counterexample> bad;
  };
  std::vector<PerGraph> results(census.size());
  detail::parallel_for(census.size(), opt.jobs, [&](std::size_t i) {
    RandomConfig rc = opt.random;
    rc.seed = graph_seed(opt.random.seed, i);
    GraphFacts f(census[i], rc);
    PerGraph& out = results[i];
    for (const std::string& id : ids) {
      const auto o = evaluate_rule(id, f);
      if (!o) continue;
      switch (o->status) {
        case RuleStatus::kAgree:
          ++out.applicable;
          break;
        case RuleStatus::kConjectured:
          ++out.conjectured;
          break;
        case RuleStatus::kUndecided:
          ++out.undecided;
          break;
        case RuleStatus::kCounterexample:
          ++out.applicable;
          out.bad.push_back({write_graph6(census[i]), id, o->predicted, o->computed, rc.seed});
          break;
      }
    }
  });

  VerificationReport rep;
  rep.theorem = theorem;
  rep.census = census_description;
  rep.graphs = static_cast<std::int64_t>(census.size());
  rep.primes = opt.random.primes;
  for (PerGraph& p : results) {
    rep.applicable += p.applicable;
    rep.conjectured += p.conjectured;
    rep.undecided += p.undecided;
    for (auto& c : p.bad) rep.counterexamples.push_back(std::move(c));
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// tables ---------------------------------------------------------------------

std::int64_t known_connected_count(int n) {
  static const std::int64_t counts[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};
  if (n < 1 || n > 10) return -1;
  return counts[n - 1];
}

std::string Table::csv_header() const {
  std::string s = "n";
  for (const auto& c : columns) s += "," + c;
  return s;
}

std::string Table::csv_row() const {
  std::string s = std::to_string(n);
  for (auto c : counts) s += "," + std::to_string(c);
  return s;
}

Table tabulate(int table_id, const std::vector<Graph>& census, int n, const RunOptions& opt) {
  Table t;
  t.id = table_id;
  t.n = n;
  switch (table_id) {
    case 1:
    case 2:
      t.columns = {"non_planar", "apex", "critically_apex", "edge_apex", "critically_edge_apex"};
      break;
    case 3:
      t.columns = {"apex", "independent", "dependent", "sparse_apex", "sparse_independent", "sparse_dependent"};
      break;
    default:
      throw PreconditionError("tabulate: table must be 1, 2 or 3");
  }

  const std::int64_t expected = known_connected_count(n);
  if (expected < 0)
    throw IncompleteCensusError("tabulate: no reference count of connected graphs on " + std::to_string(n) +
                                " vertices, so completeness cannot be confirmed");
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < census.size(); ++i)
    if (census[i].order() == n) picked.push_back(i);

  std::vector<std::int64_t> disconnected(picked.size(), 0);
  std::vector<std::string> codes(picked.size());
  std::vector<std::vector<std::int64_t>> rows(picked.size());
  detail::parallel_for(picked.size(), opt.jobs, [&](std::size_t k) {
    const std::size_t i = picked[k];
    const Graph& g = census[i];
    if (!g.is_connected()) {
      disconnected[k] = 1;
      return;
    }
    codes[k] = canonical_code(g).bytes;
    RandomConfig rc = opt.random;
    rc.seed = graph_seed(opt.random.seed, i);
    GraphFacts f(g, rc);
    std::vector<std::int64_t> row(t.columns.size(), 0);
    if (f.planar()) {
      rows[k] = std::move(row);
      return;
    }
    if (table_id == 1 || (table_id == 2 && f.sparse())) {
      row[0] = 1;
      row[1] = f.apex();
      row[2] = f.critically_apex();
      row[3] = f.edge_apex();
      row[4] = f.critically_edge_apex();
    } else if (table_id == 3 && f.apex()) {
      const bool ind = f.independent(3);
      row[0] = 1;
      row[1] = ind;
      row[2] = !ind;
      if (f.sparse()) {
        row[3] = 1;
        row[4] = ind;
        row[5] = !ind;
      }
    }
    rows[k] = std::move(row);
  });

  std::int64_t bad = 0;
  for (auto d : disconnected) bad += d;
  std::vector<std::string> sorted;
  for (std::size_t k = 0; k < picked.size(); ++k)
    if (!disconnected[k]) sorted.push_back(codes[k]);
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  const std::int64_t duplicates = static_cast<std::int64_t>(sorted.size()) - distinct;
  if (bad > 0 || duplicates > 0 || distinct != expected) {
    std::ostringstream msg;
    msg << "tabulate: census for n = " << n << " is incomplete: " << distinct << " distinct connected graphs, expected "
        << expected;
    if (bad) msg << "; " << bad << " disconnected";
    if (duplicates) msg << "; " << duplicates << " duplicates";
    throw IncompleteCensusError(msg.str());
  }

  t.counts.assign(t.columns.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) t.counts[c] += row[c];
  return t;
}

}  // namespace nearplanar
