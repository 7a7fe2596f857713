#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearplanar/apicity.hpp"
#include "nearplanar/graph.hpp"
#include "nearplanar/rigidity.hpp"
#include "nearplanar/sparsity.hpp"

namespace nearplanar {

class UnknownRuleError : public Error {
 public:
  using Error::Error;
};

class RuleNotApplicableError : public Error {
 public:
  using Error::Error;
};

class IncompleteCensusError : public Error {
 public:
  using Error::Error;
};

// facts ----------------------------------------------------------------------

/// Memoised graph invariants.  Each value is computed on first use, so a rule
/// only pays for what its class predicate and prediction need.  Not
/// thread-safe; use one instance per graph and worker.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g, RandomConfig cfg = {});

  const Graph& graph() const { return g_; }
  const RandomConfig& random() const { return cfg_; }
  int order() const { return g_.order(); }
  int size() const { return m_; }

  bool planar();
  /// Vertices v with G - v planar.
  const std::vector<int>& apex_vertices();
  bool apex();
  bool critically_apex();
  bool edge_apex();
  bool critically_edge_apex();
  bool k_edge_apex(int k);
  const VertexApicity& vertex_apicity();
  const EdgeApicity& edge_apicity();
  int critical_vertex_apicity();
  int critical_edge_apicity();

  const SparsityVerdict& sparsity();
  bool sparse() { return sparsity().sparse; }
  bool tight() { return sparsity().tight; }

  const RankResult& rank(int d = 3);
  bool independent(int d = 3);
  bool rigid();
  bool minimally_rigid();
  bool circuit();
  const GlobalRigidityResult& global_rigidity();
  bool globally_rigid() { return global_rigidity().verdict == Verdict::kYes; }
  int gcr();

  int connectivity();
  int clique_number();
  bool is_cone_of_wheel();

 private:
  Graph g_;
  RandomConfig cfg_;
  int m_;
  std::optional<bool> planar_;
  std::optional<std::vector<int>> apex_vertices_;
  std::optional<bool> critically_apex_;
  std::optional<bool> critically_edge_apex_;
  std::map<int, bool> k_edge_apex_;
  std::optional<VertexApicity> vertex_apicity_;
  std::optional<EdgeApicity> edge_apicity_;
  std::optional<int> critical_vertex_apicity_;
  std::optional<int> critical_edge_apicity_;
  std::optional<SparsityVerdict> sparsity_;
  std::map<int, RankResult> rank_;
  std::optional<GlobalRigidityResult> global_;
  std::optional<int> gcr_;
  std::optional<int> connectivity_;
  std::optional<int> clique_number_;
  std::optional<bool> cone_of_wheel_;
};

/// True when g is the cone over a wheel on at least 4 vertices (K5 included).
bool is_cone_of_wheel(const Graph& g);

// rules ----------------------------------------------------------------------

enum class RuleStatus { kAgree, kCounterexample, kConjectured, kUndecided };
std::string to_string(RuleStatus s);

struct RuleOutcome {
  std::string rule;
  /// What the prediction is about, e.g. "independent" or "globally_rigid".
  std::string quantity;
  RuleStatus status = RuleStatus::kAgree;
  bool predicted = false;
  bool computed = false;
};

struct RuleInfo {
  std::string id;
  std::string statement;
  /// Part of the default classification and of verify "all".
  bool asserted = true;
};

/// Every rule known to the engine, asserted rules first.
const std::vector<RuleInfo>& rule_catalog();
bool is_known_rule(const std::string& id);

/// Nullopt when the rule's class predicate does not hold.
std::optional<RuleOutcome> evaluate_rule(const std::string& id, GraphFacts& facts);

/// Prediction of the edge-apex independence rule; throws
/// RuleNotApplicableError when g is not edge-apex.
bool edge_apex_independence_rule(const Graph& g);
/// Prediction of the edge-apex global rigidity rule: |E| = 3n - 5 and
/// 4-connected.  Throws RuleNotApplicableError outside the class or n < 5.
bool global_rigidity_edge_apex_rule(const Graph& g);
/// Outcomes of the critical-class rules whose predicates hold.
std::vector<RuleOutcome> critical_class_rules(GraphFacts& facts);

// gcr and mlt ----------------------------------------------------------------

struct MltBounds {
  int gcr = 0;
  int lower = 0;
  int upper = 0;
  bool equals_gcr = false;
  /// Winning rule: equality rules first, then the tightest upper bound, ties
  /// by position in the rule table.
  std::string rule;
  std::string lower_rule;
};

MltBounds mlt_gcr_bounds(GraphFacts& facts);
MltBounds mlt_gcr_bounds(const Graph& g, const RandomConfig& cfg = {});

/// MLT rule ids in precedence order.
const std::vector<std::string>& mlt_rule_order();

// reports --------------------------------------------------------------------

struct ClassifyConfig {
  RandomConfig random;
  /// Position in the input stream, echoed in the report; -1 for none.
  std::int64_t index = -1;
};

struct ClassificationReport {
  std::string graph6;
  std::string canonical;
  std::int64_t index = -1;
  int n = 0;
  int m = 0;
  bool planar = false;
  ApicityProfile apicity;
  SparsityVerdict sparsity;
  RankResult rank;
  bool independent = false;
  bool rigid = false;
  bool minimally_rigid = false;
  bool circuit = false;
  GlobalRigidityResult global;
  MltBounds mlt;
  std::vector<RuleOutcome> rules;
  bool counterexample = false;

  bool globally_rigid() const { return global.verdict == Verdict::kYes; }
  /// Internal consistency (circuit excludes independence, minimally rigid
  /// implies rigid and independent, globally rigid implies rigid, mlt bounds
  /// ordered).  Returns the violated statements.
  std::vector<std::string> consistency_violations() const;
  /// Single-line JSON object; field names as in schema/classification_report.schema.json.
  std::string to_json() const;
};

ClassificationReport classify(const Graph& g, const ClassifyConfig& cfg = {});

/// Per-graph base seed used by the batch drivers.
std::uint64_t graph_seed(std::uint64_t base, std::uint64_t index);

// verification ---------------------------------------------------------------

struct RunOptions {
  RandomConfig random;
  int jobs = 1;
};

struct Counterexample {
  std::string graph6;
  std::string rule;
  bool predicted = false;
  bool computed = false;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string theorem;
  std::string census;
  std::int64_t graphs = 0;
  /// Graphs where the class predicate held and the prediction was asserted.
  std::int64_t applicable = 0;
  std::int64_t conjectured = 0;
  std::int64_t undecided = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::uint64_t> primes;
  double elapsed_seconds = 0.0;

  bool pass() const { return counterexamples.empty(); }
  std::string to_json() const;
};

/// Rule ids covered by verify "all".
std::vector<std::string> asserted_rules();

/// `theorem` is a rule id or "all".  Throws UnknownRuleError.
VerificationReport verify_theorem(const std::string& theorem, const std::vector<Graph>& census,
                                  const std::string& census_description, const RunOptions& opt = {});

// tables ---------------------------------------------------------------------

/// Number of connected graphs on n unlabelled vertices, n = 1..10; -1 beyond.
std::int64_t known_connected_count(int n);

struct Table {
  int id = 0;
  int n = 0;
  std::vector<std::string> columns;
  std::vector<std::int64_t> counts;
  std::string csv_header() const;
  std::string csv_row() const;
};

/// Table 1: non-planar / apex / critically apex / edge-apex / critically
/// edge-apex among connected graphs; table 2: the same over (3,6)-sparse
/// graphs; table 3: non-planar apex graphs split by 3-dimensional
/// independence, overall and among (3,6)-sparse ones.  Only graphs of order
/// n are counted; the census must hold every connected graph of order n
/// (count check against known_connected_count), else IncompleteCensusError.
Table tabulate(int table_id, const std::vector<Graph>& census, int n, const RunOptions& opt = {});

}  // namespace nearplanar
