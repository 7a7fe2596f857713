#include <doctest.h>

#include <json.hpp>

#include "nearplanar/classify.hpp"
#include "nearplanar/constructions.hpp"
#include "test_graphs.hpp"

using namespace nearplanar;
namespace tg = testgraphs;

namespace {

std::vector<Graph> census(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n)
    for (Graph& g : enumerate_connected(n)) out.push_back(std::move(g));
  return out;
}

const RuleOutcome* find(const ClassificationReport& r, const std::string& id) {
  for (const auto& o : r.rules)
    if (o.rule == id) return &o;
  return nullptr;
}

}  // namespace

TEST_CASE("double banana report") {
  const ClassificationReport r = classify(catalog("double_banana"));
  CHECK_FALSE(r.planar);
  CHECK(r.apicity.vertex.value == 1);
  CHECK(r.apicity.edge.value == 2);
  CHECK(r.apicity.critical_vertex == 3);
  CHECK(r.apicity.critical_edge == 8);
  CHECK(r.sparsity.tight);
  CHECK(r.rank.rank == 17);
  CHECK(r.circuit);
  CHECK_FALSE(r.rigid);
  CHECK_FALSE(r.globally_rigid());
  CHECK(r.mlt.gcr == 5);
  CHECK(r.mlt.upper == 5);
  CHECK(r.mlt.lower == 4);
  CHECK(r.mlt.rule == "two-edge-apex-mlt");
  CHECK_FALSE(r.mlt.equals_gcr);
  CHECK_FALSE(r.counterexample);
  CHECK(r.consistency_violations().empty());
  // Degree-6 apex vertices are outside the stated cases.
  CHECK(find(r, "apex-low-degree-independence") == nullptr);
}

TEST_CASE("complete graph and octahedron reports") {
  const ClassificationReport k5 = classify(tg::complete(5));
  CHECK(k5.circuit);
  CHECK(k5.globally_rigid());
  CHECK(k5.mlt.gcr == 5);
  CHECK(k5.mlt.lower == 5);
  CHECK(k5.mlt.upper == 5);
  CHECK(k5.mlt.equals_gcr);
  CHECK(k5.mlt.rule == "complete-mlt");

  const ClassificationReport oct = classify(catalog("octahedron"));
  CHECK(oct.planar);
  CHECK(oct.minimally_rigid);
  CHECK(oct.mlt.gcr <= 4);
  CHECK(oct.mlt.equals_gcr);
  CHECK(oct.mlt.rule == "gcr-le-4-equality");

  const MltBounds k6 = mlt_gcr_bounds(tg::complete(6));
  CHECK(k6.gcr == 6);
  CHECK(k6.lower == 6);
  CHECK(k6.upper == 6);

  for (int n = 2; n <= 7; ++n) {
    const MltBounds b = mlt_gcr_bounds(tg::complete(n));
    CHECK(b.gcr == n);
    CHECK(b.lower == n);
    CHECK(b.equals_gcr);
  }
}

TEST_CASE("cone of wheel is the globally rigid critically apex graph") {
  for (int rim = 3; rim <= 6; ++rim) {
    const ClassificationReport r = classify(catalog("cone_of_wheel", {rim}));
    CHECK(r.globally_rigid());
    CHECK(r.mlt.gcr == 5);
    CHECK(r.mlt.lower == 5);
    CHECK(r.mlt.equals_gcr);
    CHECK_FALSE(r.counterexample);
    CHECK(is_cone_of_wheel(catalog("cone_of_wheel", {rim})));
  }
  CHECK_FALSE(is_cone_of_wheel(catalog("octahedron")));
  CHECK_FALSE(is_cone_of_wheel(tg::complete(6)));
}

TEST_CASE("K3,3 subdivisions are critically edge-apex and independent") {
  Graph g = tg::k33();
  for (int step = 0; step < 3; ++step) {
    const Edge e = g.edges().front();
    g.remove_edge(e.u, e.v);
    const int w = g.add_vertex();
    g.add_edge(e.u, w);
    g.add_edge(w, e.v);
    GraphFacts f(g);
    CHECK(f.critically_edge_apex());
    const auto outcomes = critical_class_rules(f);
    bool seen = false;
    for (const auto& o : outcomes) {
      CHECK(o.status != RuleStatus::kCounterexample);
      if (o.rule == "critical-edge-apex-independent") {
        seen = true;
        CHECK(o.computed);
      }
    }
    CHECK(seen);
  }
}

TEST_CASE("spec rule predictions") {
  CHECK(edge_apex_independence_rule(catalog("octahedron")));
  CHECK_FALSE(edge_apex_independence_rule(catalog("octahedron").with_edge(0, 1)));
  CHECK_THROWS_AS(edge_apex_independence_rule(catalog("double_banana")), RuleNotApplicableError);
  CHECK(global_rigidity_edge_apex_rule(tg::complete(5)));
  CHECK_FALSE(global_rigidity_edge_apex_rule(catalog("octahedron")));
  CHECK_THROWS_AS(global_rigidity_edge_apex_rule(tg::complete(4)), RuleNotApplicableError);
  GraphFacts f(tg::complete(4));
  CHECK_THROWS_AS(evaluate_rule("no-such-rule", f), UnknownRuleError);
}

TEST_CASE("apex degree-five cases are conjectured, not asserted") {
  // Cone over an octahedron minus a vertex's star: apex vertex of degree 5 on 7 vertices.
  Graph g = catalog("octahedron");
  const int v = g.add_vertex();
  for (int u = 0; u < 5; ++u) g.add_edge(u, v);
  GraphFacts f(g);
  const auto o = evaluate_rule("apex-low-degree-independence", f);
  REQUIRE(o);
  bool only_five = true;
  for (int a : f.apex_vertices()) {
    const int k = g.degree(a);
    if (k == 2 || k == 3 || k == 4 || k == g.order() - 1) only_five = false;
  }
  if (only_five) CHECK(o->status == RuleStatus::kConjectured);
}

TEST_CASE("reports are internally consistent on the census n <= 6") {
  std::int64_t i = 0;
  for (const Graph& g : census(1, 6)) {
    ClassifyConfig cfg;
    cfg.index = i++;
    const ClassificationReport r = classify(g, cfg);
    INFO(r.graph6);
    CHECK(r.consistency_violations().empty());
    CHECK_FALSE(r.counterexample);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["n"] == g.order());
    CHECK(j["index"] == cfg.index);
  }
}

TEST_CASE("verification over the census n <= 7") {
  const std::vector<Graph> c = census(1, 7);
  const VerificationReport all = verify_theorem("all", c, "connected n <= 7");
  CHECK(all.pass());
  CHECK(all.graphs == static_cast<std::int64_t>(c.size()));
  CHECK(all.applicable > 0);
  for (const auto& ce : all.counterexamples) FAIL_CHECK(ce.rule, " ", ce.graph6);
  CHECK_THROWS_AS(verify_theorem("bogus", c, "x"), UnknownRuleError);

  // The fixture rule is false only from n = 8 on.
  CHECK(verify_theorem("fixture-apex-sparse-independence", c, "connected n <= 7").pass());
}

TEST_CASE("verification is independent of the worker count") {
  const std::vector<Graph> c = census(6, 6);
  RunOptions one;
  RunOptions four;
  four.jobs = 4;
  const auto a = verify_theorem("all", c, "n = 6", one);
  const auto b = verify_theorem("all", c, "n = 6", four);
  CHECK(a.applicable == b.applicable);
  CHECK(a.conjectured == b.conjectured);
  CHECK(a.counterexamples.size() == b.counterexamples.size());
}

TEST_CASE("tables for n <= 7") {
  const std::vector<Graph> c = census(5, 7);
  const std::vector<std::vector<std::int64_t>> t1 = {{1, 1, 1, 1, 1}, {13, 12, 8, 11, 2}, {207, 190, 40, 156, 4}};
  const std::vector<std::vector<std::int64_t>> t2 = {{7, 7, 7, 7, 2}, {135, 133, 39, 121, 4}};
  const std::vector<std::vector<std::int64_t>> t3 = {{12, 7, 5, 7, 7, 0}, {190, 133, 57, 133, 133, 0}};
  for (int n = 5; n <= 7; ++n) CHECK(tabulate(1, c, n).counts == t1[n - 5]);
  for (int n = 6; n <= 7; ++n) CHECK(tabulate(2, c, n).counts == t2[n - 6]);
  for (int n = 6; n <= 7; ++n) CHECK(tabulate(3, c, n).counts == t3[n - 6]);
  RunOptions four;
  four.jobs = 4;
  CHECK(tabulate(1, c, 7, four).counts == t1[2]);
  CHECK(tabulate(1, c, 6).csv_row() == "6,13,12,8,11,2");
  CHECK(tabulate(1, c, 6).csv_header() == "n,non_planar,apex,critically_apex,edge_apex,critically_edge_apex");
}

TEST_CASE("tabulate refuses incomplete censuses") {
  std::vector<Graph> c = census(6, 6);
  c.pop_back();
  CHECK_THROWS_AS(tabulate(1, c, 6), IncompleteCensusError);
  c.push_back(c.front());
  CHECK_THROWS_AS(tabulate(1, c, 6), IncompleteCensusError);
  CHECK_THROWS_AS(tabulate(1, census(6, 6), 11), IncompleteCensusError);
  CHECK_THROWS_AS(tabulate(4, census(6, 6), 6), PreconditionError);
  CHECK(known_connected_count(10) == 11716571);
}
