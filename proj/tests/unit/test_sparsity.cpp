#include <doctest.h>

#include <random>

#include "nearplanar/sparsity.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

using namespace nearplanar;
namespace tg = testgraphs;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("sparsity examples") {
  auto db = check_sparsity(tg::double_banana());
  CHECK(db.sparse);
  CHECK(db.tight);
  auto k5 = check_sparsity(tg::complete(5));
  CHECK_FALSE(k5.sparse);
  REQUIRE(k5.violating_set);
  CHECK(*k5.violating_set == VertexSet::full(5));
  CHECK(check_sparsity(tg::octahedron()).tight);
  CHECK_FALSE(check_sparsity(tg::complete(4), {2, 3}).sparse);
  CHECK_THROWS_AS(check_sparsity(tg::complete(4), {2, 5}), UnsupportedParametersError);
}

TEST_CASE("sparsity agrees with subset brute force on n <= 10") {
  std::mt19937_64 rng(2024);
  const std::pair<int, int> params[] = {{3, 6}, {2, 3}, {1, 1}, {3, 5}, {2, 4}, {4, 8}, {1, 0}, {3, 3}};
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = random_graph(rng, n, p);
    for (auto [k, l] : params) {
      const auto v = check_sparsity(g, {k, l});
      REQUIRE(v.sparse == oracle::sparse(g, k, l, k));
      if (!v.sparse) {
        REQUIRE(v.violating_set);
        const VertexSet x = *v.violating_set;
        REQUIRE(x.size() >= k);
        REQUIRE(g.induced_edge_count(x) > k * x.size() - l);
      }
    }
  }
}

TEST_CASE("sparsity over the n <= 7 census and monotonicity") {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const bool s = is_sparse_36(g);
      REQUIRE(s == oracle::sparse(g, 3, 6, 3));
      if (!s) continue;
      Graph h = g;
      for (const Edge& e : g.edges())
        if (rng() % 2) h.remove_edge(e.u, e.v);
      REQUIRE(is_sparse_36(h));
    }
  }
}

TEST_CASE("custom minimum set size falls back to subset search") {
  // With pairs counted, (3,6)-sparse graphs have no edges at all.
  CHECK_FALSE(check_sparsity(tg::path(2), {3, 6, 2}).sparse);
  CHECK(check_sparsity(Graph(4), {3, 6, 2}).sparse);
}

TEST_CASE("maximal critical sets") {
  Graph oct_plus = tg::octahedron();
  const int v = oct_plus.add_vertex();
  for (int w : {0, 2, 1, 3}) oct_plus.add_edge(v, w);
  // 0 and 1 are antipodal in the octahedron.
  auto x = maximal_critical_set(oct_plus, 0, 1, v);
  REQUIRE(x);
  CHECK(*x == VertexSet::full(6));
  CHECK_FALSE(maximal_critical_set(tg::cycle(5), 0, 2, 4));
  Graph host = tg::complete(5);
  host.remove_edge(0, 1);
  host.add_vertex();
  host.add_edge(5, 2);
  auto b = maximal_critical_set(host, 0, 1, 5);
  REQUIRE(b);
  CHECK(*b == VertexSet::full(5));
  CHECK_THROWS_AS(maximal_critical_set(host, 0, 0, 5), PreconditionError);
  CHECK_THROWS_AS(maximal_critical_set(host, 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(maximal_critical_set(tg::complete(6), 0, 1, 2), PreconditionError);
}

TEST_CASE("maximal critical sets contain every critical set through x, y (n <= 9)") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(rng, n, 0.55);
    if (!is_sparse_36(g)) continue;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (g.has_edge(x, y)) continue;
        const int ex = (y + 1) % n == x ? (y + 2) % n : (y + 1) % n;
        const auto best = maximal_critical_set(g, x, y, ex);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
          const VertexSet c(s);
          if (!c.contains(x) || !c.contains(y) || c.contains(ex) || c.size() < 3) continue;
          if (g.induced_edge_count(c) != 3 * c.size() - 6) continue;
          REQUIRE(best);
          REQUIRE(c.subset_of(*best));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("admissible 1-reductions") {
  const Graph oct = tg::octahedron();
  for (int v = 0; v < 6; ++v) {
    auto r = admissible_one_reduction(oct, v);
    REQUIRE(r);
    CHECK_FALSE(oct.has_edge(r->first, r->second));
    Graph h = oct.with_edge(r->first, r->second).without_vertex(v);
    CHECK(check_sparsity(h).tight);
  }
  // In the double banana every interior vertex has N(v) = {a, b, two
  // banana mates}; the only non-edge is ab, and G - v + ab contains the
  // other banana plus ab, a K5.  So no pair is admissible.
  const Graph db = tg::double_banana();
  for (int v = 2; v < 8; ++v) {
    REQUIRE(db.degree(v) == 4);
    CHECK_FALSE(admissible_one_reduction(db, v));
    const auto nbrs = db.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!db.has_edge(nbrs[i], nbrs[j]))
          CHECK_FALSE(oracle::sparse(db.with_edge(nbrs[i], nbrs[j]).without_vertex(v), 3, 6, 3));
  }
  Graph k5e = tg::complete(5);
  k5e.remove_edge(0, 1);
  // A degree-4 vertex whose neighbourhood is a K4 would span a K5, so the
  // "no non-adjacent pair" case cannot occur in a sparse graph.  Here N(2)
  // misses the edge 01 and dropping 2 for 01 leaves K4.
  auto r = admissible_one_reduction(k5e, 2);
  REQUIRE(r);
  CHECK(*r == std::make_pair(0, 1));
  CHECK_THROWS_AS(admissible_one_reduction(k5e, 0), PreconditionError);
}
