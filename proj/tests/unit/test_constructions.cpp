#include <doctest.h>

#include <algorithm>
#include <random>

#include "nearplanar/constructions.hpp"
#include "nearplanar/rigidity.hpp"
#include "test_graphs.hpp"

using namespace nearplanar;
namespace tg = testgraphs;

namespace {

std::vector<int> sample(int n, int k, std::mt19937_64& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return all;
}

bool is_path_tree(const StructureTree& t) {
  if (t.links.size() + 1 != t.blocks.size()) return false;
  std::vector<int> deg(t.blocks.size(), 0);
  for (const auto& l : t.links) {
    ++deg[l.a];
    ++deg[l.b];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

enum { A = 0, B, C, Cp, D, Dp, E, Ep };

}  // namespace

TEST_CASE("zero and one extensions") {
  const Graph k4 = zero_extension(tg::complete(3), 3, {0, 1, 2});
  CHECK(k4 == tg::complete(4));
  CHECK_THROWS_AS(zero_extension(tg::complete(3), 3, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(zero_extension(tg::complete(3), 2, {0, 0}), PreconditionError);

  const Graph t5 = one_extension(tg::complete(4), 3, Edge{0, 1}, {2, 3});
  CHECK(t5.order() == 5);
  CHECK(t5.size() == 9);
  Graph k5e = tg::complete(5);
  k5e.remove_edge(0, 1);
  CHECK(isomorphic(t5, k5e));
  CHECK_THROWS_AS(one_extension(tg::path(3), 2, Edge{0, 2}, {1}), PreconditionError);
  CHECK_THROWS_AS(one_extension(tg::complete(4), 3, Edge{0, 1}, {0, 2}), PreconditionError);
  CHECK_THROWS_AS(one_extension(tg::complete(4), 3, Edge{0, 1}, {2}), PreconditionError);
}

TEST_CASE("extension chains preserve independence") {
  std::mt19937_64 rng(5);
  for (int chain = 0; chain < 500; ++chain) {
    Graph g = tg::complete(4);
    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      if (rng() % 2 == 0) {
        g = zero_extension(g, 3, sample(g.order(), 3, rng));
      } else {
        const EdgeSet edges = g.edges();
        const Edge e = edges[rng() % edges.size()];
        std::vector<int> others;
        for (int v = 0; v < g.order(); ++v)
          if (v != e.u && v != e.v) others.push_back(v);
        std::shuffle(others.begin(), others.end(), rng);
        others.resize(2);
        g = one_extension(g, 3, e, others);
      }
      REQUIRE(is_independent(g, 3));
    }
    CHECK(g.size() == 3 * g.order() - 6);
  }
}

TEST_CASE("double one-extensions") {
  const Graph oct = catalog("octahedron");
  const Graph g = double_one_extension(oct, Edge{0, 2}, {0, 4, 5}, {2, 3, 5});
  CHECK(g.order() == 8);
  CHECK(g.size() == oct.size() + 6);
  CHECK_THROWS_AS(double_one_extension(oct, Edge{0, 2}, {1, 4, 5}, {1, 3, 5}), PreconditionError);
  CHECK_THROWS_AS(double_one_extension(oct, Edge{0, 1}, {0, 4, 5}, {1, 3, 5}), PreconditionError);

  // Applied to triangulations minus an edge, including the split case where
  // u only meets a and v only meets b.
  std::mt19937_64 rng(9);
  int applied = 0;
  int split = 0;
  for (int n = 5; n <= 7; ++n) {
    for (const Graph& t : enumerate_connected(n)) {
      if (!is_triangulation(t)) continue;
      for (int trial = 0; trial < 20; ++trial) {
        const EdgeSet edges = t.edges();
        const Edge removed = edges[rng() % edges.size()];
        const Graph base = t.without_edges({removed});
        const EdgeSet base_edges = base.edges();
        const Edge uv = base_edges[rng() % base_edges.size()];
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
          if (v != uv.u && v != uv.v) rest.push_back(v);
        std::shuffle(rest.begin(), rest.end(), rng);
        std::array<int, 3> na{};
        std::array<int, 3> nb{};
        if (trial % 2 == 0) {
          na = {uv.u, rest[0], rest[1]};
          nb = {uv.v, rest[2], rest[rest.size() > 3 ? 3 : 0]};
          ++split;
        } else {
          na = {uv.u, uv.v, rest[0]};
          nb = {uv.u, rest[1], rest[2]};
        }
        const Graph g2 = double_one_extension(base, uv, na, nb);
        CHECK(g2.size() == base.size() + 6);
        CHECK(is_independent(g2, 3));
        ++applied;
      }
    }
  }
  CHECK(applied > 100);
  CHECK(split > 50);
}

TEST_CASE("cone and joins") {
  CHECK(isomorphic(cone(tg::cycle(4)), catalog("wheel", {4})));
  CHECK(isomorphic(cone(catalog("wheel", {5})), catalog("cone_of_wheel", {5})));

  const Graph vj = vertex_join(tg::complete(4), 3, tg::complete(4), 0);
  CHECK(vj.order() == 7);
  CHECK(vj.size() == 12);
  CHECK(connectivity(vj) == 1);

  const Graph ej = edge_join(tg::complete(5), Edge{0, 4}, tg::complete(5), Edge{0, 4});
  CHECK(ej.order() == 8);
  CHECK(ej.size() == 19);

  const Graph dj = delta_join(tg::complete(4), {0, 1, 2}, tg::complete(4), {1, 2, 3});
  CHECK(dj.order() == 5);
  CHECK(dj.size() == 9);
  CHECK(is_triangulation(dj));

  const Graph oct = catalog("octahedron");
  const auto separating = non_facial_triangles(oct);
  CHECK(separating.empty());
  // Octahedron faces avoid the removed pairs 01, 23, 45.
  CHECK_THROWS_AS(delta_join(oct, {0, 1, 2}, oct, {0, 2, 4}), PreconditionError);
  CHECK_THROWS_AS(delta_join(tg::cycle(4), {0, 1, 2}, oct, {0, 2, 4}), PreconditionError);
}

TEST_CASE("delta joins add their block counts") {
  std::vector<Graph> tris;
  for (int n = 4; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (is_triangulation(g)) tris.push_back(g);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Graph& t1 = tris[rng() % tris.size()];
    const Graph& t2 = tris[rng() % tris.size()];
    const auto faces1 = triangulation_embedding(t1).faces;
    const auto faces2 = triangulation_embedding(t2).faces;
    const auto& f1 = faces1[rng() % faces1.size()];
    const auto& f2 = faces2[rng() % faces2.size()];
    const Graph j = delta_join(t1, {f1[0], f1[1], f1[2]}, t2, {f2[0], f2[1], f2[2]});
    CHECK(j.order() == t1.order() + t2.order() - 3);
    CHECK(j.size() == 3 * j.order() - 6);
    CHECK(is_triangulation(j));
    CHECK(structure_tree(j).blocks.size() == structure_tree(t1).blocks.size() + structure_tree(t2).blocks.size());
  }
}

TEST_CASE("catalog entries validate") {
  for (const std::string& name : catalog_names()) {
    std::vector<std::vector<int>> params;
    if (name == "k_n") params = {{1}, {4}, {7}};
    else if (name == "k_mn") params = {{3, 3}, {2, 5}};
    else if (name == "cycle" || name == "wheel") params = {{3}, {6}};
    else if (name == "cone_of_wheel") params = {{3}, {4}, {5}, {6}, {7}};
    else if (name == "fiorini_family2") params = {{2}, {3}, {4}, {5}, {6}};
    else if (name == "apex_genus_family") params = {{1}, {2}, {3}, {4}};
    else params = {{}};
    for (const auto& p : params) {
      const CatalogEntry e = catalog_entry(name, p);
      INFO(name, " ", p.size() ? p[0] : -1);
      for (const auto& f : e.failed_checks()) FAIL_CHECK("failed check: ", f);
      CHECK_NOTHROW(catalog(name, p));
    }
  }
  CHECK_THROWS_AS(catalog("petersen-ish"), UnknownGraphError);
  CHECK_THROWS_AS(catalog("cycle", {}), PreconditionError);
  CHECK_THROWS_AS(catalog("cone_of_wheel", {2}), PreconditionError);
  CHECK(catalog("cone_of_wheel", {3}) == tg::complete(5));
  CHECK(catalog("double-banana") == catalog("db"));
  CHECK(catalog("k", {5}) == tg::complete(5));
  CHECK(isomorphic(catalog("k33"), tg::k33()));
  CHECK(isomorphic(catalog("double_banana"), tg::double_banana()));
  CHECK(isomorphic(catalog("octahedron"), tg::octahedron()));
}

TEST_CASE("catalog graph facts") {
  const Graph ring = catalog("ring_k4_apex");
  CHECK(generic_rank(ring, 3).rank == 32);
  CHECK(unique_circuit(ring, 3).size() == 33);
  for (int k = 1; k <= 4; ++k) {
    const CatalogEntry e = catalog_entry("apex_genus_family", {k});
    CHECK(e.graph.order() == 6 + 4 * k);
    CHECK(e.graph.size() == 3 * e.graph.order() - 6);
    CHECK(e.annotations.at("euler_genus") == std::to_string(k));
  }
  CHECK(catalog_entry("fiorini_family2", {4}).graph.order() == 11);
}

TEST_CASE("structure tree walkthrough on the figure triangulations") {
  const Graph fig4 = catalog("fig4_triangulation");
  const StructureTree t4 = structure_tree(fig4);
  CHECK(t4.blocks.size() == 5);
  CHECK(is_path_tree(t4));

  // Adding ac yields a K5 circuit on a, b, c, d, e.
  const EdgeSet circuit = unique_circuit(fig4.with_edge(A, C), 3);
  EdgeSet expected;
  const int five[5] = {A, B, C, D, E};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) expected.push_back(Edge{std::min(five[i], five[j]), std::max(five[i], five[j])});
  std::sort(expected.begin(), expected.end());
  CHECK(circuit == expected);

  const Graph fig5 = catalog("fig5_triangulation");
  const StructureTree t5 = structure_tree(fig5);
  CHECK(t5.blocks.size() == 3);
  CHECK(is_path_tree(t5));

  // Completing the figure embedding automatically yields one of the
  // triangulations of the walkthrough.
  const Triangulated auto_t = complete_to_triangulation(catalog("fig4_planar"), fig4_embedding());
  CHECK(is_triangulation(auto_t.graph));
  CHECK(auto_t.added.size() == 2);
}

TEST_CASE("figure one left is not apex as drawn") {
  const CatalogEntry e = catalog_entry("fig1_left");
  CHECK(e.annotations.at("claimed_vertex_apicity") == "1");
  CHECK(e.annotations.at("computed_vertex_apicity") == "2");
  CHECK(catalog_entry("fig1_right").valid());
}
