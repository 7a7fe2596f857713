#include "nearplanar/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "nearplanar/apicity.hpp"
#include "nearplanar/rigidity.hpp"
#include "nearplanar/sparsity.hpp"

namespace nearplanar {

namespace {

void require_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.order()) throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

void require_distinct(const std::vector<int>& vs, const char* what) {
  std::set<int> s(vs.begin(), vs.end());
  if (s.size() != vs.size()) throw PreconditionError(std::string(what) + ": vertices must be distinct");
}

}  // namespace

Graph zero_extension(const Graph& g, int d, const std::vector<int>& neighbors) {
  if (static_cast<int>(neighbors.size()) != d)
    throw PreconditionError("zero_extension: expected " + std::to_string(d) + " neighbours, got " +
                            std::to_string(neighbors.size()));
  require_distinct(neighbors, "zero_extension");
  for (int x : neighbors) require_vertex(g, x, "zero_extension");
  Graph h = g;
  const int v = h.add_vertex();
  for (int x : neighbors) h.add_edge(v, x);
  return h;
}

Graph one_extension(const Graph& g, int d, Edge uv, const std::vector<int>& extra) {
  if (!g.has_edge(uv.u, uv.v)) throw PreconditionError("one_extension: uv is not an edge");
  if (static_cast<int>(extra.size()) != d - 1)
    throw PreconditionError("one_extension: expected " + std::to_string(d - 1) + " extra neighbours");
  std::vector<int> all = extra;
  all.push_back(uv.u);
  all.push_back(uv.v);
  require_distinct(all, "one_extension");
  for (int x : extra) require_vertex(g, x, "one_extension");
  Graph h = g;
  h.remove_edge(uv.u, uv.v);
  const int v = h.add_vertex();
  for (int x : all) h.add_edge(v, x);
  return h;
}

Graph double_one_extension(const Graph& g, Edge uv, const std::array<int, 3>& a_neighbors,
                           const std::array<int, 3>& b_neighbors) {
  if (!g.has_edge(uv.u, uv.v)) throw PreconditionError("double_one_extension: uv is not an edge");
  require_distinct({a_neighbors.begin(), a_neighbors.end()}, "double_one_extension");
  require_distinct({b_neighbors.begin(), b_neighbors.end()}, "double_one_extension");
  auto covered = [&](int x) {
    return std::find(a_neighbors.begin(), a_neighbors.end(), x) != a_neighbors.end() ||
           std::find(b_neighbors.begin(), b_neighbors.end(), x) != b_neighbors.end();
  };
  if (!covered(uv.u) || !covered(uv.v))
    throw PreconditionError("double_one_extension: u and v must be neighbours of a or b");
  for (int x : a_neighbors) require_vertex(g, x, "double_one_extension");
  for (int x : b_neighbors) require_vertex(g, x, "double_one_extension");
  Graph h = g;
  h.remove_edge(uv.u, uv.v);
  const int a = h.add_vertex();
  const int b = h.add_vertex();
  h.add_edge(a, b);
  for (int x : a_neighbors) h.add_edge(a, x);
  for (int x : b_neighbors) h.add_edge(b, x);
  return h;
}

Graph cone(const Graph& g) {
  Graph h = g;
  const int apex = h.add_vertex();
  for (int v = 0; v < apex; ++v) h.add_edge(apex, v);
  return h;
}

namespace {

// Glues g2 onto g1 with g2's vertex ids[i] identified with g1's at[i].
Graph glue(const Graph& g1, const std::vector<int>& at, const Graph& g2, const std::vector<int>& ids) {
  std::vector<int> map(static_cast<std::size_t>(g2.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = at[i];
  Graph h = g1;
  for (int v = 0; v < g2.order(); ++v)
    if (map[v] < 0) map[v] = h.add_vertex();
  for (const Edge& e : g2.edges())
    if (!h.has_edge(map[e.u], map[e.v])) h.add_edge(map[e.u], map[e.v]);
  return h;
}

}  // namespace

Graph vertex_join(const Graph& g1, int a, const Graph& g2, int b) {
  require_vertex(g1, a, "vertex_join");
  require_vertex(g2, b, "vertex_join");
  return glue(g1, {a}, g2, {b});
}

Graph edge_join(const Graph& g1, Edge e1, const Graph& g2, Edge e2) {
  if (!g1.has_edge(e1.u, e1.v) || !g2.has_edge(e2.u, e2.v)) throw PreconditionError("edge_join: not an edge");
  return glue(g1, {e1.u, e1.v}, g2, {e2.u, e2.v});
}

Graph delta_join(const Graph& t1, const std::array<int, 3>& f1, const Graph& t2, const std::array<int, 3>& f2) {
  if (!is_triangulation(t1) || !is_triangulation(t2)) throw PreconditionError("delta_join: inputs must be triangulations");
  require_distinct({f1.begin(), f1.end()}, "delta_join");
  require_distinct({f2.begin(), f2.end()}, "delta_join");
  if (!is_facial_triangle(t1, f1) || !is_facial_triangle(t2, f2))
    throw PreconditionError("delta_join: triangle is not facial");
  return glue(t1, {f1.begin(), f1.end()}, t2, {f2.begin(), f2.end()});
}

// catalog --------------------------------------------------------------------

bool CatalogEntry::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::vector<std::string> CatalogEntry::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [name, ok] : checks)
    if (!ok) out.push_back(name);
  return out;
}

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

bool critically_apex_nonplanar(const Graph& g) {
  if (planar(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!planar(g.without_vertex(v))) return false;
  return true;
}

bool all_degrees(const Graph& g, int d) { return g.min_degree() == d && g.max_degree() == d; }

bool flexible_3d(const Graph& g) { return generic_rank(g, 3).rank < rigid_rank(g.order(), 3); }

// Named label -> index helper for figure transcriptions.
struct Labelled {
  std::vector<std::string> names;
  Graph g{0};

  int id(const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    names.push_back(s);
    g.add_vertex();
    return static_cast<int>(names.size()) - 1;
  }
  /// Whitespace separated "x-y" tokens.
  void edges(const std::string& list) {
    std::istringstream in(list);
    std::string tok;
    while (in >> tok) {
      const auto dash = tok.find('-');
      const int a = id(tok.substr(0, dash));
      const int b = id(tok.substr(dash + 1));
      g.add_edge(a, b);
    }
  }
};

// Double banana labels: a b c c' d d' e e'.
const std::vector<std::string> kBananaLabels = {"a", "b", "c", "c'", "d", "d'", "e", "e'"};
enum { A = 0, B, C, Cp, D, Dp, E, Ep };

Graph fig4_planar_graph() {
  return from_edges(8, {{A, D}, {A, Dp}, {A, E}, {A, Ep}, {B, C}, {B, Cp}, {B, D}, {B, Dp}, {B, E}, {B, Ep},
                        {C, D}, {Cp, Dp}, {C, E}, {Cp, Ep}, {E, D}, {Ep, Dp}});
}

// Two copies of K5 - ab sharing a and b.
Graph double_banana_graph() {
  Graph g(8);
  for (const auto& banana : {std::array<int, 5>{A, B, C, D, E}, std::array<int, 5>{A, B, Cp, Dp, Ep}})
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (i != 0 || j != 1) g.add_edge(banana[i], banana[j]);
  return g;
}

bool red_edges_fit_figure(const Graph& planar_part, const std::vector<Edge>& red) {
  const auto faces = fig4_embedding().faces;
  for (const Edge& e : red) {
    if (planar_part.has_edge(e.u, e.v)) return false;
    const bool shared = std::any_of(faces.begin(), faces.end(), [&](const std::vector<int>& f) {
      return std::find(f.begin(), f.end(), e.u) != f.end() && std::find(f.begin(), f.end(), e.v) != f.end();
    });
    if (!shared) return false;
  }
  return true;
}

CatalogEntry figure_triangulation(const std::string& name, const std::vector<Edge>& red) {
  CatalogEntry out;
  out.name = name;
  out.labels = kBananaLabels;
  const Graph base = fig4_planar_graph();
  out.graph = base;
  for (const Edge& e : red) out.graph.add_edge(e.u, e.v);
  out.checks = {{"triangulation", is_triangulation(out.graph)},
                {"added edges are chords of faces of the figure embedding", red_edges_fit_figure(base, red)}};
  return out;
}

// Petersen graph (outer cycle a0..a4, spokes, inner pentagram) plus a K5 on
// a0, c1, c2, c3, a4 that shares the edge a0 a4.
Graph fig1_left_graph() {
  Graph g(13);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  const int k5[5] = {0, 10, 11, 12, 4};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!g.has_edge(k5[i], k5[j])) g.add_edge(k5[i], k5[j]);
  return g;
}

// 12-cycle a0..a11 with the hexagon on even vertices, two extra triangles
// hanging on the chords a2a8 and a4a10, and the edge e = a0a6.
Graph fig1_right_graph() {
  Graph g(14);
  for (int i = 0; i < 12; ++i) g.add_edge(i, (i + 1) % 12);
  for (int i = 0; i < 12; i += 2) g.add_edge(i, (i + 2) % 12);
  g.add_edge(12, 2);
  g.add_edge(12, 8);
  g.add_edge(2, 8);
  g.add_edge(13, 4);
  g.add_edge(13, 10);
  g.add_edge(4, 10);
  g.add_edge(0, 6);
  return g;
}

// Ring of four K4s (a_w b_w c_w plus the next a) closed up, with a centre o
// joined to every b_w, c_w and to a_3.
Graph ring_k4_apex_graph() {
  Graph g(13);
  auto a = [](int w) { return 3 * w; };
  auto b = [](int w) { return 3 * w + 1; };
  auto c = [](int w) { return 3 * w + 2; };
  const int o = 12;
  for (int w = 0; w < 4; ++w) {
    g.add_edge(a(w), b(w));
    g.add_edge(a(w), c(w));
    g.add_edge(b(w), c(w));
    g.add_edge(b(w), o);
    g.add_edge(c(w), o);
  }
  for (int w = 0; w < 4; ++w) {
    const int nxt = (w + 1) % 4;  // a_{w+1} caps the triangle of copy w
    g.add_edge(a(nxt), b(w));
    g.add_edge(a(nxt), c(w));
    g.add_edge(a(nxt), a(w));
  }
  g.add_edge(a(3), o);
  return g;
}

// Band of triangles between a top path t1..tp and a bottom path b0..bp
// (t_i ~ b_{i-1}, b_i), closed by x ~ b0, tp, bp and y ~ t1, b0, bp, xy.
Graph fiorini_family2_graph(int p) {
  const int n = 2 * p + 3;
  Graph g(n);
  auto t = [](int i) { return i - 1; };
  auto b = [p](int j) { return p + j; };
  const int x = 2 * p + 1;
  const int y = 2 * p + 2;
  for (int i = 1; i < p; ++i) g.add_edge(t(i), t(i + 1));
  for (int j = 0; j < p; ++j) g.add_edge(b(j), b(j + 1));
  for (int i = 1; i <= p; ++i) {
    g.add_edge(t(i), b(i - 1));
    g.add_edge(t(i), b(i));
  }
  g.add_edge(x, b(0));
  g.add_edge(x, t(p));
  g.add_edge(x, b(p));
  g.add_edge(x, y);
  g.add_edge(y, t(1));
  g.add_edge(y, b(0));
  g.add_edge(y, b(p));
  return g;
}

// K5 on 0..4 minus the edge 01, plus w = 5 adjacent to 0, 1, 2.
constexpr int kGenusU = 3;
constexpr int kGenusV = 4;
constexpr int kGenusW = 5;

Graph apex_genus_g0_graph() {
  Graph g = complete(5);
  g.remove_edge(0, 1);
  g.add_vertex();
  g.add_edge(kGenusW, 0);
  g.add_edge(kGenusW, 1);
  g.add_edge(kGenusW, 2);
  return g;
}

// Glues k further copies of G0 along uv, each followed by one edge between
// the w vertices of consecutive copies.  w lies on a face of G0 - u with v.
Graph apex_genus_family_graph(int k) {
  const Graph g0 = apex_genus_g0_graph();
  Graph g = g0;
  int prev_w = kGenusW;
  for (int i = 0; i < k; ++i) {
    const int n1 = g.order();
    g = edge_join(g, Edge{kGenusU, kGenusV}, g0, Edge{kGenusU, kGenusV});
    // Unidentified vertices 0, 1, 2, w of the copy land at n1 .. n1 + 3.
    const int w = n1 + 3;
    g.add_edge(prev_w, w);
    prev_w = w;
  }
  return g;
}

std::string normalise(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  if (name == "k" || name == "complete") return "k_n";
  if (name == "k33") return "k33";
  if (name == "km_n" || name == "kmn" || name == "complete_bipartite") return "k_mn";
  if (name == "db") return "double_banana";
  return name;
}

void require_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw PreconditionError("catalog entry " + name + " takes " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
}

void require_min(const std::string& name, int value, int min) {
  if (value < min) throw PreconditionError("catalog entry " + name + " needs parameter >= " + std::to_string(min));
}

}  // namespace

PlanarEmbedding fig4_embedding() {
  // Figure coordinates: a (0,0), b (0,-2), c/c' at radius 0.8 and angles
  // 210/-30, d/d' at radius 2 and angles 150/30, e/e' at radius 0.5 and
  // angles 210/-30 degrees.
  auto polar = [](double r, double deg) {
    const double t = deg * std::numbers::pi / 180.0;
    return std::pair<double, double>{r * std::cos(t), r * std::sin(t)};
  };
  std::vector<std::pair<double, double>> pos(8);
  pos[A] = {0.0, 0.0};
  pos[B] = {0.0, -2.0};
  pos[C] = polar(0.8, 210);
  pos[Cp] = polar(0.8, -30);
  pos[D] = polar(2.0, 150);
  pos[Dp] = polar(2.0, 30);
  pos[E] = polar(0.5, 210);
  pos[Ep] = polar(0.5, -30);
  const Graph g = fig4_planar_graph();
  PlanarEmbedding emb;
  emb.rotation.resize(8);
  for (int v = 0; v < 8; ++v) {
    std::vector<std::pair<double, int>> around;
    for (int w : g.neighbors(v))
      around.emplace_back(std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first), w);
    std::sort(around.begin(), around.end());
    for (const auto& [angle, w] : around) emb.rotation[v].push_back(w);
  }
  emb.faces = trace_faces(emb.rotation);
  return emb;
}

std::vector<std::string> catalog_names() {
  return {"k_n",           "k_mn",           "k33",
          "cycle",         "wheel",          "cone_of_wheel",
          "octahedron",    "double_banana",  "fig1_left",
          "fig1_right",    "fig4_planar",    "fig4_triangulation",
          "fig5_triangulation", "fiorini_sporadic_1", "fiorini_sporadic_2",
          "fiorini_sporadic_3", "fiorini_family2", "ring_k4_apex",
          "apex_genus_g0", "apex_genus_family"};
}

CatalogEntry catalog_entry(const std::string& raw_name, const std::vector<int>& params) {
  const std::string name = normalise(raw_name);
  CatalogEntry out;
  out.name = name;
  out.params = params;
  auto& checks = out.checks;

  if (name == "k_n") {
    require_params(name, params, 1);
    require_min(name, params[0], 1);
    out.graph = complete(params[0]);
    checks = {{"complete", out.graph.is_complete()}};
  } else if (name == "k_mn" || name == "k33") {
    const std::vector<int> p = name == "k33" ? std::vector<int>{3, 3} : params;
    if (name == "k33") require_params(name, params, 0);
    require_params(name, p, 2);
    require_min(name, p[0], 1);
    require_min(name, p[1], 1);
    out.name = "k_mn";
    out.params = p;
    out.graph = Graph(p[0] + p[1]);
    for (int a = 0; a < p[0]; ++a)
      for (int b = 0; b < p[1]; ++b) out.graph.add_edge(a, p[0] + b);
    checks = {{"m n edges", out.graph.size() == p[0] * p[1]}};
  } else if (name == "cycle") {
    require_params(name, params, 1);
    require_min(name, params[0], 3);
    out.graph = cycle(params[0]);
    checks = {{"2-regular", all_degrees(out.graph, 2)}, {"connected", out.graph.is_connected()}};
  } else if (name == "wheel") {
    require_params(name, params, 1);
    require_min(name, params[0], 3);
    out.graph = cone(cycle(params[0]));
    checks = {{"planar", planar(out.graph)}, {"2 rim edges", out.graph.size() == 2 * params[0]}};
  } else if (name == "cone_of_wheel") {
    require_params(name, params, 1);
    require_min(name, params[0], 3);
    out.graph = cone(cone(cycle(params[0])));
    checks = {{"non-planar and critically apex", critically_apex_nonplanar(out.graph)},
              {"not (3,6)-sparse", !is_sparse_36(out.graph)},
              {"globally rigid in 3 dimensions",
               is_globally_rigid_randomized(out.graph, 3).verdict == Verdict::kYes}};
  } else if (name == "octahedron") {
    require_params(name, params, 0);
    out.graph = complete(6);
    out.graph.remove_edge(0, 1);
    out.graph.remove_edge(2, 3);
    out.graph.remove_edge(4, 5);
    checks = {{"triangulation", is_triangulation(out.graph)},
              {"4-connected", connectivity(out.graph) == 4},
              {"minimally rigid in 3 dimensions", is_minimally_rigid(out.graph, 3)}};
  } else if (name == "double_banana") {
    require_params(name, params, 0);
    out.graph = double_banana_graph();
    out.labels = kBananaLabels;
    const SparsityVerdict s = check_sparsity(out.graph);
    const ApicityProfile ap = apicity_profile(out.graph);
    checks = {{"8 vertices and 18 edges", out.graph.order() == 8 && out.graph.size() == 18},
              {"(3,6)-tight", s.tight},
              {"circuit in 3 dimensions", is_circuit(out.graph, 3)},
              {"not rigid in 3 dimensions", flexible_3d(out.graph)},
              {"apicity profile 1 2 3 8", ap.vertex.value == 1 && ap.edge.value == 2 && ap.critical_vertex == 3 &&
                                              ap.critical_edge == 8}};
  } else if (name == "fig1_left") {
    require_params(name, params, 0);
    out.graph = fig1_left_graph();
    out.labels = {"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2", "b3", "b4", "c1", "c2", "c3"};
    VertexSet petersen;
    for (int v = 0; v < 10; ++v) petersen.insert(v);
    const Graph p = out.graph.induced(petersen);
    checks = {{"13 vertices and 24 edges", out.graph.order() == 13 && out.graph.size() == 24},
              {"non-planar", !planar(out.graph)},
              {"a and b vertices span a 3-regular girth-5 graph on 10 vertices",
               all_degrees(p, 3) && p.size() == 15 && !has_clique(p, 3)}};
    // The figure marks a0 as an apex vertex, but its Petersen part is not
    // apex; the computed value is carried next to the claim.
    const VertexApicity va = vertex_apicity(out.graph);
    out.annotations["claimed_vertex_apicity"] = "1";
    out.annotations["computed_vertex_apicity"] = std::to_string(va.value);
  } else if (name == "fig1_right") {
    require_params(name, params, 0);
    out.graph = fig1_right_graph();
    for (int i = 0; i < 12; ++i) out.labels.push_back("a" + std::to_string(i));
    out.labels.push_back("b1");
    out.labels.push_back("b2");
    checks = {{"14 vertices", out.graph.order() == 14},
              {"non-planar", !planar(out.graph)},
              {"deleting a0a6 leaves a planar graph", planar(out.graph.without_edges({Edge{0, 6}}))}};
  } else if (name == "fig4_planar") {
    require_params(name, params, 0);
    out.graph = fig4_planar_graph();
    out.labels = kBananaLabels;
    const PlanarEmbedding emb = fig4_embedding();
    checks = {{"planar", planar(out.graph)},
              {"figure rotation system satisfies Euler", emb.satisfies_euler(out.graph)},
              {"adding ac and ac' gives the double banana",
               out.graph.with_edge(A, C).with_edge(A, Cp) == double_banana_graph()}};
  } else if (name == "fig4_triangulation") {
    require_params(name, params, 0);
    out = figure_triangulation(name, {Edge{A, B}, Edge{D, Dp}});
  } else if (name == "fig5_triangulation") {
    require_params(name, params, 0);
    out = figure_triangulation(name, {Edge{E, Ep}, Edge{D, Dp}});
  } else if (name == "fiorini_sporadic_1" || name == "fiorini_sporadic_2" || name == "fiorini_sporadic_3") {
    require_params(name, params, 0);
    Labelled l;
    if (name == "fiorini_sporadic_1") {
      l.edges("1-c 1-2 1-b 1-a 2-c 2-n 2-a 3-a 3-b 3-c 3-n a-n a-c b-n b-a");
    } else if (name == "fiorini_sporadic_2") {
      l.edges("1-c 1-3 1-a 1-b 2-b 2-c 2-u 2-v 3-a 3-c 3-u a-v a-c b-u b-v u-v");
    } else {
      l.edges("1-a 1-u 1-w 1-b 2-a 2-c 2-v 2-u 3-b 3-c 3-v 3-w a-v a-w b-v b-u c-u c-w");
    }
    out.graph = l.g;
    out.labels = l.names;
    checks = {{"non-planar and critically apex", critically_apex_nonplanar(out.graph)},
              {"minimum degree 4", out.graph.min_degree() == 4},
              {"(3,6)-sparse", is_sparse_36(out.graph)},
              {"independent in 3 dimensions", is_independent(out.graph, 3)}};
  } else if (name == "fiorini_family2") {
    require_params(name, params, 1);
    require_min(name, params[0], 2);
    out.graph = fiorini_family2_graph(params[0]);
    checks = {{"4-regular", all_degrees(out.graph, 4)},
              {"non-planar and critically apex", critically_apex_nonplanar(out.graph)},
              {"(3,6)-sparse", is_sparse_36(out.graph)},
              {"independent in 3 dimensions", is_independent(out.graph, 3)}};
  } else if (name == "ring_k4_apex") {
    require_params(name, params, 0);
    out.graph = ring_k4_apex_graph();
    const RankResult r = generic_rank(out.graph, 3);
    checks = {{"13 vertices and 33 edges", out.graph.order() == 13 && out.graph.size() == 33},
              {"centre has degree 9", out.graph.degree(12) == 9},
              {"3-connected", connectivity(out.graph) == 3},
              {"apex", is_k_apex(out.graph, 1)},
              {"circuit in 3 dimensions", is_circuit(out.graph, 3)},
              {"not rigid in 3 dimensions", r.rank < rigid_rank(13, 3)}};
  } else if (name == "apex_genus_g0" || name == "apex_genus_family") {
    int k = 0;
    if (name == "apex_genus_family") {
      require_params(name, params, 1);
      require_min(name, params[0], 1);
      k = params[0];
    } else {
      require_params(name, params, 0);
    }
    out.graph = k == 0 ? apex_genus_g0_graph() : apex_genus_family_graph(k);
    out.annotations["euler_genus"] = std::to_string(std::max(k, 1));
    out.annotations["euler_genus_verified"] = "false";
    out.annotations["apex_vertex"] = std::to_string(kGenusU);
    checks = {{"minimally rigid in 3 dimensions", is_minimally_rigid(out.graph, 3)},
              {"deleting u leaves a planar graph", planar(out.graph.without_vertex(kGenusU))},
              {"non-planar", !planar(out.graph)}};
    if (k == 0) checks.emplace_back("every vertex is an apex", critically_apex_nonplanar(out.graph));
  } else {
    throw UnknownGraphError("unknown catalog entry: " + raw_name);
  }
  return out;
}

Graph catalog(const std::string& name, const std::vector<int>& params) {
  CatalogEntry e = catalog_entry(name, params);
  if (!e.valid()) {
    std::string msg = "catalog entry " + e.name + " failed validation:";
    for (const auto& f : e.failed_checks()) msg += " [" + f + "]";
    throw CatalogValidationError(msg);
  }
  return std::move(e.graph);
}

}  // namespace nearplanar
