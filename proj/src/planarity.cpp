#include "nearplanar/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <iterator>
#include <json.hpp>

namespace nearplanar {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph b(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [edge, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), b);
    (void)ok;
    boost::put(boost::edge_index, b, edge, index++);
  }
  return b;
}

// Removes vertices of degree at most one and smooths degree-two vertices;
// neither step changes planarity.
Graph reduced_kernel(const Graph& g) {
  Graph h = g;
  VertexSet alive = g.vertices();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v : alive) {
      const int deg = h.degree(v);
      if (deg > 2) continue;
      if (deg == 2) {
        const int a = h.neighbors(v).first();
        const int b = (h.neighbors(v) - VertexSet::single(a)).first();
        h.add_edge(a, b);
      }
      for (int w : h.neighbors(v)) h.remove_edge(v, w);
      alive.erase(v);
      progress = true;
    }
  }
  return h.induced(alive);
}

}  // namespace

bool PlanarEmbedding::satisfies_euler(const Graph& g) const {
  return g.order() - g.size() + static_cast<int>(faces.size()) == 2;
}

std::string to_string(KuratowskiType t) {
  switch (t) {
    case KuratowskiType::kK5:
      return "K5";
    case KuratowskiType::kK33:
      return "K33";
    case KuratowskiType::kNeither:
      break;
  }
  return "neither";
}

bool planar(const Graph& g) {
  if (g.order() <= 4) return true;
  if (g.size() > 3 * g.order() - 6) return false;
  const Graph k = reduced_kernel(g);
  const int n = k.order();
  const int m = k.size();
  if (n <= 4) return true;
  if (m > 3 * n - 6) return false;
  if (n == 5) return m < 10;
  BoostGraph b = to_boost(k);
  return boost::boyer_myrvold_planarity_test(b);
}

std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(rotation[v].size(), 0);
  auto position = [&](int v, int u) {
    const auto& r = rotation[v];
    return static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
  };
  std::vector<std::vector<int>> faces;
  for (int u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < rotation[u].size(); ++i) {
      if (used[u][i]) continue;
      std::vector<int> face;
      int a = u;
      int ai = static_cast<int>(i);
      while (!used[a][ai]) {
        used[a][ai] = 1;
        face.push_back(a);
        const int b = rotation[a][ai];
        const auto& rb = rotation[b];
        const int next = (position(b, a) + 1) % static_cast<int>(rb.size());
        a = b;
        ai = next;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

PlanarityResult is_planar(const Graph& g) {
  BoostGraph b = to_boost(g);
  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(static_cast<std::size_t>(g.order()));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, b));
  std::vector<BoostEdge> kuratowski;
  const bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = b, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  PlanarityResult result;
  result.planar = ok;
  if (ok) {
    PlanarEmbedding emb;
    emb.rotation.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
      for (const BoostEdge& e : storage[static_cast<std::size_t>(v)]) {
        const int s = static_cast<int>(boost::source(e, b));
        const int t = static_cast<int>(boost::target(e, b));
        emb.rotation[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
      }
    }
    emb.faces = trace_faces(emb.rotation);
    result.embedding = std::move(emb);
  } else {
    EdgeSet w;
    for (const BoostEdge& e : kuratowski) {
      w.emplace_back(static_cast<int>(boost::source(e, b)), static_cast<int>(boost::target(e, b)));
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    // The reported subgraph may carry extra edges; an edge-minimal
    // non-planar subgraph is exactly a Kuratowski subdivision.
    Graph h(g.order(), w);
    for (const Edge& e : w) {
      h.remove_edge(e.u, e.v);
      if (planar(h)) h.add_edge(e.u, e.v);
    }
    result.witness = h.edges();
  }
  return result;
}

Triangulated complete_to_triangulation(const Graph& g, const PlanarEmbedding& emb) {
  if (g.order() < 3) throw UnsupportedSizeError("complete_to_triangulation needs at least 3 vertices");
  if (!g.is_connected()) throw PreconditionError("complete_to_triangulation needs a connected graph");
  if (!planar(g)) throw PreconditionError("complete_to_triangulation needs a planar graph");
  if (static_cast<int>(emb.rotation.size()) != g.order()) {
    throw PreconditionError("embedding does not match the graph");
  }

  Graph h = g;
  std::vector<std::vector<int>> rot = emb.rotation;
  EdgeSet added;
  auto insert_after = [&](int v, int after, int w) {
    auto& r = rot[static_cast<std::size_t>(v)];
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, w);
  };

  while (true) {
    auto faces = trace_faces(rot);
    auto long_face = std::find_if(faces.begin(), faces.end(), [](const auto& f) { return f.size() > 3; });
    if (long_face == faces.end()) break;
    const std::vector<int>& f = *long_face;
    const int len = static_cast<int>(f.size());

    std::vector<int> order = f;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    bool done = false;
    for (int x : order) {
      for (int i = 0; i < len && !done; ++i) {
        if (f[i] != x) continue;
        for (int step = 2; step <= len - 2 && !done; ++step) {
          const int j = (i + step) % len;
          const int y = f[j];
          if (y == x || h.has_edge(x, y)) continue;
          insert_after(x, f[(i + len - 1) % len], y);
          insert_after(y, f[(j + len - 1) % len], x);
          h.add_edge(x, y);
          added.emplace_back(x, y);
          done = true;
        }
      }
      if (done) break;
    }
    if (!done) throw Error("complete_to_triangulation: no admissible chord in a face");
  }

  PlanarEmbedding out;
  out.rotation = std::move(rot);
  out.faces = trace_faces(out.rotation);
  return Triangulated{h, added, std::move(out)};
}

bool is_triangulation(const Graph& g) {
  const int n = g.order();
  return n >= 3 && g.size() == 3 * n - 6 && g.is_connected() && planar(g);
}

PlanarEmbedding triangulation_embedding(const Graph& t) {
  if (!is_triangulation(t)) throw PreconditionError("triangulation_embedding needs a triangulation");
  PlanarityResult r = is_planar(t);
  auto normalise = [](std::vector<std::vector<int>> rot) {
    for (auto& r : rot) {
      auto lowest = std::min_element(r.begin(), r.end());
      std::rotate(r.begin(), lowest, r.end());
    }
    return rot;
  };
  auto forward = normalise(r.embedding->rotation);
  auto mirrored = r.embedding->rotation;
  for (auto& row : mirrored) std::reverse(row.begin(), row.end());
  mirrored = normalise(std::move(mirrored));
  PlanarEmbedding emb;
  emb.rotation = std::min(forward, mirrored);
  emb.faces = trace_faces(emb.rotation);
  return emb;
}

namespace {

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (const Edge& e : g.edges()) {
    for (int c : g.neighbors(e.u) & g.neighbors(e.v)) {
      if (c > e.v) out.push_back({e.u, e.v, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 3>> face_triangles(const PlanarEmbedding& emb) {
  std::vector<std::array<int, 3>> out;
  for (const auto& f : emb.faces) {
    if (f.size() != 3) continue;
    std::array<int, 3> t{f[0], f[1], f[2]};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::array<int, 3>> non_facial_triangles(const Graph& t) {
  const auto facial = face_triangles(triangulation_embedding(t));
  std::vector<std::array<int, 3>> out;
  for (const auto& tri : triangles(t)) {
    if (!std::binary_search(facial.begin(), facial.end(), tri)) out.push_back(tri);
  }
  return out;
}

bool is_facial_triangle(const Graph& t, std::array<int, 3> tri) {
  std::sort(tri.begin(), tri.end());
  if (!t.has_edge(tri[0], tri[1]) || !t.has_edge(tri[1], tri[2]) || !t.has_edge(tri[0], tri[2])) {
    return false;
  }
  const auto facial = face_triangles(triangulation_embedding(t));
  return std::binary_search(facial.begin(), facial.end(), tri);
}

std::string StructureTree::to_json() const {
  nlohmann::ordered_json j;
  j["blocks"] = blocks;
  nlohmann::ordered_json ls = nlohmann::ordered_json::array();
  for (const Link& l : links) ls.push_back({l.a, l.b, l.triangle});
  j["links"] = ls;
  return j.dump();
}

namespace {

void split_blocks(const Graph& t, VertexSet part, std::vector<VertexSet>& blocks) {
  const std::vector<int> labels = part.to_vector();
  const Graph sub = t.induced(part);
  const auto cuts = sub.order() >= 5 ? non_facial_triangles(sub) : std::vector<std::array<int, 3>>{};
  if (cuts.empty()) {
    blocks.push_back(part);
    return;
  }
  VertexSet tri;
  for (int x : cuts.front()) tri.insert(labels[static_cast<std::size_t>(x)]);
  // The two sides of a separating triangle are the components of its complement.
  VertexSet rest = part - tri;
  VertexSet side;
  {
    std::uint64_t frontier = VertexSet::single(rest.first()).bits();
    std::uint64_t seen = frontier;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v : VertexSet(frontier)) next |= t.row(v) & rest.bits();
      frontier = next & ~seen;
      seen |= frontier;
    }
    side = VertexSet(seen);
  }
  split_blocks(t, side | tri, blocks);
  split_blocks(t, (rest - side) | tri, blocks);
}

}  // namespace

StructureTree structure_tree(const Graph& t) {
  if (!is_triangulation(t)) throw PreconditionError("structure_tree needs a triangulation");
  std::vector<VertexSet> parts;
  split_blocks(t, t.vertices(), parts);
  StructureTree tree;
  for (VertexSet p : parts) tree.blocks.push_back(p.to_vector());
  std::sort(tree.blocks.begin(), tree.blocks.end());
  for (const auto& tri : non_facial_triangles(t)) {
    std::vector<int> holders;
    for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
      const auto& b = tree.blocks[i];
      if (std::all_of(tri.begin(), tri.end(),
                      [&](int v) { return std::binary_search(b.begin(), b.end(), v); })) {
        holders.push_back(static_cast<int>(i));
      }
    }
    if (holders.size() != 2) throw Error("structure_tree: separating triangle not shared by two blocks");
    tree.links.push_back({holders[0], holders[1], tri});
  }
  std::sort(tree.links.begin(), tree.links.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b, x.triangle) < std::tie(y.a, y.b, y.triangle);
  });
  return tree;
}

KuratowskiType subdivision_type(const Graph& g) {
  const SuppressResult s = suppress_degree_two(strip_isolated(g));
  if (!s.graph) return KuratowskiType::kNeither;
  const Graph& h = *s.graph;
  if (h.order() == 5 && h.is_complete()) return KuratowskiType::kK5;
  if (h.order() == 6 && h.size() == 9) {
    static const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (isomorphic(h, k33)) return KuratowskiType::kK33;
  }
  return KuratowskiType::kNeither;
}

bool validate_kuratowski_witness(const Graph& g, const EdgeSet& witness) {
  Graph h(g.order());
  for (const Edge& e : witness) {
    if (!g.has_edge(e.u, e.v)) return false;
    h.add_edge(e.u, e.v);
  }
  return subdivision_type(h) != KuratowskiType::kNeither;
}

}  // namespace nearplanar
