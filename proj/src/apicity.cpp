#include "nearplanar/apicity.hpp"

#include <algorithm>

#include "nearplanar/detail/combinations.hpp"
#include "nearplanar/planarity.hpp"

namespace nearplanar {

using detail::for_each_combination;

VertexApicity vertex_apicity(const Graph& g) {
  const int n = g.order();
  VertexApicity out;
  for (int k = 0; k <= n; ++k) {
    const bool found = for_each_combination(n, k, [&](const std::vector<int>& s) {
      VertexSet del;
      for (int v : s) del.insert(v);
      if (!planar(g.without_vertices(del))) return false;
      out.value = k;
      out.witness = s;
      return true;
    });
    if (found) return out;
  }
  return out;
}

bool is_k_apex(const Graph& g, int k) {
  for (int j = 0; j <= std::min(k, g.order()); ++j) {
    const bool found = for_each_combination(g.order(), j, [&](const std::vector<int>& s) {
      VertexSet del;
      for (int v : s) del.insert(v);
      return planar(g.without_vertices(del));
    });
    if (found) return true;
  }
  return false;
}

namespace {

int non_isolated(const Graph& g) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) ++c;
  return c;
}

// Whether deleting at most `budget` edges outside `forbidden` makes g planar.
// Any solution must hit a Kuratowski subgraph W; branch i deletes the i-th
// allowed edge of W and forbids the earlier ones, so branches are disjoint.
bool deletable(Graph& g, int budget, Graph& forbidden, EdgeSet& chosen) {
  const int n = non_isolated(g);
  if (n >= 3 && g.size() - budget > 3 * n - 6) return false;
  if (planar(g)) return true;
  if (budget == 0) return false;
  const PlanarityResult r = is_planar(g);
  std::vector<Edge> candidates;
  for (const Edge& e : *r.witness)
    if (!forbidden.has_edge(e.u, e.v)) candidates.push_back(e);
  std::vector<Edge> newly_forbidden;
  bool ok = false;
  for (const Edge& e : candidates) {
    g.remove_edge(e.u, e.v);
    chosen.push_back(e);
    if (deletable(g, budget - 1, forbidden, chosen)) {
      ok = true;
      g.add_edge(e.u, e.v);
      break;
    }
    chosen.pop_back();
    g.add_edge(e.u, e.v);
    forbidden.add_edge(e.u, e.v);
    newly_forbidden.push_back(e);
  }
  for (const Edge& e : newly_forbidden) forbidden.remove_edge(e.u, e.v);
  return ok;
}

bool deletable(const Graph& g, int budget, const Graph& forbidden) {
  Graph h = g;
  Graph f = forbidden;
  EdgeSet chosen;
  return deletable(h, budget, f, chosen);
}

int edge_lower_bound(const Graph& g) {
  const int n = non_isolated(g);
  return n >= 3 ? std::max(0, g.size() - (3 * n - 6)) : 0;
}

}  // namespace

bool is_k_edge_apex(const Graph& g, int k) {
  if (k < 0) return false;
  return deletable(g, k, Graph(g.order()));
}

EdgeApicity edge_apicity(const Graph& g) {
  EdgeApicity out;
  int k = edge_lower_bound(g);
  while (!deletable(g, k, Graph(g.order()))) ++k;
  out.value = k;
  // Lexicographically least deletion set: fix members one at a time, each
  // the smallest edge that still admits a completion from larger edges.
  const EdgeSet edges = g.edges();
  Graph current = g;
  Graph forbidden(g.order());
  std::size_t start = 0;
  for (int picked = 0; picked < k; ++picked) {
    for (std::size_t i = start; i < edges.size(); ++i) {
      const Edge e = edges[i];
      current.remove_edge(e.u, e.v);
      if (deletable(current, k - picked - 1, forbidden)) {
        out.witness.push_back(e);
        start = i + 1;
        forbidden.add_edge(e.u, e.v);  // already deleted; keeps later searches off it
        break;
      }
      current.add_edge(e.u, e.v);
      forbidden.add_edge(e.u, e.v);
    }
  }
  return out;
}

std::optional<int> min_nonplanar_order(const Graph& g) {
  const int n = g.order();
  if (planar(g)) return std::nullopt;
  for (int s = 5; s <= n; ++s) {
    const bool found = for_each_combination(n, s, [&](const std::vector<int>& idx) {
      VertexSet keep;
      for (int v : idx) keep.insert(v);
      return !planar(g.induced(keep));
    });
    if (found) return s;
  }
  return n;
}

int critical_vertex_apicity(const Graph& g) {
  const auto s = min_nonplanar_order(g);
  return s ? g.order() - *s + 1 : 0;
}

bool is_critically_k_apex(const Graph& g, int k) { return critical_vertex_apicity(g) <= k; }

namespace {

// Routes internally disjoint paths between branch-vertex pairs through the
// remaining vertices, requiring every vertex of h to be used.
struct SpanningRouter {
  const Graph& h;
  std::vector<std::pair<int, int>> pairs;
  std::uint64_t used = 0;
  std::uint64_t all = 0;

  bool route(std::size_t i) {
    if (i == pairs.size()) return used == all;
    return extend(i, pairs[i].first, pairs[i].second);
  }

  bool extend(std::size_t i, int at, int target) {
    if (h.has_edge(at, target) && route(i + 1)) return true;
    for (int w : VertexSet(h.row(at) & ~used)) {
      used |= std::uint64_t{1} << w;
      if (extend(i, w, target)) return true;
      used &= ~(std::uint64_t{1} << w);
    }
    return false;
  }
};

bool has_spanning_k33_subdivision(const Graph& h) {
  const int s = h.order();
  if (s < 6 || h.size() < s + 3) return false;
  std::vector<int> rich;
  for (int v = 0; v < s; ++v)
    if (h.degree(v) >= 3) rich.push_back(v);
  return for_each_combination(static_cast<int>(rich.size()), 6, [&](const std::vector<int>& idx) {
    std::vector<int> b;
    for (int i : idx) b.push_back(rich[i]);
    for (int mask = 0; mask < 32; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != 2) continue;
      std::vector<int> left{b[0]};
      std::vector<int> right;
      for (int i = 1; i < 6; ++i) ((mask >> (i - 1)) & 1 ? left : right).push_back(b[i]);
      SpanningRouter r{h, {}, 0, h.vertices().bits()};
      for (int v : b) r.used |= std::uint64_t{1} << v;
      for (int x : left)
        for (int y : right) r.pairs.emplace_back(x, y);
      if (r.route(0)) return true;
    }
    return false;
  });
}

bool some_induced_has_spanning_k33(const Graph& g, int s) {
  return for_each_combination(g.order(), s, [&](const std::vector<int>& idx) {
    VertexSet keep;
    for (int v : idx) keep.insert(v);
    const Graph h = g.induced(keep);
    return !planar(h) && has_spanning_k33_subdivision(h);
  });
}

}  // namespace

std::optional<int> min_kuratowski_size(const Graph& g) {
  const auto s = min_nonplanar_order(g);
  if (!s) return std::nullopt;
  // A K5 subdivision on t vertices has t + 5 edges, a K3,3 subdivision t + 3.
  // At the smallest order s every non-planar induced subgraph is spanned by
  // its Kuratowski subdivision.
  if (some_induced_has_spanning_k33(g, *s)) return *s + 3;
  if (*s + 1 <= g.order() && some_induced_has_spanning_k33(g, *s + 1)) return *s + 4;
  return *s + 5;
}

int critical_edge_apicity(const Graph& g) {
  const auto m = min_kuratowski_size(g);
  return m ? g.size() - *m + 1 : 0;
}

bool is_critically_k_edge_apex(const Graph& g, int k) { return critical_edge_apicity(g) <= k; }

ApicityProfile apicity_profile(const Graph& g) {
  ApicityProfile p;
  p.vertex = vertex_apicity(g);
  p.edge = edge_apicity(g);
  p.critical_vertex = critical_vertex_apicity(g);
  p.critical_edge = critical_edge_apicity(g);
  return p;
}

}  // namespace nearplanar
