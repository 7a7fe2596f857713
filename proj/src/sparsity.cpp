#include "nearplanar/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace nearplanar {

namespace {

// (k,l) pebble game for l < 2k.  Each vertex starts with k pebbles; an edge is
// accepted once l + 1 pebbles can be gathered on its ends.  When that fails,
// the vertices reachable from the ends form a violating set.
class PebbleGame {
 public:
  PebbleGame(int n, int k, int l) : n_(n), k_(k), l_(l), pebbles_(n, k), out_(n) {}

  // Returns the blocking set when uv cannot be accepted.
  std::optional<VertexSet> add(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < l_ + 1) {
      if (pebbles_[u] < k_ && fetch(u, v)) continue;
      if (pebbles_[v] < k_ && fetch(v, u)) continue;
      return reach(u, v);
    }
    // Orient the new edge away from the end that pays for it.
    const int tail = pebbles_[u] > 0 ? u : v;
    --pebbles_[tail];
    out_[tail].push_back(tail == u ? v : u);
    return std::nullopt;
  }

 private:
  // Moves one pebble to `root` along a directed path avoiding `keep`.
  bool fetch(int root, int keep) {
    std::vector<int> parent(n_, -1);
    parent[root] = root;
    parent[keep] = keep;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int a = queue[qi];
      for (int b : out_[a]) {
        if (parent[b] >= 0) continue;
        parent[b] = a;
        if (pebbles_[b] > 0) {
          --pebbles_[b];
          ++pebbles_[root];
          // Reverse the path root -> ... -> b.
          for (int c = b; c != root; c = parent[c]) {
            const int p = parent[c];
            auto& from = out_[p];
            from.erase(std::find(from.begin(), from.end(), c));
            out_[c].push_back(p);
          }
          return true;
        }
        queue.push_back(b);
      }
    }
    return false;
  }

  VertexSet reach(int u, int v) const {
    VertexSet seen;
    seen.insert(u);
    seen.insert(v);
    std::vector<int> stack{u, v};
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : out_[a]) {
        if (!seen.contains(b)) {
          seen.insert(b);
          stack.push_back(b);
        }
      }
    }
    return seen;
  }

  int n_;
  int k_;
  int l_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

// Dinic max flow on a small dense-ish network.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  void add(int a, int b, int cap) {
    to_.push_back(b);
    cap_.push_back(cap);
    next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
    to_.push_back(a);
    cap_.push_back(0);
    next_.push_back(head_[b]);
    head_[b] = static_cast<int>(to_.size()) - 1;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from s in the final residual network.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int e = head_[a]; e >= 0; e = next_[e]) {
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int a = queue[qi];
      for (int e = head_[a]; e >= 0; e = next_[e]) {
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[a] + 1;
          queue.push_back(to_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int a, int t, int pushed) {
    if (a == t) return pushed;
    for (int& e = it_[a]; e >= 0; e = next_[e]) {
      const int b = to_[e];
      if (cap_[e] <= 0 || level_[b] != level_[a] + 1) continue;
      if (int f = dfs(b, t, std::min(pushed, cap_[e]))) {
        cap_[e] -= f;
        cap_[e ^ 1] += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// min over X containing `forced` of k|X| - i(X), with a minimising X.
std::pair<int, VertexSet> closure_deficit(const Graph& g, const EdgeSet& edges, int k, VertexSet forced) {
  const int n = g.order();
  const int m = static_cast<int>(edges.size());
  const int source = 0;
  const int sink = 1;
  const int inf = 4 * (m + k * n + 1);
  MaxFlow flow(2 + m + n);
  for (int i = 0; i < m; ++i) {
    flow.add(source, 2 + i, 1);
    flow.add(2 + i, 2 + m + edges[i].u, inf);
    flow.add(2 + i, 2 + m + edges[i].v, inf);
  }
  for (int v = 0; v < n; ++v) flow.add(2 + m + v, sink, k);
  for (int v : forced) flow.add(source, 2 + m + v, inf);
  const int cut = flow.run(source, sink);
  const auto side = flow.source_side(source);
  VertexSet x;
  for (int v = 0; v < n; ++v)
    if (side[2 + m + v]) x.insert(v);
  return {cut - m, x};
}

std::optional<VertexSet> brute_force_violation(const Graph& g, int k, int l, int min_size) {
  const int n = g.order();
  if (n > 20) throw UnsupportedSizeError("custom sparsity set sizes are limited to 20 vertices");
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const VertexSet x(s);
    if (x.size() >= min_size && g.induced_edge_count(x) > k * x.size() - l) return x;
  }
  return std::nullopt;
}

std::optional<VertexSet> find_violation(const Graph& g, const SparsityParams& p) {
  const int n = g.order();
  const int k = p.k;
  const int l = p.l;
  const int min_size = p.effective_min_size();
  // Sets too small for the bound to be non-negative violate without edges.
  const int smallest = std::max(min_size, 1);
  if (smallest <= n && k * smallest - l < 0) return VertexSet::full(smallest);

  if (min_size != k) return brute_force_violation(g, k, l, min_size);
  if (g.size() > k * n - l && n >= min_size) return g.vertices();

  const EdgeSet edges = g.edges();
  if (l < 2 * k) {
    PebbleGame game(n, k, l);
    for (const Edge& e : edges) {
      if (auto blocked = game.add(e.u, e.v)) return blocked;
    }
    return std::nullopt;
  }

  // l = 2k.  For k <= 2 pairs count, so forcing the two ends suffices.  For
  // k >= 3 a minimal violating set has at least three vertices and minimum
  // degree above k inside it, so it contains a third neighbour of u.
  for (const Edge& e : edges) {
    VertexSet ends = VertexSet::single(e.u) | VertexSet::single(e.v);
    if (k <= 2) {
      auto [deficit, x] = closure_deficit(g, edges, k, ends);
      if (deficit < l) return x;
      continue;
    }
    for (int w : g.neighbors(e.u) - VertexSet::single(e.v)) {
      auto [deficit, x] = closure_deficit(g, edges, k, ends | VertexSet::single(w));
      if (deficit < l) return x;
    }
  }
  return std::nullopt;
}

}  // namespace

SparsityVerdict check_sparsity(const Graph& g, const SparsityParams& p) {
  if (p.k < 1 || p.l < 0) throw PreconditionError("sparsity needs k >= 1 and l >= 0");
  if (p.l > 2 * p.k) {
    throw UnsupportedParametersError("sparsity with l > 2k is not supported (k=" + std::to_string(p.k) +
                                     ", l=" + std::to_string(p.l) + ")");
  }
  SparsityVerdict v;
  v.violating_set = find_violation(g, p);
  v.sparse = !v.violating_set;
  v.tight = v.sparse && g.size() == p.k * g.order() - p.l;
  return v;
}

bool is_sparse_36(const Graph& g) { return check_sparsity(g, SparsityParams{3, 6, -1}).sparse; }

std::optional<VertexSet> maximal_critical_set(const Graph& g, int x, int y, int excluded) {
  const int n = g.order();
  if (x == y) throw PreconditionError("maximal_critical_set needs x != y");
  if (excluded == x || excluded == y) throw PreconditionError("excluded vertex must differ from x and y");
  for (int v : {x, y, excluded})
    if (v < 0 || v >= n) throw PreconditionError("vertex out of range");
  if (n > kMaxCriticalSetOrder) {
    throw UnsupportedSizeError("maximal_critical_set is limited to " + std::to_string(kMaxCriticalSetOrder) +
                               " vertices");
  }
  // Only V - excluded is searched, so only that part has to be sparse.
  Graph rest = g;
  for (int w : g.neighbors(excluded)) rest.remove_edge(excluded, w);
  if (!is_sparse_36(rest)) {
    throw PreconditionError("maximal_critical_set needs G - excluded to be (3,6)-sparse");
  }

  const VertexSet pair = VertexSet::single(x) | VertexSet::single(y);
  const VertexSet pool = g.vertices() - VertexSet::single(excluded) - pair;
  std::optional<VertexSet> best;
  std::vector<int> best_list;
  const std::vector<int> free = pool.to_vector();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
    VertexSet s = pair;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1U) s.insert(free[i]);
    if (g.induced_edge_count(s) != 3 * s.size() - 6) continue;
    const auto list = s.to_vector();
    if (!best || s.size() > best->size() || (s.size() == best->size() && list < best_list)) {
      best = s;
      best_list = list;
    }
  }
  return best;
}

std::optional<std::pair<int, int>> admissible_one_reduction(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  if (g.degree(v) != 4) throw PreconditionError("admissible_one_reduction needs a vertex of degree 4");
  if (!is_sparse_36(g)) throw PreconditionError("admissible_one_reduction needs a (3,6)-sparse graph");
  const std::vector<int> nbrs = g.neighbors(v).to_vector();
  Graph base = g;
  for (int w : nbrs) base.remove_edge(v, w);
  // The isolated v cannot take part in a violating set, so it may stay.
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.has_edge(nbrs[i], nbrs[j])) continue;
      if (is_sparse_36(base.with_edge(nbrs[i], nbrs[j]))) return std::make_pair(nbrs[i], nbrs[j]);
    }
  }
  return std::nullopt;
}

}  // namespace nearplanar
