#include "nearplanar/graph.hpp"

#include <algorithm>
#include <numeric>

namespace nearplanar {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw UnsupportedSizeError("graph order " + std::to_string(n) + " outside 0..64");
  }
}

Graph::Graph(int n, const EdgeSet& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::add_vertex() {
  if (n_ >= kMaxVertices) throw UnsupportedSizeError("graph order would exceed 64");
  adj_[n_] = 0;
  return n_++;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::induced_edge_count(VertexSet s) const {
  int twice = 0;
  for (int v : s) twice += std::popcount(adj_[v] & s.bits());
  return twice / 2;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> keep = s.to_vector();
  return relabeled(keep);
}

Graph Graph::without_edges(const EdgeSet& f) const {
  Graph g = *this;
  for (const Edge& e : f) g.remove_edge(e.u, e.v);
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph g(static_cast<int>(perm.size()));
  for (int i = 0; i < g.n_; ++i) {
    for (int j = i + 1; j < g.n_; ++j) {
      if (has_edge(perm[i], perm[j])) {
        g.adj_[i] |= std::uint64_t{1} << j;
        g.adj_[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return g;
}

int Graph::component_count() const {
  std::uint64_t unseen = vertices().bits();
  int count = 0;
  while (unseen) {
    ++count;
    std::uint64_t frontier = unseen & (~unseen + 1);
    std::uint64_t seen = frontier;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v : VertexSet(frontier)) next |= adj_[v];
      frontier = next & ~seen;
      seen |= frontier;
    }
    unseen &= ~seen;
  }
  return count;
}

bool Graph::is_connected() const { return n_ <= 1 || component_count() == 1; }

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

// graph6 ---------------------------------------------------------------------

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c, std::size_t pos) {
  if (c < 63 || c > 126) {
    throw Graph6Error(Graph6Error::Kind::kBadCharacter,
                      "graph6: invalid character at offset " + std::to_string(pos));
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Graph6Error(Graph6Error::Kind::kEmpty, "graph6: empty record");

  std::size_t pos = 0;
  long long n = 0;
  int first = decode_char(line[0], 0);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // Long forms: 126 followed by 3 bytes (18 bits) or 126 126 and 6 bytes.
    std::size_t width = 3;
    pos = 1;
    if (line.size() > 1 && line[1] == 126) {
      width = 6;
      pos = 2;
    }
    if (line.size() < pos + width) {
      throw Graph6Error(Graph6Error::Kind::kTruncated, "graph6: truncated vertex count");
    }
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | decode_char(line[pos + i], pos + i);
    pos += width;
  }
  if (n > Graph::kMaxVertices) {
    throw Graph6Error(Graph6Error::Kind::kTooLarge,
                      "graph6: " + std::to_string(n) + " vertices exceeds the limit of 64");
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < need) {
    throw Graph6Error(Graph6Error::Kind::kTruncated, "graph6: truncated adjacency data");
  }
  if (line.size() - pos > need) {
    throw Graph6Error(Graph6Error::Kind::kTrailingData, "graph6: trailing characters");
  }

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = decode_char(line[pos + static_cast<std::size_t>(k / 6)], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero in a well-formed record.
  if (need > 0 && bits % 6 != 0) {
    int last = decode_char(line[pos + need - 1], pos + need - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw Graph6Error(Graph6Error::Kind::kBadCharacter, "graph6: non-zero padding bits");
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// canonical forms --------------------------------------------------------------
//
// Individualisation-refinement: refine an ordered partition to an equitable
// one, branch on every vertex of the first non-singleton cell, and keep the
// lexicographically largest adjacency matrix over all discrete leaves.

namespace {

using Partition = std::vector<std::vector<int>>;

void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::uint64_t splitter = 0;
      for (int v : cells[s]) splitter |= std::uint64_t{1} << v;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cells[c].size());
        for (int v : cells[c]) keyed.emplace_back(std::popcount(g.row(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        int last = -1;
        for (auto [k, v] : keyed) {
          if (k != last) {
            pieces.emplace_back();
            last = k;
          }
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<long>(c));
        cells.insert(cells.begin() + static_cast<long>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

// True when every cell and every pair of cells is either complete or empty, so
// all orderings compatible with the partition give the same adjacency matrix.
bool homogeneous(const Graph& g, const Partition& cells) {
  std::vector<std::uint64_t> masks;
  for (const auto& c : cells) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a; b < cells.size(); ++b) {
      const int first = cells[a][0];
      const int expect = std::popcount(g.row(first) & masks[b]);
      const int full = std::popcount(masks[b]) - (a == b ? 1 : 0);
      if (expect != 0 && expect != full) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> permuted_rows(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::uint64_t> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    std::uint64_t r = 0;
    for (int w : g.neighbors(order[i])) r |= std::uint64_t{1} << (63 - pos[w]);
    rows[i] = r;
  }
  return rows;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint64_t> best_rows;
  std::vector<int> best_order;

  void leaf(const Partition& cells) {
    std::vector<int> order;
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    auto rows = permuted_rows(g, order);
    if (best_order.empty() || rows > best_rows) {
      best_rows = std::move(rows);
      best_order = std::move(order);
    }
  }

  void search(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end() || homogeneous(g, cells)) {
      leaf(cells);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> cell = cells[idx];
    for (int v : cell) {
      Partition next = cells;
      std::vector<int> rest;
      for (int w : cell) {
        if (w != v) rest.push_back(w);
      }
      next[idx] = {v};
      next.insert(next.begin() + static_cast<long>(idx) + 1, rest);
      search(std::move(next));
    }
  }
};

std::vector<int> canonical_order(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw UnsupportedSizeError("canonical_code: order " + std::to_string(g.order()) +
                               " exceeds limit " + std::to_string(limit));
  }
  if (g.order() == 0) return {};
  Partition start(1);
  for (int v = 0; v < g.order(); ++v) start[0].push_back(v);
  CanonSearch s{g, {}, {}};
  s.search(std::move(start));
  return s.best_order;
}

}  // namespace

Graph canonical_form(const Graph& g, int limit) { return g.relabeled(canonical_order(g, limit)); }

CanonicalCode canonical_code(const Graph& g, int limit) {
  return CanonicalCode{write_graph6(canonical_form(g, limit))};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int limit = std::max(a.order(), kDefaultCanonicalLimit);
  return canonical_code(a, limit) == canonical_code(b, limit);
}

// enumeration ------------------------------------------------------------------

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw UnsupportedSizeError("enumerate_connected: n must be in 1.." +
                               std::to_string(kMaxEnumerationOrder) +
                               "; larger censuses must be read from graph6 files");
  }
  // Every connected graph has a non-cut vertex, so each class on n vertices is
  // reached by attaching a new vertex to some connected graph on n - 1.
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::vector<std::pair<CanonicalCode, Graph>> found;
    std::vector<CanonicalCode> seen;
    for (const Graph& base : level) {
      const std::uint64_t subsets = std::uint64_t{1} << (order - 1);
      for (std::uint64_t s = 1; s < subsets; ++s) {
        Graph g = base;
        const int v = g.add_vertex();
        for (int u : VertexSet(s)) g.add_edge(u, v);
        Graph canon = canonical_form(g);
        found.emplace_back(CanonicalCode{write_graph6(canon)}, std::move(canon));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (i > 0 && found[i].first == found[i - 1].first) continue;
      level.push_back(found[i].second);
    }
  }
  return level;
}

// elementary queries -------------------------------------------------------------

namespace {

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
// via unit-capacity augmenting paths on the split-vertex network.
int local_connectivity(const Graph& g, int s, int t) {
  const int n = g.order();
  // Node 2v = v_in, 2v+1 = v_out.  Residual capacities in a dense matrix.
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (int v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
  for (const Edge& e : g.edges()) {
    at(2 * e.u + 1, 2 * e.v) = n;
    at(2 * e.v + 1, 2 * e.u) = n;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t qi = 0; qi < queue.size() && parent[sink] < 0; ++qi) {
      const int a = queue[qi];
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  // Some vertex of a minimum separator's complement lies among any best+1
  // vertices, so it suffices to use sources 0..best (Even's argument).
  for (int s = 0; s <= best && s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

namespace {

bool extend_clique(const Graph& g, std::uint64_t candidates, int need) {
  if (need == 0) return true;
  while (candidates && std::popcount(candidates) >= need) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (extend_clique(g, candidates & g.row(v), need - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  return extend_clique(g, g.vertices().bits(), k);
}

int clique_number(const Graph& g) {
  int k = 0;
  while (k < g.order() && has_clique(g, k + 1)) ++k;
  return k;
}

SuppressResult suppress_degree_two(const Graph& g) {
  Graph h = g;
  std::vector<int> label(g.order());
  std::iota(label.begin(), label.end(), 0);
  VertexSet alive = g.vertices();
  while (true) {
    int pick = -1;
    for (int v : alive) {
      if (h.degree(v) == 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    const int a = h.neighbors(pick).first();
    const int b = (h.neighbors(pick) - VertexSet::single(a)).first();
    if (h.has_edge(a, b)) return SuppressResult{std::nullopt, label[pick]};
    h.remove_edge(pick, a);
    h.remove_edge(pick, b);
    h.add_edge(a, b);
    alive.erase(pick);
  }
  return SuppressResult{h.induced(alive), -1};
}

Graph strip_isolated(const Graph& g) {
  VertexSet keep;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.insert(v);
  }
  return g.induced(keep);
}

}  // namespace nearplanar
