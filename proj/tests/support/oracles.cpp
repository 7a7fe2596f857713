#include "oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <random>

namespace oracle {

int connectivity(const Graph& g) {
  const int n = g.order();
  if (!g.is_connected()) return 0;
  int best = n - 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const VertexSet cut(s);
    if (cut.size() >= best || cut.size() > n - 2) continue;
    if (!g.without_vertices(cut).is_connected()) best = cut.size();
  }
  return best;
}

namespace {

struct Router {
  const Graph& g;
  std::vector<std::pair<int, int>> pairs;
  std::uint64_t used = 0;

  bool extend(int pair, int at, int target) {
    if (g.has_edge(at, target)) {
      if (route(pair + 1)) return true;
    }
    for (int w : g.neighbors(at)) {
      if ((used >> w) & 1U) continue;
      used |= std::uint64_t{1} << w;
      if (extend(pair, w, target)) return true;
      used &= ~(std::uint64_t{1} << w);
    }
    return false;
  }

  bool route(int pair) {
    if (pair == static_cast<int>(pairs.size())) return true;
    return extend(pair, pairs[pair].first, pairs[pair].second);
  }
};

bool combinations(int n, int k, int start, std::vector<int>& cur, const auto& fn) {
  if (static_cast<int>(cur.size()) == k) return fn(cur);
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    if (combinations(n, k, v + 1, cur, fn)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

bool has_kuratowski_subdivision(const Graph& g) {
  const int n = g.order();
  std::vector<int> cur;
  const bool k5 = combinations(n, 5, 0, cur, [&](const std::vector<int>& b) {
    Router r{g, {}, 0};
    for (int i = 0; i < 5; ++i) {
      r.used |= std::uint64_t{1} << b[i];
      for (int j = i + 1; j < 5; ++j) r.pairs.emplace_back(b[i], b[j]);
    }
    return r.route(0);
  });
  if (k5) return true;
  cur.clear();
  return combinations(n, 6, 0, cur, [&](const std::vector<int>& b) {
    // Split the six branch vertices into sides with b[0] on the left.
    for (int mask = 0; mask < 32; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != 2) continue;
      std::vector<int> left{b[0]};
      std::vector<int> right;
      for (int i = 1; i < 6; ++i) ((mask >> (i - 1)) & 1 ? left : right).push_back(b[i]);
      Router r{g, {}, 0};
      for (int v : b) r.used |= std::uint64_t{1} << v;
      for (int x : left)
        for (int y : right) r.pairs.emplace_back(x, y);
      if (r.route(0)) return true;
    }
    return false;
  });
}

bool sparse(const Graph& g, int k, int l, int min_size) {
  const int n = g.order();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const VertexSet x(s);
    if (x.size() < min_size) continue;
    if (g.induced_edge_count(x) > k * x.size() - l) return false;
  }
  return true;
}

std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1U) g.add_edge(slots[b].first, slots[b].second);
    out.push_back(g);
  }
  return out;
}

int exact_rigidity_rank(const Graph& g, int d, std::uint64_t seed) {
  using boost::multiprecision::cpp_int;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coord(-1000000, 1000000);
  const int n = g.order();
  std::vector<std::vector<long long>> p(n, std::vector<long long>(d));
  for (auto& row : p)
    for (auto& c : row) c = coord(rng);
  std::vector<std::vector<cpp_int>> m;
  for (const auto& e : g.edges()) {
    std::vector<cpp_int> row(static_cast<std::size_t>(d * n), 0);
    for (int k = 0; k < d; ++k) {
      row[e.u * d + k] = p[e.u][k] - p[e.v][k];
      row[e.v * d + k] = p[e.v][k] - p[e.u][k];
    }
    m.push_back(std::move(row));
  }
  // Bareiss elimination: every intermediate division is exact.
  const int rows = static_cast<int>(m.size());
  const int cols = d * n;
  int rank = 0;
  cpp_int prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc) {
        m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace oracle
