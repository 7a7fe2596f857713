#pragma once

#include <optional>
#include <vector>

#include "nearplanar/graph.hpp"

namespace nearplanar {

struct VertexApicity {
  int value = 0;
  /// Lexicographically least deletion set of size `value`.
  std::vector<int> witness;
};

struct EdgeApicity {
  int value = 0;
  EdgeSet witness;
};

/// Smallest k such that deleting some k vertices leaves a planar graph.
VertexApicity vertex_apicity(const Graph& g);
bool is_k_apex(const Graph& g, int k);

/// Smallest k such that deleting some k edges leaves a planar graph.  Exact
/// search: branch on the edges of a Kuratowski subgraph, pruned by the
/// 3n - 6 edge bound.
EdgeApicity edge_apicity(const Graph& g);
bool is_k_edge_apex(const Graph& g, int k);

/// Smallest k such that deleting any k vertices leaves a planar graph
/// (0 for planar graphs).
int critical_vertex_apicity(const Graph& g);
/// Smallest k such that deleting any k edges leaves a planar graph.
int critical_edge_apicity(const Graph& g);
bool is_critically_k_apex(const Graph& g, int k);
bool is_critically_k_edge_apex(const Graph& g, int k);

/// Fewest vertices of a non-planar induced subgraph; nullopt when planar.
std::optional<int> min_nonplanar_order(const Graph& g);
/// Fewest edges of a non-planar subgraph (a smallest K5 or K3,3
/// subdivision); nullopt when planar.
std::optional<int> min_kuratowski_size(const Graph& g);

struct ApicityProfile {
  VertexApicity vertex;
  EdgeApicity edge;
  int critical_vertex = 0;
  int critical_edge = 0;
};

ApicityProfile apicity_profile(const Graph& g);

}  // namespace nearplanar
