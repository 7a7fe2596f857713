#pragma once

#include <optional>
#include <utility>

#include "nearplanar/graph.hpp"

namespace nearplanar {

class UnsupportedParametersError : public Error {
 public:
  using Error::Error;
};

struct SparsityParams {
  int k = 3;
  int l = 6;
  /// Smallest |X| the count applies to; a negative value means k.
  int min_set_size = -1;

  int effective_min_size() const { return min_set_size < 0 ? k : min_set_size; }
};

struct SparsityVerdict {
  bool sparse = true;
  bool tight = false;
  /// A set X with i(X) > k|X| - l when the graph is not sparse.
  std::optional<VertexSet> violating_set;
};

/// (k,l)-sparsity for 0 <= l <= 2k.  Uses the pebble game when l < 2k and a
/// per-edge max-flow closure when l = 2k.
SparsityVerdict check_sparsity(const Graph& g, const SparsityParams& p = {});
bool is_sparse_36(const Graph& g);

/// Largest X in V - excluded with x, y in X, |X| >= 3 and i(X) = 3|X| - 6.
/// G - excluded must be (3,6)-sparse and G may have at most 12 vertices.  Ties go to the
/// lexicographically smallest vertex list.
std::optional<VertexSet> maximal_critical_set(const Graph& g, int x, int y, int excluded);

inline constexpr int kMaxCriticalSetOrder = 12;

/// First non-adjacent pair x < y of N(v) with G - v + xy still (3,6)-sparse.
std::optional<std::pair<int, int>> admissible_one_reduction(const Graph& g, int v);

}  // namespace nearplanar
