#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nearplanar/graph.hpp"
#include "nearplanar/planarity.hpp"

namespace nearplanar {

// extensions -----------------------------------------------------------------

/// New vertex n adjacent to exactly `neighbors` (|neighbors| = d, distinct).
Graph zero_extension(const Graph& g, int d, const std::vector<int>& neighbors);

/// Deletes uv and adds vertex n adjacent to u, v and the d - 1 extras.
Graph one_extension(const Graph& g, int d, Edge uv, const std::vector<int>& extra);

/// Deletes uv, adds a = n and b = n + 1, the edge ab, a joined to a_neighbors
/// and b joined to b_neighbors.  u and v must both be covered by the union.
Graph double_one_extension(const Graph& g, Edge uv, const std::array<int, 3>& a_neighbors,
                           const std::array<int, 3>& b_neighbors);

/// Adds vertex n adjacent to every other vertex.
Graph cone(const Graph& g);

// joins ----------------------------------------------------------------------
//
// g1 keeps its labels.  Vertices of g2 that are identified take the label of
// their partner; the rest follow as n1, n1 + 1, ... in increasing order.

Graph vertex_join(const Graph& g1, int a, const Graph& g2, int b);
/// Identifies e1.u with e2.u and e1.v with e2.v.
Graph edge_join(const Graph& g1, Edge e1, const Graph& g2, Edge e2);
/// Both inputs triangulations and f1, f2 facial; identification is positional.
Graph delta_join(const Graph& t1, const std::array<int, 3>& f1, const Graph& t2,
                 const std::array<int, 3>& f2);

// catalog --------------------------------------------------------------------

class UnknownGraphError : public Error {
 public:
  using Error::Error;
};

class CatalogValidationError : public Error {
 public:
  using Error::Error;
};

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  Graph graph;
  /// Optional vertex names (figure labels).
  std::vector<std::string> labels;
  /// Claims carried along without verification.
  std::map<std::string, std::string> annotations;
  /// Expected properties and whether each held.
  std::vector<std::pair<std::string, bool>> checks;

  bool valid() const;
  std::vector<std::string> failed_checks() const;
};

/// Canonical catalog names; lookup also accepts '-' for '_' and a few aliases
/// ("k" for k_n, "k33" for k_mn 3 3, "db" for double_banana).
std::vector<std::string> catalog_names();

/// Builds the entry and evaluates its checks without throwing on failures.
CatalogEntry catalog_entry(const std::string& name, const std::vector<int>& params = {});

/// Builds the graph; throws CatalogValidationError when a check fails.
Graph catalog(const std::string& name, const std::vector<int>& params = {});

/// Straight-line rotation system of the black graph in the structure-tree
/// walkthrough figure (double banana without ac and ac'), labels as in
/// catalog_entry("fig4_planar").labels.
PlanarEmbedding fig4_embedding();

}  // namespace nearplanar
