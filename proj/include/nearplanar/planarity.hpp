#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nearplanar/graph.hpp"

namespace nearplanar {

/// Rotation system plus the face walks it induces.  A face is listed as the
/// tails of its darts; dart (u, v) is followed by (v, w) where w comes right
/// after u in the rotation of v.
struct PlanarEmbedding {
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<int>> faces;

  /// n - |E| + |faces| = 2 for a connected graph with at least one edge.
  bool satisfies_euler(const Graph& g) const;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;
  /// Edges of a subgraph that subdivides K5 or K3,3.
  std::optional<EdgeSet> witness;
};

enum class KuratowskiType { kK5, kK33, kNeither };
std::string to_string(KuratowskiType t);

/// Planarity with certificate: an embedding or a Kuratowski witness.
PlanarityResult is_planar(const Graph& g);
/// Verdict only; cheaper, used inside exhaustive searches.
bool planar(const Graph& g);

/// Face walks of a rotation system in the deterministic order used throughout:
/// darts are visited by tail ascending, then in rotation order.
std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation);

struct Triangulated {
  Graph graph;
  EdgeSet added;
  PlanarEmbedding embedding;
};

/// Adds chords face by face until every face is a triangle.  The first face
/// longer than three is split by a chord from its lowest-index vertex to the
/// first non-adjacent vertex met along the walk (falling back to the next
/// lowest vertex when none exists), and faces are retraced.
Triangulated complete_to_triangulation(const Graph& g, const PlanarEmbedding& emb);

bool is_triangulation(const Graph& g);

/// Embedding of a triangulation normalised so that each rotation starts at
/// the lowest neighbour and the reflection with the smaller rotation table is
/// chosen.
PlanarEmbedding triangulation_embedding(const Graph& t);

/// Triangles of a triangulation that do not bound a face.
std::vector<std::array<int, 3>> non_facial_triangles(const Graph& t);
bool is_facial_triangle(const Graph& t, std::array<int, 3> tri);

struct StructureTree {
  struct Link {
    int a = 0;
    int b = 0;
    std::array<int, 3> triangle{};
  };
  /// Sorted vertex lists of the 4-blocks, in lexicographic order.
  std::vector<std::vector<int>> blocks;
  std::vector<Link> links;

  std::string to_json() const;
};

/// Splits a triangulation along its separating triangles into K4s and
/// 4-connected triangulations.
StructureTree structure_tree(const Graph& t);

KuratowskiType subdivision_type(const Graph& g);

/// True when `witness` (an edge set of g) subdivides K5 or K3,3.
bool validate_kuratowski_witness(const Graph& g, const EdgeSet& witness);

}  // namespace nearplanar
