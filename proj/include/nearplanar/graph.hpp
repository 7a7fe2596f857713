#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nearplanar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but larger than a configured limit.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

/// Bitset over at most 64 vertex indices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t b) : b_(b) {}
    constexpr int operator*() const { return std::countr_zero(b_); }
    constexpr iterator& operator++() {
      b_ &= b_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return b_ != o.b_; }

   private:
    std::uint64_t b_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::vector<Edge>;

/// Simple undirected graph on at most 64 vertices, one adjacency word per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const EdgeSet& edges);

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  std::uint64_t row(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  EdgeSet edges() const;
  int min_degree() const;
  int max_degree() const;
  /// Number of edges with both ends in `s`.
  int induced_edge_count(VertexSet s) const;

  /// Induced subgraph on `s`, relabelled to 0..|s|-1 in increasing order.
  Graph induced(VertexSet s) const;
  Graph without_vertices(VertexSet s) const { return induced(vertices() - s); }
  Graph without_vertex(int v) const { return without_vertices(VertexSet::single(v)); }
  Graph without_edges(const EdgeSet& f) const;
  Graph with_edge(int u, int v) const;
  /// Vertex i of the result is vertex perm[i] of this graph.
  Graph relabeled(const std::vector<int>& perm) const;

  bool is_connected() const;
  int component_count() const;
  bool is_complete() const { return size() == n_ * (n_ - 1) / 2; }

  bool operator==(const Graph& o) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// graph6 ---------------------------------------------------------------------

class Graph6Error : public Error {
 public:
  enum class Kind { kEmpty, kBadCharacter, kTruncated, kTooLarge, kTrailingData };
  Graph6Error(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Decodes one graph6 record (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// canonical forms --------------------------------------------------------------

/// Byte string identifying an isomorphism class: the graph6 encoding of a
/// canonical relabelling.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

inline constexpr int kDefaultCanonicalLimit = 10;

CanonicalCode canonical_code(const Graph& g, int limit = kDefaultCanonicalLimit);
/// The relabelled graph whose graph6 form is canonical_code(g).
Graph canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);
bool isomorphic(const Graph& a, const Graph& b);

// enumeration ------------------------------------------------------------------

inline constexpr int kMaxEnumerationOrder = 8;

/// One representative per isomorphism class of connected graphs on n vertices,
/// ordered by canonical code.
std::vector<Graph> enumerate_connected(int n);

// elementary queries -------------------------------------------------------------

/// Vertex connectivity; n - 1 for complete graphs and 0 when disconnected.
int connectivity(const Graph& g);
bool has_clique(const Graph& g, int k);
int clique_number(const Graph& g);

struct SuppressResult {
  std::optional<Graph> graph;
  /// Vertex whose suppression would have created a loop or parallel edge.
  int offending_vertex = -1;
};

/// Repeatedly replaces the lowest-index degree-2 vertex by an edge between its
/// neighbours.
SuppressResult suppress_degree_two(const Graph& g);

/// Drops isolated vertices.
Graph strip_isolated(const Graph& g);

}  // namespace nearplanar

template <>
struct std::hash<nearplanar::CanonicalCode> {
  std::size_t operator()(const nearplanar::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
