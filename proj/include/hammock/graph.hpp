#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hammock/dataset.hpp"

namespace hammock {

using Edge = std::pair<VertexIndex, VertexIndex>;

/// Simple undirected graph on vertices [0, n) with sorted adjacency lists.
/// Self-loops and parallel edges are rejected.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t vertex_count) : adj_(vertex_count) {}

  /// Builds from an edge list; repeated edges collapse, self-loops and
  /// out-of-range endpoints throw ConfigError.
  static UndirectedGraph from_edges(std::size_t vertex_count,
                                    std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  std::span<const VertexIndex> neighbors(VertexIndex v) const {
    return adj_[v];
  }
  std::size_t degree(VertexIndex v) const { return adj_[v].size(); }
  bool has_edge(VertexIndex u, VertexIndex v) const;

  /// Returns false if the edge already exists.
  bool add_edge(VertexIndex u, VertexIndex v);
  /// Returns false if the edge is absent.
  bool remove_edge(VertexIndex u, VertexIndex v);

  /// All edges as (u, v) with u < v, lexicographically ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph&,
                         const UndirectedGraph&) = default;

 private:
  void check_vertex(VertexIndex v) const;

  std::vector<std::vector<VertexIndex>> adj_;
  std::size_t edges_ = 0;
};

}  // namespace hammock
