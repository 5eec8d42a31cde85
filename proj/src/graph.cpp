#include "hammock/graph.hpp"

#include <algorithm>
#include <string>

#include "hammock/error.hpp"

namespace hammock {

UndirectedGraph UndirectedGraph::from_edges(std::size_t vertex_count,
                                            std::span<const Edge> edges) {
  UndirectedGraph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void UndirectedGraph::check_vertex(VertexIndex v) const {
  if (v >= adj_.size()) {
    throw ConfigError("vertex " + std::to_string(v) + " out of range");
  }
}

bool UndirectedGraph::has_edge(VertexIndex u, VertexIndex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexIndex other = &a == &adj_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

bool UndirectedGraph::add_edge(VertexIndex u, VertexIndex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ConfigError("self-loop on vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
  return true;
}

bool UndirectedGraph::remove_edge(VertexIndex u, VertexIndex v) {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --edges_;
  return true;
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (VertexIndex u = 0; u < adj_.size(); ++u) {
    for (VertexIndex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace hammock
