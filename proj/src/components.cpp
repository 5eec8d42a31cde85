#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "hammock/metrics.hpp"

namespace hammock {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

struct Group {
  ComponentSize size;
  VertexIndex min_vertex = 0;
};

// Labels vertices [0, n) by undirected BFS; neighbours(v, fn) calls fn on
// each neighbour. Labels are assigned in order of smallest member.
template <typename Neighbours>
std::vector<std::uint32_t> label_components(std::size_t n,
                                            Neighbours neighbours,
                                            std::vector<Group>& groups) {
  std::vector<std::uint32_t> label(n, kUnassigned);
  std::vector<VertexIndex> stack;
  for (VertexIndex s = 0; s < n; ++s) {
    if (label[s] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(groups.size());
    groups.push_back({{0, 0}, s});
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      ++groups[id].size.people;
      neighbours(v, [&](VertexIndex u) {
        if (label[u] == kUnassigned) {
          label[u] = id;
          stack.push_back(u);
        }
      });
    }
  }
  return label;
}

bool ranks_before(const Group& a, const Group& b) {
  if (a.size.total() != b.size.total()) return a.size.total() > b.size.total();
  if (a.size.people != b.size.people) return a.size.people > b.size.people;
  return a.min_vertex < b.min_vertex;
}

// Sorts groups, relabels membership and fills the summary fields.
ComponentReport finish(std::vector<Group> groups,
                       std::vector<std::uint32_t> membership,
                       std::size_t person_count,
                       const std::vector<std::size_t>& social_degree) {
  std::vector<std::uint32_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return ranks_before(groups[a], groups[b]);
  });
  std::vector<std::uint32_t> rank(groups.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  ComponentReport report;
  report.component_sizes.reserve(groups.size());
  for (std::uint32_t g : order) report.component_sizes.push_back(groups[g].size);
  for (auto& m : membership) m = rank[m];
  report.membership = std::move(membership);

  if (!report.component_sizes.empty()) {
    report.giant_people = report.component_sizes.front().people;
    report.giant_movies = report.component_sizes.front().movies;
  }
  report.shattered = true;
  for (std::size_t p = 0; p < person_count; ++p) {
    if (social_degree[p] == 0) ++report.isolated_people;
    if (report.membership[p] != 0 && social_degree[p] != 0) {
      report.shattered = false;
    }
  }
  return report;
}

}  // namespace

ComponentReport connected_components(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Group> groups;
  auto membership = label_components(
      n,
      [&](VertexIndex v, auto&& visit) {
        for (VertexIndex u : g.neighbors(v)) visit(u);
      },
      groups);
  std::vector<std::size_t> degree(n);
  for (VertexIndex v = 0; v < n; ++v) degree[v] = g.degree(v);
  return finish(std::move(groups), std::move(membership), n, degree);
}

ComponentReport connected_components(const SocialGraph& gs) {
  return connected_components(gs.graph);
}

ComponentReport connected_components(const RecommenderGraph& gr) {
  const std::size_t np = gr.person_count();
  const std::size_t n = gr.vertex_count();

  // Person arcs come in opposite pairs, so weak and strong connectivity of
  // the person core coincide.
  std::vector<Group> groups;
  auto label = label_components(
      np,
      [&](VertexIndex v, auto&& visit) {
        for (VertexIndex u : gr.out[v]) {
          if (gr.is_person(u)) visit(u);
        }
      },
      groups);
  label.resize(n, kUnassigned);

  std::vector<std::size_t> social_degree(np, 0);
  std::vector<std::vector<VertexIndex>> members(groups.size());
  for (VertexIndex p = 0; p < np; ++p) {
    members[label[p]].push_back(p);
    for (VertexIndex u : gr.out[p]) {
      if (gr.is_person(u)) ++social_degree[p];
    }
  }

  // Reachable movie count per core decides the order in which cores claim
  // their movie sinks.
  std::vector<std::uint32_t> stamp(n, kUnassigned);
  std::vector<std::size_t> reach(groups.size(), 0);
  for (std::uint32_t c = 0; c < groups.size(); ++c) {
    for (VertexIndex p : members[c]) {
      for (VertexIndex v : gr.out[p]) {
        if (!gr.is_person(v) && stamp[v] != c) {
          stamp[v] = c;
          ++reach[c];
        }
      }
    }
  }
  std::vector<std::uint32_t> claim_order(groups.size());
  std::iota(claim_order.begin(), claim_order.end(), 0u);
  std::sort(claim_order.begin(), claim_order.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              Group ga{{groups[a].size.people, reach[a]}, groups[a].min_vertex};
              Group gb{{groups[b].size.people, reach[b]}, groups[b].min_vertex};
              return ranks_before(ga, gb);
            });
  for (std::uint32_t c : claim_order) {
    for (VertexIndex p : members[c]) {
      for (VertexIndex v : gr.out[p]) {
        if (!gr.is_person(v) && label[v] == kUnassigned) {
          label[v] = c;
          ++groups[c].size.movies;
        }
      }
    }
  }
  // Movies nobody rated are components of their own.
  for (VertexIndex v = static_cast<VertexIndex>(np); v < n; ++v) {
    if (label[v] == kUnassigned) {
      label[v] = static_cast<std::uint32_t>(groups.size());
      groups.push_back({{0, 1}, v});
    }
  }
  return finish(std::move(groups), std::move(label), np, social_degree);
}

void write_components_csv(std::ostream& out, const ComponentReport& report) {
  out << "component_index,people,movies\n";
  for (std::size_t i = 0; i < report.component_sizes.size(); ++i) {
    const auto& c = report.component_sizes[i];
    out << i << ',' << c.people << ',' << c.movies << '\n';
  }
}

}  // namespace hammock
