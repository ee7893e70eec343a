#include "ofa/metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

#include "ofa/error.hpp"

namespace ofa {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> bfs_from_adjacency(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dist(static_cast<size_t>(n) * n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    int* row = dist.data() + static_cast<size_t>(s) * n;
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

GraphMetrics metrics_from_table(int n, std::vector<int> table) {
  GraphMetrics m;
  m.vertex_count = n;
  m.distance = std::move(table);
  m.eccentricity.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m.eccentricity[u] = std::max(m.eccentricity[u], m.dist(u, v));
  }
  m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  for (int u = 0; u < n; ++u) {
    if (m.eccentricity[u] == m.radius) m.center.push_back(u);
  }
  return m;
}

[[noreturn]] void mismatch(const MetricSpace& space) {
  throw Error(ErrorCode::kInvalidArgument,
              std::string("location does not belong to a ") + kind_name(kind_of(space)) + " space");
}

}  // namespace

std::vector<int> bfs_all_pairs(int vertex_count, const std::vector<Edge>& edges) {
  return bfs_from_adjacency(build_adjacency(vertex_count, edges));
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
  }
  auto adj = build_adjacency(vertex_count, edges);
  auto table = bfs_from_adjacency(adj);
  for (int v = 0; v < vertex_count; ++v) {
    if (table[v] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "graph is disconnected: vertex " + std::to_string(v) + " unreachable from 0");
    }
  }
  edges_ = std::make_shared<const std::vector<Edge>>(std::move(edges));
  adjacency_ = std::make_shared<const std::vector<std::vector<int>>>(std::move(adj));
  metrics_ = std::make_shared<const GraphMetrics>(metrics_from_table(vertex_count, std::move(table)));
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = (*adjacency_)[u];
  return std::binary_search(row.begin(), row.end(), v);
}

SpaceKind kind_of(const MetricSpace& space) {
  return static_cast<SpaceKind>(space.index());
}

const char* kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kLine: return "line";
    case SpaceKind::kGrid: return "grid";
    case SpaceKind::kGraph: return "graph";
    case SpaceKind::kPlane: return "plane";
  }
  return "?";
}

bool is_exact(const MetricSpace& space) {
  auto k = kind_of(space);
  return k == SpaceKind::kGrid || k == SpaceKind::kGraph;
}

bool is_valid_location(const MetricSpace& space, const Location& loc) {
  return std::visit(
      Overloaded{
          [](const Line&, const LinePoint& p) { return std::isfinite(p.x); },
          [](const Grid& g, const GridVertex& v) {
            return v.row >= 0 && v.col >= 0 && v.row < g.rows && v.col < g.cols;
          },
          [](const Graph& g, const GraphVertex& v) { return v.id >= 0 && v.id < g.vertex_count(); },
          [](const Plane&, const PlanePoint& p) { return std::isfinite(p.x) && std::isfinite(p.y); },
          [](const auto&, const auto&) { return false; },
      },
      space, loc);
}

double distance(const MetricSpace& space, const Location& a, const Location& b) {
  if (!is_valid_location(space, a) || !is_valid_location(space, b)) mismatch(space);
  switch (kind_of(space)) {
    case SpaceKind::kLine:
      return std::abs(std::get<LinePoint>(a).x - std::get<LinePoint>(b).x);
    case SpaceKind::kGrid: {
      const auto& u = std::get<GridVertex>(a);
      const auto& v = std::get<GridVertex>(b);
      return static_cast<double>(std::abs(u.row - v.row) + std::abs(u.col - v.col));
    }
    case SpaceKind::kGraph: {
      int d = std::get<Graph>(space).dist(std::get<GraphVertex>(a).id, std::get<GraphVertex>(b).id);
      if (d < 0) throw Error(ErrorCode::kInfiniteDistance, "no path between graph vertices");
      return static_cast<double>(d);
    }
    case SpaceKind::kPlane: {
      const auto& p = std::get<PlanePoint>(a);
      const auto& q = std::get<PlanePoint>(b);
      return std::hypot(p.x - q.x, p.y - q.y);
    }
  }
  mismatch(space);
}

GraphMetrics graph_metrics(const Graph& graph) { return graph.metrics(); }

Graph make_path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph make_cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph make_grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be positive");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph make_spider_graph(int spokes, int length) {
  if (spokes < 1 || length < 1) throw Error(ErrorCode::kInvalidArgument, "spider needs spokes >= 1, length >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < spokes; ++j) {
    int prev = 0;
    for (int t = 0; t < length; ++t) {
      int v = 1 + j * length + t;
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return Graph(1 + spokes * length, std::move(edges));
}

}  // namespace ofa
