#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace ofa {

struct LinePoint {
  double x = 0.0;
  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

struct GridVertex {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridVertex&, const GridVertex&) = default;
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

struct GraphVertex {
  int id = 0;
  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

using Location = std::variant<LinePoint, GridVertex, GraphVertex, PlanePoint>;

using Edge = std::pair<int, int>;

/// Shortest-path summary of a connected unweighted graph.
struct GraphMetrics {
  int vertex_count = 0;
  std::vector<int> distance;  // row-major vertex_count x vertex_count
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::vector<int> center;  // ascending vertex ids

  int dist(int u, int v) const { return distance[static_cast<size_t>(u) * vertex_count + v]; }
};

/// All-pairs BFS over an adjacency list. Unreachable pairs get -1.
std::vector<int> bfs_all_pairs(int vertex_count, const std::vector<Edge>& edges);

struct Line {};
struct Plane {};

struct Grid {
  int rows = 1;
  int cols = 1;
};

/// Connected, simple, unweighted graph on vertices 0..n-1. The distance table
/// is computed once at construction and shared between copies.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return metrics_->vertex_count; }
  const std::vector<Edge>& edges() const { return *edges_; }
  const GraphMetrics& metrics() const { return *metrics_; }
  const std::vector<std::vector<int>>& adjacency() const { return *adjacency_; }
  int dist(int u, int v) const { return metrics_->dist(u, v); }
  bool has_edge(int u, int v) const;

 private:
  std::shared_ptr<const std::vector<Edge>> edges_;
  std::shared_ptr<const std::vector<std::vector<int>>> adjacency_;
  std::shared_ptr<const GraphMetrics> metrics_;
};

using MetricSpace = std::variant<Line, Grid, Graph, Plane>;

enum class SpaceKind { kLine, kGrid, kGraph, kPlane };

SpaceKind kind_of(const MetricSpace& space);
const char* kind_name(SpaceKind kind);

/// True for spaces whose distances are always integers (grid, graph).
bool is_exact(const MetricSpace& space);

bool is_valid_location(const MetricSpace& space, const Location& loc);

/// Metric distance. Throws kInvalidArgument on a location/space mismatch.
double distance(const MetricSpace& space, const Location& a, const Location& b);

GraphMetrics graph_metrics(const Graph& graph);

// Graph builders.
Graph make_path_graph(int n);
Graph make_cycle_graph(int n);
Graph make_grid_graph(int rows, int cols);  // vertex id = row * cols + col
/// Center vertex 0; spoke j occupies ids 1 + j*length .. (j+1)*length.
Graph make_spider_graph(int spokes, int length);

}  // namespace ofa
