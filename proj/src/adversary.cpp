#include "ofa/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ofa/error.hpp"

namespace ofa {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

std::vector<Facility> unit_facilities(const std::vector<Location>& sites) {
  std::vector<Facility> out;
  for (size_t i = 0; i < sites.size(); ++i) out.push_back({static_cast<int>(i), sites[i], 1});
  return out;
}

int manhattan(GridVertex a, GridVertex b) { return std::abs(a.row - b.row) + std::abs(a.col - b.col); }

struct ChaseWalk {
  GridVertex start;               // empty vertex holding the first customer
  std::vector<GridVertex> walk;   // facilities in the order greedy takes them
  GridVertex corner;              // facility taken last
};

// Boustrophedon from (0,1): row 0 left to right, row 1 right to left, ...
// Ends on (rows-1, cols-1) when rows is odd.
std::vector<GridVertex> row_snake(int rows, int cols, int first_row = 0) {
  std::vector<GridVertex> out;
  for (int r = first_row; r < rows; ++r) {
    bool forward = (r - first_row) % 2 == 0;
    for (int k = 0; k < cols; ++k) {
      int c = forward ? k : cols - 1 - k;
      if (r == 0 && c == 0) continue;
      out.push_back({r, c});
    }
  }
  return out;
}

ChaseWalk transpose(ChaseWalk w) {
  auto flip = [](GridVertex& v) { std::swap(v.row, v.col); };
  flip(w.start);
  flip(w.corner);
  for (auto& v : w.walk) flip(v);
  return w;
}

ChaseWalk split(std::vector<GridVertex> order) {
  ChaseWalk w;
  w.start = order.front();
  w.walk.assign(order.begin() + 1, order.end());
  w.corner = {0, 0};
  return w;
}

// Greedy-consistent walk from a neighbour of (0,0) through every other vertex,
// maximizing the final hop back to (0,0). Used on thin even grids only.
ChaseWalk search_walk(int rows, int cols) {
  const GridVertex corner{0, 0};
  const GridVertex target{rows - 1, cols - 1};
  ChaseWalk best;
  int best_hop = -1;
  long budget = 4'000'000;
  for (GridVertex start : {GridVertex{0, 1}, GridVertex{1, 0}}) {
    if (start.row >= rows || start.col >= cols) continue;
    std::vector<GridVertex> free;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        GridVertex v{r, c};
        if (v != start && v != corner) free.push_back(v);
      }
    }
    std::vector<GridVertex> path;
    auto dfs = [&](auto&& self, GridVertex at) -> bool {
      if (--budget < 0) return true;
      if (free.empty()) {
        int hop = manhattan(at, corner);
        if (hop > best_hop) best_hop = hop, best = ChaseWalk{start, path, corner};
        return hop == manhattan(target, corner);
      }
      int nearest = manhattan(at, corner);
      for (auto v : free) nearest = std::min(nearest, manhattan(at, v));
      for (size_t i = 0; i < free.size(); ++i) {
        GridVertex v = free[i];
        if (manhattan(at, v) != nearest) continue;
        free.erase(free.begin() + static_cast<long>(i));
        path.push_back(v);
        bool stop = self(self, v);
        path.pop_back();
        free.insert(free.begin() + static_cast<long>(i), v);
        if (stop) return true;
      }
      return false;
    };
    if (dfs(dfs, start)) break;
  }
  return best;
}

ChaseWalk greedy_chase_walk(int rows, int cols) {
  if (rows % 2 == 1) return split(row_snake(rows, cols));
  if (cols % 2 == 1) return transpose(split(row_snake(cols, rows)));
  if (rows >= 4 && cols >= 4) {
    // Snake the first rows-2 rows, then cover the last two rows column by
    // column with one two-step jump so the walk ends on the far corner.
    auto order = row_snake(rows - 2, cols);
    const int a = rows - 2, b = rows - 1;
    for (GridVertex v : {GridVertex{a, 0}, GridVertex{a, 1}, GridVertex{b, 1}, GridVertex{b, 0}}) order.push_back(v);
    for (int c = 2; c < cols; ++c) {
      bool up = (c % 2 == 0);
      order.push_back({up ? b : a, c});
      order.push_back({up ? a : b, c});
    }
    return split(std::move(order));
  }
  return search_walk(rows, cols);
}

Instance chase_instance(const MetricSpace& space, const ChaseWalk& w) {
  Instance instance;
  instance.space = space;
  std::vector<Location> sites(w.walk.begin(), w.walk.end());
  sites.push_back(w.corner);
  instance.facilities = unit_facilities(sites);
  instance.customers.push_back(w.start);
  for (const auto& v : w.walk) instance.customers.push_back(v);
  return instance;
}

}  // namespace

Instance adaptive_adversary(Algorithm algorithm, const MetricSpace& space, const std::vector<Facility>& facilities,
                            const std::vector<Location>& seeds) {
  Instance instance;
  instance.space = space;
  instance.facilities = facilities;
  const int capacity = instance.total_capacity();
  require(!seeds.empty(), "adaptive adversary needs at least one seed customer");
  require(static_cast<int>(seeds.size()) <= capacity, "more seed customers than capacity");

  // Customers are appended while the state reads the instance by reference;
  // run against a separate copy whose customer list stays untouched.
  Instance frame = instance;
  OnlineState state(frame);
  int last = -1;
  for (int i = 0; i < capacity; ++i) {
    Location next = i < static_cast<int>(seeds.size()) ? seeds[i] : facilities[last].location;
    instance.customers.push_back(next);
    last = assign(state, algorithm, next);
  }
  return instance;
}

Instance gen_grid_greedy_chase(int rows, int cols) {
  require(rows >= 2 && cols >= 2, "greedy chase needs rows, cols >= 2");
  return chase_instance(Grid{rows, cols}, greedy_chase_walk(rows, cols));
}

Instance gen_grid_greedy_alt(int rows, int cols) {
  require(rows >= 2 && cols >= 2, "greedy alt needs rows, cols >= 2");
  if (rows == 2 || cols == 2) {
    // Two-wide: start next to the decoy, run along the far line and turn into
    // the last corner. The decoy is two steps from the start and stays at least
    // two away from every path vertex.
    const bool along_rows = rows == 2;
    const int len = along_rows ? cols : rows;
    auto at = [&](int major, int minor) {
      return along_rows ? GridVertex{minor, major} : GridVertex{major, minor};
    };
    std::vector<GridVertex> path;
    for (int k = 2; k < len; ++k) path.push_back(at(k, 0));
    path.push_back(at(len - 1, 1));
    if (len == 2) path = {at(1, 1)};
    std::vector<Location> sites(path.begin(), path.end());
    sites.push_back(at(0, 1));
    Instance instance;
    instance.space = Grid{rows, cols};
    instance.facilities = unit_facilities(sites);
    instance.customers.push_back(at(1, 0));
    for (const auto& v : path) instance.customers.push_back(v);
    return instance;
  }
  // Comb: row 0 from col 1, then even rows swept over cols 2..cols-1 joined by
  // single connector vertices on odd rows. No two path vertices that are not
  // consecutive on the path are grid neighbours, and the decoy (2,0) is two
  // steps from the start and at least two from every path vertex.
  std::vector<GridVertex> path;
  for (int c = 1; c < cols; ++c) path.push_back({0, c});
  int col = cols - 1;
  for (int r = 1; r < rows; ++r) {
    if (r % 2 == 1) {
      path.push_back({r, col});
      continue;
    }
    bool backward = col == cols - 1;
    for (int k = 0; k < cols - 2; ++k) path.push_back({r, backward ? cols - 1 - k : 2 + k});
    col = backward ? 2 : cols - 1;
  }
  std::vector<Location> sites(path.begin(), path.end());
  sites.push_back(GridVertex{2, 0});
  Instance instance;
  instance.space = Grid{rows, cols};
  instance.facilities = unit_facilities(sites);
  instance.customers.push_back(GridVertex{0, 0});
  for (const auto& v : path) instance.customers.push_back(v);
  return instance;
}

Instance gen_grid_optfill_ring(int n, int radius) {
  require(n % 2 == 1, "ring generator needs an odd grid so the center is a single vertex");
  require(radius >= 1 && radius <= n / 2, "ring radius must lie in 1..n/2");
  const GridVertex center{n / 2, n / 2};
  std::vector<Location> sites;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (manhattan({r, c}, center) == radius) sites.push_back(GridVertex{r, c});
    }
  }
  return adaptive_adversary(Algorithm::kOptimalFill, Grid{n, n}, unit_facilities(sites), {center});
}

Instance gen_grid_optfill_full(int rows, int cols) {
  require(rows >= 2 && cols >= 2, "grid needs rows, cols >= 2");
  const Graph graph = make_grid_graph(rows, cols);
  const int center_id = graph.metrics().center.front();
  const GridVertex center{center_id / cols, center_id % cols};
  std::vector<Location> sites;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (GridVertex{r, c} != center) sites.push_back(GridVertex{r, c});
    }
  }
  return adaptive_adversary(Algorithm::kOptimalFill, Grid{rows, cols}, unit_facilities(sites), {center});
}

Instance gen_spider(int spokes, int length) {
  require(spokes >= 2 && length >= 1, "spider needs k >= 2 spokes of length s >= 1");
  std::vector<Location> leaves;
  for (int j = 0; j < spokes; ++j) leaves.push_back(GraphVertex{(j + 1) * length});
  return adaptive_adversary(Algorithm::kOptimalFill, make_spider_graph(spokes, length), unit_facilities(leaves),
                            {GraphVertex{0}});
}

std::pair<Instance, Instance> gen_path_and_cycle(int m) {
  require(m >= 3, "path/cycle generator needs m >= 3");
  const int empty = m / 2;
  std::vector<Location> sites;
  for (int v = 0; v < m; ++v) {
    if (v != empty) sites.push_back(GraphVertex{v});
  }
  Instance path = adaptive_adversary(Algorithm::kOptimalFill, make_path_graph(m), unit_facilities(sites),
                                     {GraphVertex{empty}});
  Instance cycle = path;
  cycle.space = make_cycle_graph(m);
  return {std::move(path), std::move(cycle)};
}

Instance gen_plane_chain(int n, double spacing, double offset) {
  require(n >= 3, "plane chain needs n >= 3 facilities");
  require(spacing > 0.0, "plane chain spacing must be positive");
  const double pi = std::numbers::pi;
  const double circumradius = spacing / (2.0 * std::sin(pi / n));
  std::vector<PlanePoint> corners;
  for (int k = 0; k < n; ++k) {
    double theta = 2.0 * pi * k / n;
    corners.push_back({circumradius * std::cos(theta), circumradius * std::sin(theta)});
  }
  const PlanePoint& first = corners.front();
  const PlanePoint& last = corners.back();
  double ux = first.x - last.x, uy = first.y - last.y;
  double len = std::hypot(ux, uy);
  PlanePoint start{(first.x + last.x) / 2.0 + offset * ux / len, (first.y + last.y) / 2.0 + offset * uy / len};
  std::vector<Location> sites(corners.begin(), corners.end());
  return adaptive_adversary(Algorithm::kVoronoi, Plane{}, unit_facilities(sites), {start});
}

Instance gen_line_chase(int m, Algorithm algorithm) {
  require(m >= 3 && m % 2 == 1, "line chase needs an odd number m >= 3 of facilities");
  std::vector<Location> sites{LinePoint{0.0}};
  for (int k = 1; k <= m / 2; ++k) {
    sites.push_back(LinePoint{static_cast<double>(-k)});
    sites.push_back(LinePoint{static_cast<double>(k)});
  }
  return adaptive_adversary(algorithm, Line{}, unit_facilities(sites), {LinePoint{0.0}, LinePoint{0.0}});
}

Instance gen_line_greedy_trap(int k, double gap, Algorithm algorithm) {
  require(k >= 1 && k <= 40, "greedy trap needs 1 <= k <= 40");
  require(gap > 0.0, "greedy trap gap must be positive");
  std::vector<Location> sites;
  for (int j = 1; j <= k; ++j) sites.push_back(LinePoint{std::ldexp(1.0, j) - 1.0});
  sites.push_back(LinePoint{-(1.0 + gap)});
  return adaptive_adversary(algorithm, Line{}, unit_facilities(sites), {LinePoint{0.0}});
}

Instance replicate_capacity(const Instance& instance, int l) {
  require(l >= 1, "replication factor must be >= 1");
  Instance out = instance;
  for (auto& f : out.facilities) f.capacity *= l;
  out.customers.clear();
  for (int k = 0; k < l; ++k) {
    out.customers.insert(out.customers.end(), instance.customers.begin(), instance.customers.end());
  }
  return out;
}

int count_at_distance(int n, int d) {
  const int c = n / 2;
  int count = 0;
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) count += (std::abs(r - c) + std::abs(k - c) == d) ? 1 : 0;
  }
  return count;
}

int max_equal_distance_class(int n) {
  int best = 0;
  for (int d = 1; d <= 2 * (n / 2); ++d) best = std::max(best, count_at_distance(n, d));
  return best;
}

}  // namespace ofa
