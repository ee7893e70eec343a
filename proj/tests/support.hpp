#pragma once

#include <random>
#include <set>

#include "ofa/model.hpp"

namespace ofa::testing {

// Small random instances for oracle comparisons: |F| <= 5, n <= 5, capacity <= 2.
inline Instance random_small_instance(SpaceKind kind, std::mt19937_64& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  Instance in;
  switch (kind) {
    case SpaceKind::kLine: in.space = Line{}; break;
    case SpaceKind::kGrid: in.space = Grid{1 + pick(5), 1 + pick(5)}; break;
    case SpaceKind::kPlane: in.space = Plane{}; break;
    case SpaceKind::kGraph: {
      int n = 1 + pick(8);
      std::set<Edge> edges;
      for (int v = 1; v < n; ++v) edges.insert({pick(v), v});
      for (int k = pick(n + 1); k > 0; --k) {
        int a = pick(n), b = pick(n);
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
      }
      in.space = Graph(n, {edges.begin(), edges.end()});
      break;
    }
  }
  auto location = [&]() -> Location {
    switch (kind) {
      case SpaceKind::kLine: return LinePoint{static_cast<double>(pick(21) - 10)};
      case SpaceKind::kGrid: {
        const auto& g = std::get<Grid>(in.space);
        return GridVertex{pick(g.rows), pick(g.cols)};
      }
      case SpaceKind::kGraph: return GraphVertex{pick(std::get<Graph>(in.space).vertex_count())};
      case SpaceKind::kPlane: break;
    }
    std::uniform_real_distribution<double> u(-10, 10);
    return PlanePoint{u(rng), u(rng)};
  };
  const int nf = 1 + pick(5);
  for (int i = 0; i < nf; ++i) in.facilities.push_back({i, location(), 1 + pick(2)});
  const int n = std::min(pick(6), in.total_capacity());
  for (int i = 0; i < n; ++i) in.customers.push_back(location());
  return in;
}

inline const SpaceKind kAllKinds[] = {SpaceKind::kLine, SpaceKind::kGrid, SpaceKind::kGraph, SpaceKind::kPlane};

}  // namespace ofa::testing
