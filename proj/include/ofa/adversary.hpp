#pragma once

#include <utility>
#include <vector>

#include "ofa/model.hpp"
#include "ofa/online.hpp"

namespace ofa {

/// Runs `algorithm` live. The seed customers arrive first; every later
/// customer is placed on the facility assigned to the previous one, until the
/// total capacity is used up.
Instance adaptive_adversary(Algorithm algorithm, const MetricSpace& space, const std::vector<Facility>& facilities,
                            const std::vector<Location>& seeds);

/// Greedy chase on an r x c grid: a facility on every vertex except one
/// vertex next to the corner facility. Facility ids follow the chase order with
/// the corner facility last, so lowest-id tie-breaking walks greedy through
/// every other facility before it lands on the corner. The last hop spans the
/// grid (r + c - 2) except on 2x2 and 2x4 grids, where no greedy-consistent
/// walk reaches the far corner.
Instance gen_grid_greedy_chase(int rows, int cols);

/// Tie-free greedy trap on an r x c grid: facilities along a comb-shaped path
/// where every greedy choice is the unique nearest free facility, plus one
/// decoy facility two steps from the first customer that greedy reaches last.
Instance gen_grid_greedy_alt(int rows, int cols);

/// Unit facilities on every vertex at grid distance `radius` from the center
/// of an odd n x n grid; first customer at the center, then the optimal-fill
/// chase.
Instance gen_grid_optfill_ring(int n, int radius);

/// Facility on every vertex except the (lowest-id) center; first customer on
/// the center, then the optimal-fill chase.
Instance gen_grid_optfill_full(int rows, int cols);

/// Facilities on the leaves of a spider with `spokes` legs of `length` edges;
/// first customer on the body, then the optimal-fill chase.
Instance gen_spider(int spokes, int length);

/// Path 0..m-1 with a facility on every vertex but m/2, optimal-fill chase
/// from m/2. The second instance is the same layout on the cycle that closes
/// the path.
std::pair<Instance, Instance> gen_path_and_cycle(int m);

/// n unit facilities on the corners of a regular n-gon with side `spacing`.
/// The first customer sits on the midpoint of the edge between the last and the
/// first corner, moved `offset` toward the first; customers then chase the
/// voronoi assignments around the polygon.
Instance gen_plane_chain(int n, double spacing, double offset = 0.0);

/// Unit facilities on the integers -h..h (m = 2h + 1 odd) with ids in the
/// order 0, -1, 1, -2, 2, ...; two customers on 0, then the chase against
/// `algorithm`.
Instance gen_line_chase(int m, Algorithm algorithm = Algorithm::kGreedy);

/// Line layout that sends greedy on doubling excursions: facilities at
/// 2^j - 1 (j = 1..k) and one at -(1 + gap); chase from 0.
Instance gen_line_greedy_trap(int k, double gap = 0.25, Algorithm algorithm = Algorithm::kGreedy);

/// Capacities times l; the customer sequence repeated l times.
Instance replicate_capacity(const Instance& instance, int l);

/// Vertices at grid distance exactly d from the center of an odd n x n grid.
int count_at_distance(int n, int d);
/// Largest such class over all d > 0 (compare with 2n - 2).
int max_equal_distance_class(int n);

}  // namespace ofa
