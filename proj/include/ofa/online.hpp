#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ofa/model.hpp"
#include "ofa/offline_opt.hpp"

namespace ofa {

enum class Algorithm { kGreedy, kOptimalFill, kVoronoi };

std::string_view algorithm_name(Algorithm algorithm);
/// Accepts "greedy" | "optimal-fill" | "voronoi"; throws kInvalidArgument otherwise.
Algorithm parse_algorithm(std::string_view name);

/// Weight applied to a facility's remaining capacity when locating the
/// customer's cell. kUniform reduces to nearest-free-facility.
enum class VoronoiWeight { kUniform, kCapacity };

/// Mutable per-run state. Remaining capacity always equals declared capacity
/// minus the assignments recorded in the trace.
class OnlineState {
 public:
  explicit OnlineState(const Instance& instance, VoronoiWeight weight = VoronoiWeight::kUniform);

  const Instance& instance() const { return *instance_; }
  const std::vector<int>& remaining() const { return remaining_; }
  const std::vector<int>& used() const { return used_; }
  const AssignmentTrace& trace() const { return trace_; }
  const std::vector<Location>& prefix() const { return prefix_; }
  VoronoiWeight weight() const { return weight_; }
  bool has_free_facility() const;

  /// Records `customer` -> `facility` and decrements its capacity.
  void commit(const Location& customer, int facility);

  /// OPT of the prefix seen so far, extended by one customer per optimal-fill step.
  IncrementalAssignment& opt_tracker() { return *opt_; }
  const IncrementalAssignment& opt_tracker() const { return *opt_; }

 private:
  const Instance* instance_;
  VoronoiWeight weight_;
  std::vector<int> remaining_;
  std::vector<int> used_;
  AssignmentTrace trace_;
  std::vector<Location> prefix_;
  std::optional<IncrementalAssignment> opt_;
};

/// Nearest free facility; ties go to the lowest id.
int greedy_step(const OnlineState& state, const Location& customer);

/// Extends OPT of the prefix by `customer` and returns the single facility
/// OPT now uses beyond the facilities already committed. Must be followed by
/// commit() with the returned id.
int optimal_fill_step(OnlineState& state, const Location& customer);

/// Cell lookup in the capacity-weighted Voronoi diagram of the free
/// facilities: argmin dist / w(remaining), ties to the lowest id. Plane only.
int voronoi_step(const OnlineState& state, const Location& customer);

/// Dispatches to the step for `algorithm`, then commits.
int assign(OnlineState& state, Algorithm algorithm, const Location& customer);

/// Folds the algorithm over the arrival sequence. Step errors are rethrown
/// with the customer index in the message.
AssignmentTrace run(Algorithm algorithm, const Instance& instance,
                    VoronoiWeight weight = VoronoiWeight::kUniform);

/// True when `algorithm` can run on `space` (voronoi needs the plane).
bool is_compatible(Algorithm algorithm, const MetricSpace& space);

}  // namespace ofa
