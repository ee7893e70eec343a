#pragma once

#include <vector>

#include "ofa/model.hpp"

namespace ofa {

struct OptimalSolution {
  std::vector<int> assignment;     // facility id per customer
  double total_cost = 0.0;
  std::vector<int> used_multiset;  // sorted facility ids, one entry per customer
};

/// Minimum-cost capacity-respecting assignment maintained one customer at a
/// time (successive shortest paths; each new customer augments along a
/// shortest residual path from itself to a facility with spare capacity).
///
/// After k insertions the state is optimal for the first k customers. Each
/// insertion adds exactly one unit to exactly one facility's load and never
/// removes load, so the used multiset only grows. Among equal-length paths the
/// terminal facility with the lowest id is taken, which makes the whole state a
/// pure function of the inputs.
class IncrementalAssignment {
 public:
  IncrementalAssignment(MetricSpace space, std::vector<Facility> facilities);

  /// Returns the facility whose load grew. Throws kInfeasible if every facility
  /// is full.
  int add_customer(const Location& customer);

  int customer_count() const { return static_cast<int>(customers_.size()); }
  const std::vector<int>& load() const { return load_; }
  const std::vector<int>& assignment() const { return assignment_; }
  double total_cost() const;
  OptimalSolution solution() const;

 private:
  double cost(int customer, int facility) const { return cost_[customer][facility]; }

  MetricSpace space_;
  std::vector<Facility> facilities_;
  std::vector<Location> customers_;
  std::vector<std::vector<double>> cost_;
  std::vector<int> assignment_;
  std::vector<int> load_;
  std::vector<double> customer_potential_;
  std::vector<double> facility_potential_;
};

/// OPT for the given customer prefix against the full facility list.
OptimalSolution solve_optimal(const MetricSpace& space, const std::vector<Facility>& facilities,
                              const std::vector<Location>& customers);

/// Exhaustive enumeration of capacity-respecting assignments. Limited to total
/// capacity <= 10; throws kOracleLimit otherwise.
OptimalSolution brute_force_optimal(const MetricSpace& space, const std::vector<Facility>& facilities,
                                    const std::vector<Location>& customers);

inline constexpr int kBruteForceCapacityBudget = 10;

}  // namespace ofa
