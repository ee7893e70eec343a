#include "ofa/offline_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ofa/error.hpp"

namespace ofa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool less_with_slack(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

OptimalSolution make_solution(const std::vector<int>& assignment,
                              const std::vector<std::vector<double>>& cost) {
  OptimalSolution s;
  s.assignment = assignment;
  for (size_t i = 0; i < assignment.size(); ++i) s.total_cost += cost[i][assignment[i]];
  s.used_multiset = assignment;
  std::sort(s.used_multiset.begin(), s.used_multiset.end());
  return s;
}

}  // namespace

IncrementalAssignment::IncrementalAssignment(MetricSpace space, std::vector<Facility> facilities)
    : space_(std::move(space)),
      facilities_(std::move(facilities)),
      load_(facilities_.size(), 0),
      facility_potential_(facilities_.size(), 0.0) {}

int IncrementalAssignment::add_customer(const Location& customer) {
  const int facility_count = static_cast<int>(facilities_.size());
  bool any_free = false;
  for (int f = 0; f < facility_count; ++f) any_free = any_free || load_[f] < facilities_[f].capacity;
  if (!any_free) {
    throw Error(ErrorCode::kInfeasible,
                "customer " + std::to_string(customers_.size()) + " exceeds total facility capacity");
  }

  std::vector<double> row(facility_count);
  for (int f = 0; f < facility_count; ++f) row[f] = distance(space_, customer, facilities_[f].location);

  const int source = static_cast<int>(customers_.size());
  customers_.push_back(customer);
  cost_.push_back(std::move(row));
  assignment_.push_back(-1);
  double start = -kInf;
  for (int f = 0; f < facility_count; ++f) start = std::max(start, facility_potential_[f] - cost(source, f));
  customer_potential_.push_back(start);

  const int customer_count = source + 1;
  std::vector<std::vector<int>> holders(facility_count);
  for (int i = 0; i < source; ++i) holders[assignment_[i]].push_back(i);

  // Dense Dijkstra on reduced costs over customers and facilities.
  std::vector<double> dist_c(customer_count, kInf), dist_f(facility_count, kInf);
  std::vector<int> pred_f(facility_count, -1);
  std::vector<char> done_c(customer_count, 0), done_f(facility_count, 0);
  dist_c[source] = 0.0;
  for (;;) {
    int best_c = -1, best_f = -1;
    double best = kInf;
    for (int i = 0; i < customer_count; ++i) {
      if (!done_c[i] && dist_c[i] < best) best = dist_c[i], best_c = i;
    }
    for (int f = 0; f < facility_count; ++f) {
      if (!done_f[f] && dist_f[f] < best) best = dist_f[f], best_c = -1, best_f = f;
    }
    if (best == kInf) break;
    if (best_c >= 0) {
      done_c[best_c] = 1;
      for (int f = 0; f < facility_count; ++f) {
        if (done_f[f] || f == assignment_[best_c]) continue;
        double reduced = cost(best_c, f) + customer_potential_[best_c] - facility_potential_[f];
        double cand = best + std::max(0.0, reduced);
        if (cand < dist_f[f]) dist_f[f] = cand, pred_f[f] = best_c;
      }
    } else {
      done_f[best_f] = 1;
      for (int i : holders[best_f]) {
        if (done_c[i]) continue;
        double reduced = -cost(i, best_f) + facility_potential_[best_f] - customer_potential_[i];
        double cand = best + std::max(0.0, reduced);
        if (cand < dist_c[i]) dist_c[i] = cand;
      }
    }
  }

  int terminal = -1;
  double terminal_len = kInf;
  for (int f = 0; f < facility_count; ++f) {
    if (load_[f] >= facilities_[f].capacity || dist_f[f] == kInf) continue;
    double len = dist_f[f] + facility_potential_[f] - customer_potential_[source];
    if (terminal < 0 || less_with_slack(len, terminal_len)) terminal = f, terminal_len = len;
  }

  for (int i = 0; i < customer_count; ++i) {
    if (dist_c[i] < kInf) customer_potential_[i] += dist_c[i];
  }
  for (int f = 0; f < facility_count; ++f) {
    if (dist_f[f] < kInf) facility_potential_[f] += dist_f[f];
  }

  for (int f = terminal;;) {
    int i = pred_f[f];
    int previous = assignment_[i];
    assignment_[i] = f;
    if (i == source) break;
    f = previous;
  }
  ++load_[terminal];
  return terminal;
}

double IncrementalAssignment::total_cost() const {
  double sum = 0.0;
  for (size_t i = 0; i < assignment_.size(); ++i) sum += cost(static_cast<int>(i), assignment_[i]);
  return sum;
}

OptimalSolution IncrementalAssignment::solution() const { return make_solution(assignment_, cost_); }

OptimalSolution solve_optimal(const MetricSpace& space, const std::vector<Facility>& facilities,
                              const std::vector<Location>& customers) {
  int capacity = 0;
  for (const auto& f : facilities) capacity += f.capacity;
  if (static_cast<int>(customers.size()) > capacity) {
    throw Error(ErrorCode::kInfeasible, std::to_string(customers.size()) + " customers exceed total capacity " +
                                            std::to_string(capacity));
  }
  IncrementalAssignment solver(space, facilities);
  for (const auto& c : customers) solver.add_customer(c);
  return solver.solution();
}

OptimalSolution brute_force_optimal(const MetricSpace& space, const std::vector<Facility>& facilities,
                                    const std::vector<Location>& customers) {
  int capacity = 0;
  for (const auto& f : facilities) capacity += f.capacity;
  if (capacity > kBruteForceCapacityBudget) {
    throw Error(ErrorCode::kOracleLimit, "brute force limited to total capacity " +
                                             std::to_string(kBruteForceCapacityBudget));
  }
  if (static_cast<int>(customers.size()) > capacity) {
    throw Error(ErrorCode::kInfeasible, "more customers than capacity");
  }
  std::vector<std::vector<double>> cost(customers.size(), std::vector<double>(facilities.size()));
  for (size_t i = 0; i < customers.size(); ++i) {
    for (size_t f = 0; f < facilities.size(); ++f) cost[i][f] = distance(space, customers[i], facilities[f].location);
  }
  std::vector<int> remaining;
  for (const auto& f : facilities) remaining.push_back(f.capacity);
  std::vector<int> current(customers.size(), -1), best;
  double best_cost = kInf;

  auto recurse = [&](auto&& self, size_t i, double acc) -> void {
    if (i == customers.size()) {
      if (acc < best_cost) best_cost = acc, best = current;
      return;
    }
    for (size_t f = 0; f < facilities.size(); ++f) {
      if (remaining[f] == 0) continue;
      --remaining[f];
      current[i] = static_cast<int>(f);
      self(self, i + 1, acc + cost[i][f]);
      ++remaining[f];
    }
  };
  recurse(recurse, 0, 0.0);
  if (customers.empty()) best.clear();
  return make_solution(best, cost);
}

}  // namespace ofa
