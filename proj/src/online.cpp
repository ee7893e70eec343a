#include "ofa/online.hpp"

#include <cmath>
#include <string>

#include "ofa/error.hpp"

namespace ofa {

namespace {

// Ties are decided by id; the slack absorbs rounding in plane coordinates.
bool strictly_better(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

void require_free(const OnlineState& state) {
  if (!state.has_free_facility()) throw Error(ErrorCode::kCapacityExhausted, "no free facility");
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kOptimalFill: return "optimal-fill";
    case Algorithm::kVoronoi: return "voronoi";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "optimal-fill") return Algorithm::kOptimalFill;
  if (name == "voronoi") return Algorithm::kVoronoi;
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

OnlineState::OnlineState(const Instance& instance, VoronoiWeight weight)
    : instance_(&instance), weight_(weight), used_(instance.facilities.size(), 0) {
  for (const auto& f : instance.facilities) remaining_.push_back(f.capacity);
  opt_.emplace(instance.space, instance.facilities);
}

bool OnlineState::has_free_facility() const {
  for (int r : remaining_) {
    if (r > 0) return true;
  }
  return false;
}

void OnlineState::commit(const Location& customer, int facility) {
  if (remaining_.at(facility) <= 0) {
    throw Error(ErrorCode::kCapacityExhausted, "facility " + std::to_string(facility) + " is full");
  }
  --remaining_[facility];
  ++used_[facility];
  double cost = distance(instance_->space, customer, instance_->facilities[facility].location);
  trace_.append(static_cast<int>(prefix_.size()), facility, cost);
  prefix_.push_back(customer);
}

int greedy_step(const OnlineState& state, const Location& customer) {
  require_free(state);
  const auto& facilities = state.instance().facilities;
  int best = -1;
  double best_dist = 0.0;
  for (size_t f = 0; f < facilities.size(); ++f) {
    if (state.remaining()[f] <= 0) continue;
    double d = distance(state.instance().space, customer, facilities[f].location);
    if (best < 0 || strictly_better(d, best_dist)) best = static_cast<int>(f), best_dist = d;
  }
  return best;
}

int optimal_fill_step(OnlineState& state, const Location& customer) {
  require_free(state);
  auto& tracker = state.opt_tracker();
  if (tracker.customer_count() != static_cast<int>(state.prefix().size())) {
    throw Error(ErrorCode::kInternalInvariant, "optimal-fill tracker out of step with the trace");
  }
  tracker.add_customer(customer);
  const auto& opt_load = tracker.load();
  int chosen = -1;
  int extra = 0;
  for (size_t f = 0; f < opt_load.size(); ++f) {
    int diff = opt_load[f] - state.used()[f];
    if (diff < 0) {
      throw Error(ErrorCode::kInternalInvariant, "OPT dropped committed facility " + std::to_string(f));
    }
    if (diff > 0) {
      extra += diff;
      chosen = static_cast<int>(f);
    }
  }
  if (extra != 1) {
    throw Error(ErrorCode::kInternalInvariant,
                "OPT differs from the committed multiset by " + std::to_string(extra) + " facilities");
  }
  return chosen;
}

int voronoi_step(const OnlineState& state, const Location& customer) {
  if (!std::holds_alternative<Plane>(state.instance().space)) {
    throw Error(ErrorCode::kInvalidArgument, "voronoi assignment is defined on the plane only");
  }
  require_free(state);
  const auto& facilities = state.instance().facilities;
  int best = -1;
  double best_key = 0.0;
  for (size_t f = 0; f < facilities.size(); ++f) {
    int rem = state.remaining()[f];
    if (rem <= 0) continue;
    double w = state.weight() == VoronoiWeight::kCapacity ? static_cast<double>(rem) : 1.0;
    double key = distance(state.instance().space, customer, facilities[f].location) / w;
    if (best < 0 || strictly_better(key, best_key)) best = static_cast<int>(f), best_key = key;
  }
  return best;
}

int assign(OnlineState& state, Algorithm algorithm, const Location& customer) {
  int f = -1;
  switch (algorithm) {
    case Algorithm::kGreedy: f = greedy_step(state, customer); break;
    case Algorithm::kOptimalFill: f = optimal_fill_step(state, customer); break;
    case Algorithm::kVoronoi: f = voronoi_step(state, customer); break;
  }
  state.commit(customer, f);
  return f;
}

AssignmentTrace run(Algorithm algorithm, const Instance& instance, VoronoiWeight weight) {
  require_valid(instance);
  if (!is_compatible(algorithm, instance.space)) {
    throw Error(ErrorCode::kInvalidArgument, std::string(algorithm_name(algorithm)) + " cannot run on a " +
                                                 kind_name(kind_of(instance.space)) + " space");
  }
  OnlineState state(instance, weight);
  for (size_t i = 0; i < instance.customers.size(); ++i) {
    try {
      assign(state, algorithm, instance.customers[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "customer " + std::to_string(i) + ": " + e.what());
    }
  }
  return state.trace();
}

bool is_compatible(Algorithm algorithm, const MetricSpace& space) {
  return algorithm != Algorithm::kVoronoi || std::holds_alternative<Plane>(space);
}

}  // namespace ofa
