#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ofa/metric.hpp"

namespace ofa {

struct Facility {
  int id = 0;
  Location location;
  int capacity = 1;
};

/// Facilities are stored with dense ids: facilities[i].id == i. Lower ids win
/// every tie in the online algorithms, so generators encode tie-breaks through
/// the id order.
struct Instance {
  MetricSpace space = Line{};
  std::vector<Facility> facilities;
  std::vector<Location> customers;  // arrival order

  int total_capacity() const;
};

struct Assignment {
  int customer = 0;
  int facility = 0;
  double cost = 0.0;
};

struct AssignmentTrace {
  std::vector<Assignment> records;
  double total = 0.0;

  void append(int customer, int facility, double cost) {
    records.push_back({customer, facility, cost});
    total += cost;
  }
};

/// Sum of record costs, recomputed from the records.
double total_cost(const AssignmentTrace& trace);

struct RatioReport {
  std::string algorithm;
  std::string family;
  std::string params;
  double cost_alg = 0.0;
  double cost_opt = 0.0;
  std::optional<double> ratio;             // empty when cost_opt == 0
  std::optional<double> theoretical_bound;
  double additive_constant_used = 0.0;     // strict competitiveness only
  std::string diagnostic;                  // non-empty for skipped rows

  bool skipped() const { return !diagnostic.empty(); }
};

RatioReport make_ratio_report(std::string algorithm, std::string family, std::string params,
                              double cost_alg, double cost_opt, std::optional<double> bound);

struct Diagnostic {
  std::string code;
  std::string message;
};

/// Every violated instance invariant; empty means valid.
std::vector<Diagnostic> validate(const Instance& instance);

/// Throws kInvalidArgument carrying the first diagnostic if the instance is invalid.
void require_valid(const Instance& instance);

/// Every violated trace invariant against `instance`. Cost tolerance is 1e-12
/// (relative to the distance when it exceeds 1) on the plane and line, exact on
/// grid and graph spaces.
std::vector<Diagnostic> validate_trace(const Instance& instance, const AssignmentTrace& trace);

/// At least one customer between every pair of adjacent facilities.
///
/// Line: customers strictly inside the open interval between consecutive
/// distinct facility positions. Grid/graph: two facility vertices are adjacent
/// when some path joins them without passing another facility vertex; the pair
/// is satisfied by a customer on an interior vertex of such a path, and a pair
/// joined by a direct edge has no interior vertices and is satisfied vacuously.
/// Plane: throws kUnsupportedPredicate.
bool is_well_distributed(const Instance& instance);

/// Closed segment on the line; an empty end is unbounded.
struct Segment {
  std::optional<double> lo;
  std::optional<double> hi;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Cover area of facility `id` among the free facilities of a line instance.
/// `remaining` holds the current capacity of every facility.
Segment cover_area(const std::vector<Facility>& facilities, const std::vector<int>& remaining, int id);

// JSON (instance schema shared with the CLI).
nlohmann::json location_to_json(const Location& loc);
Location location_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const MetricSpace& space);
MetricSpace space_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

std::string save_instance(const Instance& instance);
/// Throws kParse (with the byte offset) on malformed JSON and on schema errors.
Instance load_instance(const std::string& text);
Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& instance, const std::string& path);

bool operator==(const Instance& a, const Instance& b);

}  // namespace ofa
