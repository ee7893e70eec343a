#pragma once

#include <utility>
#include <vector>

#include "ofa/model.hpp"

namespace ofa {

enum class Side { kLeft = -1, kRight = 1 };

/// One search walk. Probe i goes schedule[i] units out on side
/// first_side, -first_side, first_side, ... and returns to the origin, except
/// the last probe, which stops on the bridge (schedule.back() == |bridge|).
struct CowPathRun {
  double bridge = 0.0;
  Side first_side = Side::kRight;
  std::vector<double> schedule;
  double total = 0.0;
  double ratio = 0.0;
};

/// Probes base, base*m, base*m^2, ... alternating sides.
/// Throws kDomain if |bridge| < 1, base <= 0 or multiplier <= 1.
CowPathRun simulate_doubling(double bridge, Side first_side = Side::kRight, double base = 1.0,
                             double multiplier = 2.0);

/// Walk cost of an arbitrary schedule. Per-side depths must strictly increase
/// and only the last probe may reach the bridge.
CowPathRun make_cowpath_run(double bridge, Side first_side, std::vector<double> schedule);

struct SweepResult {
  double max_ratio = 0.0;
  double argmax = 0.0;
};

/// Max doubling ratio over the bridges (first maximum wins). Throws kDomain on
/// an empty set.
SweepResult sweep_ratio(const std::vector<double>& bridges, Side first_side = Side::kRight, double base = 1.0,
                        double multiplier = 2.0);

/// Bridges at +-(lo + k*step) for lo + k*step <= hi, ascending.
std::vector<double> symmetric_bridges(double lo, double hi, double step);

struct LineReduction {
  Instance instance;
  AssignmentTrace trace;
};

/// Line instance whose facilities are the integers the walk visits. Customers
/// 0, 0 and then each newly visited point but the bridge; the trace sends each
/// customer to the next newly visited point, so trace.total == run.total and
/// OPT == |bridge|. Needs an integral bridge and schedule.
LineReduction line_instance_from_cowpath(const CowPathRun& run);

/// Inverse map. The instance must be a unit-capacity integer line with every
/// facility used, the trace must start 0 -> 0 at cost 0, each later customer
/// must sit on the previous facility, and each facility must extend the
/// visited interval by one point. Anything else throws kNotReducible.
CowPathRun cowpath_from_line_trace(const Instance& instance, const AssignmentTrace& trace);

}  // namespace ofa
