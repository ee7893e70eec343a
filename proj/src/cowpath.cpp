#include "ofa/cowpath.hpp"

#include <cmath>
#include <string>

#include "ofa/error.hpp"

namespace ofa {

namespace {

Side flip(Side s) { return s == Side::kRight ? Side::kLeft : Side::kRight; }

bool is_integral(double x) { return std::isfinite(x) && x == std::round(x); }

[[noreturn]] void not_reducible(const std::string& why) { throw Error(ErrorCode::kNotReducible, why); }

}  // namespace

CowPathRun simulate_doubling(double bridge, Side first_side, double base, double multiplier) {
  if (!(std::abs(bridge) >= 1.0)) throw Error(ErrorCode::kDomain, "bridge must be at least 1 from the origin");
  if (!(base > 0.0) || !(multiplier > 1.0)) throw Error(ErrorCode::kDomain, "need base > 0 and multiplier > 1");
  const double target = std::abs(bridge);
  const Side bridge_side = bridge > 0 ? Side::kRight : Side::kLeft;
  CowPathRun run{bridge, first_side, {}, 0.0, 0.0};
  Side side = first_side;
  for (int i = 0;; ++i) {
    double depth = base * std::pow(multiplier, i);
    if (side == bridge_side && depth >= target) {
      run.schedule.push_back(target);
      run.total += target;
      break;
    }
    run.schedule.push_back(depth);
    run.total += 2.0 * depth;
    side = flip(side);
  }
  run.ratio = run.total / target;
  return run;
}

CowPathRun make_cowpath_run(double bridge, Side first_side, std::vector<double> schedule) {
  if (bridge == 0.0 || !std::isfinite(bridge)) throw Error(ErrorCode::kDomain, "bridge must be nonzero");
  if (schedule.empty()) throw Error(ErrorCode::kInvalidArgument, "empty schedule");
  const double target = std::abs(bridge);
  const Side bridge_side = bridge > 0 ? Side::kRight : Side::kLeft;
  const size_t last = schedule.size() - 1;
  const Side last_side = last % 2 == 0 ? first_side : flip(first_side);
  if (last_side != bridge_side || schedule[last] != target) {
    throw Error(ErrorCode::kInvalidArgument, "last probe must end on the bridge");
  }
  double reach[2] = {0.0, 0.0};
  CowPathRun run{bridge, first_side, std::move(schedule), 0.0, 0.0};
  Side side = first_side;
  for (size_t i = 0; i < run.schedule.size(); ++i) {
    double d = run.schedule[i];
    double& r = reach[side == Side::kRight ? 1 : 0];
    if (!(d > r)) throw Error(ErrorCode::kInvalidArgument, "probe depths must increase per side");
    if (i < last && side == bridge_side && d >= target) {
      throw Error(ErrorCode::kInvalidArgument, "a probe before the last passes the bridge");
    }
    r = d;
    run.total += i < last ? 2.0 * d : d;
    side = flip(side);
  }
  run.ratio = run.total / target;
  return run;
}

SweepResult sweep_ratio(const std::vector<double>& bridges, Side first_side, double base, double multiplier) {
  if (bridges.empty()) throw Error(ErrorCode::kDomain, "empty sweep");
  SweepResult best{-1.0, 0.0};
  for (double b : bridges) {
    double ratio = simulate_doubling(b, first_side, base, multiplier).ratio;
    if (ratio > best.max_ratio) best = {ratio, b};
  }
  return best;
}

std::vector<double> symmetric_bridges(double lo, double hi, double step) {
  if (!(lo >= 1.0) || !(hi >= lo) || !(step > 0.0)) {
    throw Error(ErrorCode::kDomain, "need 1 <= min <= max and step > 0");
  }
  std::vector<double> positive;
  for (long k = 0;; ++k) {
    double b = lo + static_cast<double>(k) * step;
    if (b > hi) break;
    positive.push_back(b);
  }
  std::vector<double> out;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

LineReduction line_instance_from_cowpath(const CowPathRun& run) {
  if (!is_integral(run.bridge)) throw Error(ErrorCode::kInvalidArgument, "bridge must be an integer");
  for (double d : run.schedule) {
    if (!is_integral(d)) throw Error(ErrorCode::kInvalidArgument, "schedule must be integral");
  }
  const CowPathRun checked = make_cowpath_run(run.bridge, run.first_side, run.schedule);

  // Newly visited integers in walk order, the bridge last.
  std::vector<long> fresh;
  long reach[2] = {0, 0};
  Side side = checked.first_side;
  for (double d : checked.schedule) {
    long& r = reach[side == Side::kRight ? 1 : 0];
    long sgn = side == Side::kRight ? 1 : -1;
    for (long x = r + 1; x <= static_cast<long>(d); ++x) fresh.push_back(sgn * x);
    r = static_cast<long>(d);
    side = flip(side);
  }

  LineReduction out;
  out.instance.space = Line{};
  out.instance.facilities.push_back({0, LinePoint{0.0}, 1});
  for (long x : fresh) {
    out.instance.facilities.push_back({static_cast<int>(out.instance.facilities.size()), LinePoint{double(x)}, 1});
  }
  out.instance.customers = {LinePoint{0.0}, LinePoint{0.0}};
  for (size_t j = 0; j + 1 < fresh.size(); ++j) out.instance.customers.push_back(LinePoint{double(fresh[j])});

  out.trace.append(0, 0, 0.0);
  double at = 0.0;
  for (size_t j = 0; j < fresh.size(); ++j) {
    double next = static_cast<double>(fresh[j]);
    out.trace.append(static_cast<int>(j) + 1, static_cast<int>(j) + 1, std::abs(next - at));
    at = next;
  }
  return out;
}

CowPathRun cowpath_from_line_trace(const Instance& instance, const AssignmentTrace& trace) {
  if (!std::holds_alternative<Line>(instance.space)) not_reducible("not a line instance");
  const auto& records = trace.records;
  const size_t n = instance.customers.size();
  if (n < 2 || records.size() != n) not_reducible("trace must assign every customer, at least two");
  if (instance.facilities.size() != n) not_reducible("every facility must be used exactly once");
  for (const auto& f : instance.facilities) {
    if (f.capacity != 1) not_reducible("facilities must have unit capacity");
    if (!is_integral(std::get<LinePoint>(f.location).x)) not_reducible("facilities must sit on integers");
  }
  auto pos_of_customer = [&](size_t i) { return std::get<LinePoint>(instance.customers[i]).x; };
  auto pos_of_facility = [&](int id) {
    if (id < 0 || id >= static_cast<int>(instance.facilities.size())) not_reducible("unknown facility");
    return std::get<LinePoint>(instance.facilities[static_cast<size_t>(id)].location).x;
  };

  if (pos_of_customer(0) != 0.0 || pos_of_customer(1) != 0.0) not_reducible("first two customers must be at 0");
  if (records[0].customer != 0 || pos_of_facility(records[0].facility) != 0.0) {
    not_reducible("first customer must take the facility at 0");
  }
  long lo = 0, hi = 0;
  std::vector<double> schedule;
  Side first = Side::kRight;
  Side current = Side::kRight;
  double total = 0.0;
  double prev = 0.0;
  for (size_t j = 1; j < n; ++j) {
    if (records[j].customer != static_cast<int>(j)) not_reducible("trace out of arrival order");
    if (pos_of_customer(j) != prev) not_reducible("customer not placed on the previous facility");
    double x = pos_of_facility(records[j].facility);
    Side side;
    if (x == static_cast<double>(hi + 1)) {
      side = Side::kRight;
      ++hi;
    } else if (x == static_cast<double>(lo - 1)) {
      side = Side::kLeft;
      --lo;
    } else {
      not_reducible("assignment does not extend the visited interval");
    }
    if (j == 1) first = side;
    if (j == 1 || side != current) schedule.push_back(0.0);
    current = side;
    schedule.back() = std::abs(x);
    total += std::abs(x - prev);
    prev = x;
  }
  CowPathRun run = make_cowpath_run(prev, first, std::move(schedule));
  if (run.total != total) not_reducible("walk cost differs from trace cost");
  return run;
}

}  // namespace ofa
