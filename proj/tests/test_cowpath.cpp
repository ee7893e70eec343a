#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ofa/adversary.hpp"
#include "ofa/cowpath.hpp"
#include "ofa/error.hpp"
#include "ofa/offline_opt.hpp"

using namespace ofa;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalInvariant;
}

}  // namespace

TEST_CASE("doubling examples") {
  CowPathRun a = simulate_doubling(1);
  CHECK(a.total == 1);
  CHECK(a.ratio == 1);
  CHECK(a.schedule == std::vector<double>{1});

  // right 1 and back, then left 1
  CowPathRun b = simulate_doubling(-1);
  CHECK(b.total == 3);
  CHECK(b.ratio == 3);
  CHECK(b.schedule == std::vector<double>{1, 1});

  CowPathRun c = simulate_doubling(3);
  CHECK(c.schedule == std::vector<double>{1, 2, 3});
  CHECK(c.total == 9);

  CowPathRun d = simulate_doubling(-1, Side::kLeft);
  CHECK(d.total == 1);
}

TEST_CASE("just past a turning point the ratio nears 9") {
  // bridge at 2^8 + 0.001 on the right; the probe of 256 on that side just misses
  CowPathRun r = simulate_doubling(256.001);
  CHECK(r.total == doctest::Approx(2302.001));
  CHECK(std::abs(r.ratio - 9) < 0.2);
}

TEST_CASE("domain errors") {
  CHECK(code_of([] { simulate_doubling(0.5); }) == ErrorCode::kDomain);
  CHECK(code_of([] { simulate_doubling(-0.99); }) == ErrorCode::kDomain);
  CHECK(code_of([] { simulate_doubling(2, Side::kRight, 1, 1); }) == ErrorCode::kDomain);
  CHECK(code_of([] { sweep_ratio({}); }) == ErrorCode::kDomain);
  CHECK(code_of([] { symmetric_bridges(0.5, 4, 1); }) == ErrorCode::kDomain);
}

TEST_CASE("schedule invariants") {
  for (double b : {1.5, -7.25, 100.0, -4096.0, 513.0}) {
    for (Side s : {Side::kLeft, Side::kRight}) {
      CowPathRun r = simulate_doubling(b, s);
      CHECK(r.schedule.back() == std::abs(b));
      for (size_t i = 2; i < r.schedule.size(); ++i) CHECK(r.schedule[i] > r.schedule[i - 2]);
      CowPathRun again = make_cowpath_run(b, s, r.schedule);
      CHECK(again.total == r.total);
    }
  }
  CHECK_THROWS_AS(make_cowpath_run(3, Side::kRight, {1, 2, 4}), Error);
  CHECK_THROWS_AS(make_cowpath_run(3, Side::kRight, {4, 2, 3}), Error);
  CHECK_THROWS_AS(make_cowpath_run(3, Side::kRight, {2, 1, 1, 3}), Error);
}

TEST_CASE("sweep examples") {
  CHECK(sweep_ratio({1, -1}).max_ratio == 3);
  CHECK(sweep_ratio({1, -1}).argmax == -1);
  CHECK(sweep_ratio({1}).max_ratio == 1);
  SweepResult full = sweep_ratio(symmetric_bridges(1, 4096, 0.5));
  CHECK(full.max_ratio > 8.9);
  CHECK(full.max_ratio <= 9);
}

TEST_CASE("denser sweeps never lower the maximum") {
  double coarse = sweep_ratio(symmetric_bridges(1, 512, 1)).max_ratio;
  double fine = sweep_ratio(symmetric_bridges(1, 512, 0.5)).max_ratio;
  double finer = sweep_ratio(symmetric_bridges(1, 512, 0.25)).max_ratio;
  CHECK(coarse <= fine);
  CHECK(fine <= finer);
}

TEST_CASE("symmetric bridges") {
  CHECK(symmetric_bridges(1, 2, 0.5) == std::vector<double>{-2, -1.5, -1, 1, 1.5, 2});
}

TEST_CASE("cow run to line instance") {
  CowPathRun run = make_cowpath_run(3, Side::kRight, {1, 2, 3});
  LineReduction red = line_instance_from_cowpath(run);
  CHECK(red.instance.facilities.size() == 6);
  CHECK(red.instance.customers ==
        std::vector<Location>{LinePoint{0}, LinePoint{0}, LinePoint{1}, LinePoint{-1}, LinePoint{-2}, LinePoint{2}});
  CHECK(validate(red.instance).empty());
  CHECK(validate_trace(red.instance, red.trace).empty());
  CHECK(red.trace.total == 9);
  CHECK(solve_optimal(red.instance.space, red.instance.facilities, red.instance.customers).total_cost == 3);

  LineReduction one = line_instance_from_cowpath(simulate_doubling(1));
  CHECK(one.trace.total == 1);
  CHECK(solve_optimal(one.instance.space, one.instance.facilities, one.instance.customers).total_cost == 1);

  CHECK_THROWS_AS(line_instance_from_cowpath(simulate_doubling(2.5)), Error);
}

TEST_CASE("line trace round trip") {
  for (int m : {7, 9, 11}) {
    for (Algorithm alg : {Algorithm::kOptimalFill, Algorithm::kGreedy}) {
      Instance in = gen_line_chase(m, alg);
      AssignmentTrace trace = run(alg, in);
      const double opt = solve_optimal(in.space, in.facilities, in.customers).total_cost;
      CowPathRun cow = cowpath_from_line_trace(in, trace);
      CHECK(cow.total == trace.total);
      CHECK(std::abs(cow.bridge) == opt);

      LineReduction back = line_instance_from_cowpath(cow);
      CHECK(back.trace.total == trace.total);
      CHECK(solve_optimal(back.instance.space, back.instance.facilities, back.instance.customers).total_cost == opt);
      CowPathRun again = cowpath_from_line_trace(back.instance, back.trace);
      CHECK(again.schedule == cow.schedule);
      CHECK(again.bridge == cow.bridge);
    }
  }
}

TEST_CASE("optimal-fill chase alternates like a cow") {
  CowPathRun cow = cowpath_from_line_trace(gen_line_chase(7, Algorithm::kOptimalFill),
                                           run(Algorithm::kOptimalFill, gen_line_chase(7, Algorithm::kOptimalFill)));
  CHECK(cow.schedule == std::vector<double>{1, 1, 2, 2, 3, 3});
}

TEST_CASE("non-chase traces are rejected") {
  auto code_for = [](const Instance& in) {
    return code_of([&] { cowpath_from_line_trace(in, run(Algorithm::kGreedy, in)); });
  };
  CHECK(code_for(gen_line_greedy_trap(3)) == ErrorCode::kNotReducible);
  CHECK(code_for(gen_spider(2, 1)) == ErrorCode::kNotReducible);

  Instance gap = gen_line_chase(5);
  gap.facilities[4].location = LinePoint{7};
  CHECK(code_for(gap) == ErrorCode::kNotReducible);
}
