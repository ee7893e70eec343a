#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ofa/model.hpp"
#include "ofa/online.hpp"

namespace ofa {

/// Parameter values of one generator call, by name.
using Params = std::map<std::string, double>;

/// One generator with every parameter given as a list; the runs cover the
/// cartesian product, each repeated `repetitions` times.
struct ExperimentSpec {
  std::string family;
  std::map<std::string, std::vector<double>> params;
  std::vector<std::string> algorithms;  // empty: the family's default
  int repetitions = 1;
  std::optional<std::uint64_t> seed;    // overrides the config seed
};

struct ExperimentConfig {
  std::vector<ExperimentSpec> experiments;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int jobs = 1;
  std::string output;  // CSV path; empty means stdout
};

ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

/// Known generator families.
std::vector<std::string> family_names();

/// Algorithms the family runs when the experiment lists none.
std::vector<std::string> default_algorithms(const std::string& family);

/// Builds one instance. Adaptive families are generated against `algorithm`;
/// `seed` only matters to the random family. Missing parameters take their
/// defaults; unknown ones throw kInvalidArgument.
Instance generate(const std::string& family, const Params& params, Algorithm algorithm, std::uint64_t seed);

/// Attached competitive bound, if the family/algorithm pair has one:
/// greedy on the grid chase families r*c + r + c, optimal-fill on graph and
/// grid chase families 2|F|, voronoi on the plane chain 2n - 1.
std::optional<double> theoretical_bound(const std::string& family, Algorithm algorithm, const Instance& instance);

/// "name=value;..." in key order.
std::string format_params(const Params& params);

/// One row per (instance, algorithm), sorted by family, params, algorithm.
/// Incompatible pairs come back as skipped rows.
std::vector<RatioReport> run_experiment(const ExperimentConfig& config);

/// Runs one instance under `algorithm` and measures it against OPT.
RatioReport measure(const std::string& family, const std::string& params, Algorithm algorithm,
                    const Instance& instance, std::optional<double> bound,
                    VoronoiWeight weight = VoronoiWeight::kUniform);

bool within_bound(const RatioReport& row, double tolerance);
/// True if some row has a ratio above its bound.
bool any_violation(const std::vector<RatioReport>& rows, double tolerance);

std::string csv_header();
std::string csv_row(const RatioReport& row, double tolerance);
std::string to_csv(const std::vector<RatioReport>& rows, double tolerance);

/// At most 12 significant digits, so float noise in plane costs does not reach
/// the CSV.
std::string format_number(double value);

/// Lines summarizing the largest line-family ratio per algorithm against
/// 9.001. Labeled as evidence; empty if no line rows.
std::vector<std::string> corollary_evidence(const std::vector<RatioReport>& rows);

/// Steps of an optimal-fill trace where OPT is below x'/2, with x' the
/// distance from the assigned facility to the facility nearest the customer on
/// a shortest path between them (the customer's own vertex counts). OPT is
/// taken over the whole sequence, or over the prefix ending at the step.
struct LowerBoundViolation {
  int customer = 0;
  double x_prime = 0.0;
  double opt = 0.0;
};
enum class OptScope { kFullSequence, kPrefix };
std::vector<LowerBoundViolation> opt_lower_bound_violations(const Instance& instance, const AssignmentTrace& trace,
                                                            OptScope scope = OptScope::kFullSequence);

}  // namespace ofa
