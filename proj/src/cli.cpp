#include "ofa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "ofa/cowpath.hpp"
#include "ofa/error.hpp"
#include "ofa/harness.hpp"

namespace ofa {

namespace {

const std::vector<std::string> kParamFlags = {"n",     "rows", "cols",       "radius",    "k",        "s",
                                              "m",     "l",    "spacing",    "offset",    "gap",      "space",
                                              "size",  "facilities", "customers", "capacity"};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << text;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online facility assignment experiments"};
  app.require_subcommand(1);

  std::map<std::string, double> param_values;
  auto add_params = [&](CLI::App* sub) {
    for (const auto& name : kParamFlags) sub->add_option("--" + name, param_values[name], "generator parameter");
  };
  auto given_params = [&](CLI::App* sub) {
    Params p;
    for (const auto& name : kParamFlags) {
      if (sub->count("--" + name) > 0) p[name] = param_values[name];
    }
    return p;
  };

  std::uint64_t seed = 1;
  std::string out_path;
  double tolerance = 1e-9;

  auto* gen = app.add_subcommand("generate", "write one generated instance as JSON");
  std::string family;
  std::string alg_name = "greedy";
  gen->add_option("--family", family, "generator family")->required();
  gen->add_option("--alg", alg_name, "algorithm an adaptive family is built against");
  gen->add_option("--seed", seed, "seed for the random family");
  gen->add_option("--out", out_path, "output file (default stdout)");
  add_params(gen);

  auto* runc = app.add_subcommand("run", "run algorithms on one instance and print CSV rows");
  std::string instance_path;
  std::vector<std::string> algs;
  std::optional<double> bound;
  auto* fam_opt = runc->add_option("--family", family, "generator family");
  auto* inst_opt = runc->add_option("--instance", instance_path, "instance JSON file");
  fam_opt->excludes(inst_opt);
  runc->add_option("--alg", algs, "algorithm (repeatable)");
  runc->add_option("--bound", bound, "bound to check instead of the family bound");
  std::string weight_name = "uniform";
  runc->add_option("--weight", weight_name, "voronoi weight of a facility's remaining capacity")
      ->check(CLI::IsMember({"uniform", "capacity"}));
  runc->add_option("--seed", seed, "seed for the random family");
  runc->add_option("--out", out_path, "CSV output file (default stdout)");
  runc->add_option("--tolerance", tolerance, "slack allowed above the bound");
  add_params(runc);

  auto* sweep = app.add_subcommand("sweep", "run an experiment config");
  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> jobs_override;
  std::optional<double> tolerance_override;
  sweep->add_option("config", config_path, "config JSON file")->required();
  sweep->add_option("--seed", seed_override, "override the config seed");
  sweep->add_option("--out", out_path, "CSV output file (default: config output, else stdout)");
  sweep->add_option("--jobs", jobs_override, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--tolerance", tolerance_override, "slack allowed above the bound");

  auto* cow = app.add_subcommand("cowpath", "doubling search on a line");
  cow->require_subcommand(1);
  auto* cow_sweep = cow->add_subcommand("sweep", "CSV of bridge,total,ratio over +-[min,max]");
  double lo = 1, hi = 4096, step = 0.5, base = 1, multiplier = 2;
  std::string side = "right";
  cow_sweep->add_option("--min", lo);
  cow_sweep->add_option("--max", hi);
  cow_sweep->add_option("--step", step);
  cow_sweep->add_option("--base", base);
  cow_sweep->add_option("--multiplier", multiplier);
  cow_sweep->add_option("--side", side, "first probe side")->check(CLI::IsMember({"left", "right"}));
  cow_sweep->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* val = app.add_subcommand("validate", "check an instance file against the schema and invariants");
  val->add_option("instance", instance_path, "instance JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* failed = &app;
    for (auto* sub : app.get_subcommands()) {
      failed = sub;
      for (auto* inner : sub->get_subcommands()) failed = inner;
    }
    err << failed->help();
    return kExitUsage;
  }

  try {
    if (*gen) {
      Instance instance = generate(family, given_params(gen), parse_algorithm(alg_name), seed);
      emit(save_instance(instance), out_path, out);
      return kExitOk;
    }
    if (*runc) {
      std::vector<RatioReport> rows;
      const VoronoiWeight weight = weight_name == "capacity" ? VoronoiWeight::kCapacity : VoronoiWeight::kUniform;
      if (!instance_path.empty()) {
        Instance instance = load_instance_file(instance_path);
        if (algs.empty()) algs = {"greedy", "optimal-fill"};
        for (const auto& a : algs) {
          Algorithm alg = parse_algorithm(a);
          if (!is_compatible(alg, instance.space)) throw UsageError(a + " cannot run on this space");
          rows.push_back(measure("instance", instance_path, alg, instance, bound, weight));
        }
      } else if (!family.empty()) {
        if (algs.empty()) algs = default_algorithms(family);
        const Params p = given_params(runc);
        for (const auto& a : algs) {
          Algorithm alg = parse_algorithm(a);
          Instance instance = generate(family, p, alg, seed);
          if (!is_compatible(alg, instance.space)) throw UsageError(a + " cannot run on this space");
          rows.push_back(measure(family, format_params(p), alg, instance,
                                 bound ? bound : theoretical_bound(family, alg, instance), weight));
        }
      } else {
        throw UsageError("run needs --family or --instance");
      }
      emit(to_csv(rows, tolerance), out_path, out);
      return any_violation(rows, tolerance) ? kExitBoundViolation : kExitOk;
    }
    if (*sweep) {
      ExperimentConfig config = load_config_file(config_path);
      if (seed_override) config.seed = *seed_override;
      if (jobs_override) config.jobs = *jobs_override;
      if (tolerance_override) config.tolerance = *tolerance_override;
      if (!out_path.empty()) config.output = out_path;
      std::vector<RatioReport> rows = run_experiment(config);
      emit(to_csv(rows, config.tolerance), config.output, out);
      for (const auto& line : corollary_evidence(rows)) err << line << "\n";
      return any_violation(rows, config.tolerance) ? kExitBoundViolation : kExitOk;
    }
    if (*cow_sweep) {
      const Side first = side == "left" ? Side::kLeft : Side::kRight;
      std::string csv = "bridge,total,ratio\n";
      SweepResult best{-1.0, 0.0};
      for (double b : symmetric_bridges(lo, hi, step)) {
        CowPathRun r = simulate_doubling(b, first, base, multiplier);
        csv += format_number(b) + ',' + format_number(r.total) + ',' + format_number(r.ratio) + '\n';
        if (r.ratio > best.max_ratio) best = {r.ratio, b};
      }
      emit(csv, out_path, out);
      err << "max ratio " << format_number(best.max_ratio) << " at bridge " << format_number(best.argmax) << "\n";
      return kExitOk;
    }
    if (*val) {
      Instance instance;
      try {
        instance = load_instance_file(instance_path);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kParse) throw;
        err << instance_path << ": " << e.what() << "\n";
        return kExitBoundViolation;
      }
      auto problems = validate(instance);
      for (const auto& d : problems) err << instance_path << ": " << d.code << ": " << d.message << "\n";
      if (!problems.empty()) return kExitBoundViolation;
      out << instance_path << ": ok (" << kind_name(kind_of(instance.space)) << ", " << instance.facilities.size()
          << " facilities, " << instance.customers.size() << " customers)\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ofa
