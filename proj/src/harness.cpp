#include "ofa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ofa/adversary.hpp"
#include "ofa/error.hpp"
#include "ofa/offline_opt.hpp"

namespace ofa {

namespace {

struct Family {
  std::string name;
  Params defaults;
  std::vector<std::string> algorithms;
};

const std::vector<Family>& families() {
  static const std::vector<Family> table = {
      {"cycle-chase", {{"m", 6}}, {"optimal-fill"}},
      {"grid-greedy-alt", {{"rows", 4}, {"cols", 4}, {"l", 1}}, {"greedy"}},
      {"grid-greedy-chase", {{"rows", 4}, {"cols", 4}, {"l", 1}}, {"greedy"}},
      {"grid-optfill-full", {{"rows", 5}, {"cols", 5}}, {"optimal-fill"}},
      {"grid-optfill-ring", {{"n", 7}, {"radius", 2}}, {"optimal-fill"}},
      {"line-chase", {{"m", 7}}, {"greedy", "optimal-fill"}},
      {"line-greedy-trap", {{"k", 5}, {"gap", 0.25}}, {"greedy", "optimal-fill"}},
      {"path-chase", {{"m", 6}}, {"optimal-fill"}},
      {"plane-chain", {{"n", 4}, {"spacing", 1}, {"offset", 0}}, {"voronoi"}},
      // space: 0 line, 1 grid, 2 graph, 3 plane
      {"random",
       {{"space", 0}, {"facilities", 4}, {"customers", 4}, {"capacity", 1}, {"size", 10}},
       {"greedy", "optimal-fill"}},
      {"spider", {{"k", 4}, {"s", 3}}, {"optimal-fill"}},
  };
  return table;
}

const Family& find_family(const std::string& name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + name + "'");
}

Params resolve(const Family& family, const Params& given) {
  Params out = family.defaults;
  for (const auto& [key, value] : given) {
    if (!out.count(key)) throw Error(ErrorCode::kInvalidArgument, "family " + family.name + " has no parameter '" + key + "'");
    out[key] = value;
  }
  return out;
}

int as_int(const Params& p, const std::string& key) {
  double v = p.at(key);
  if (v != std::round(v) || std::abs(v) > 1e9) {
    throw Error(ErrorCode::kInvalidArgument, "parameter '" + key + "' must be an integer");
  }
  return static_cast<int>(v);
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

Location random_location(const MetricSpace& space, int size, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& s) -> Location {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Line>) {
          return LinePoint{static_cast<double>(below(rng, size + 1))};
        } else if constexpr (std::is_same_v<S, Grid>) {
          return GridVertex{below(rng, s.rows), below(rng, s.cols)};
        } else if constexpr (std::is_same_v<S, Graph>) {
          return GraphVertex{below(rng, s.vertex_count())};
        } else {
          return PlanePoint{unit_real(rng) * size, unit_real(rng) * size};
        }
      },
      space);
}

// Random tree plus a few chords.
Graph random_graph(int n, std::mt19937_64& rng) {
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.insert({below(rng, v), v});
  for (int extra = 0; extra < n / 2; ++extra) {
    int u = below(rng, n), v = below(rng, n);
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Instance random_instance(const Params& p, std::uint64_t seed) {
  const int kind = as_int(p, "space");
  const int nf = as_int(p, "facilities");
  const int cap = as_int(p, "capacity");
  const int size = as_int(p, "size");
  if (nf < 1 || cap < 1 || size < 2) throw Error(ErrorCode::kInvalidArgument, "random: need facilities, capacity >= 1, size >= 2");
  std::mt19937_64 rng(seed);
  Instance instance;
  switch (kind) {
    case 0: instance.space = Line{}; break;
    case 1: instance.space = Grid{size, size}; break;
    case 2: instance.space = random_graph(size, rng); break;
    case 3: instance.space = Plane{}; break;
    default: throw Error(ErrorCode::kInvalidArgument, "random: space must be 0 (line), 1 (grid), 2 (graph) or 3 (plane)");
  }
  for (int i = 0; i < nf; ++i) {
    instance.facilities.push_back({i, random_location(instance.space, size, rng), 1 + below(rng, cap)});
  }
  const int n = std::min(as_int(p, "customers"), instance.total_capacity());
  for (int i = 0; i < n; ++i) instance.customers.push_back(random_location(instance.space, size, rng));
  return instance;
}

bool is_grid_chase(const std::string& f) { return f == "grid-greedy-chase" || f == "grid-greedy-alt"; }
bool is_graph_chase(const std::string& f) {
  return f == "spider" || f == "path-chase" || f == "cycle-chase" || f == "grid-optfill-ring" ||
         f == "grid-optfill-full";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

struct Task {
  std::string family;
  Params params;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed;
  int repetition;
  bool uses_seed;
};

std::vector<RatioReport> run_task(const Task& task) {
  Params shown = task.params;
  if (task.uses_seed) shown["rep"] = task.repetition;
  const std::string params = format_params(shown);
  std::vector<RatioReport> rows;
  for (Algorithm alg : task.algorithms) {
    try {
      Instance instance = generate(task.family, task.params, alg, task.seed);
      if (!is_compatible(alg, instance.space)) {
        RatioReport row = make_ratio_report(std::string(algorithm_name(alg)), task.family, params, 0, 0, std::nullopt);
        row.diagnostic = "incompatible-space";
        rows.push_back(row);
        continue;
      }
      rows.push_back(measure(task.family, params, alg, instance, theoretical_bound(task.family, alg, instance)));
    } catch (const Error& e) {
      RatioReport row = make_ratio_report(std::string(algorithm_name(alg)), task.family, params, 0, 0, std::nullopt);
      row.diagnostic = to_string(e.code());
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  try {
    ExperimentConfig config;
    config.seed = j.value("seed", std::uint64_t{1});
    config.tolerance = j.value("tolerance", 1e-9);
    config.jobs = j.value("jobs", 1);
    config.output = j.value("output", std::string{});
    for (const auto& e : j.at("experiments")) {
      ExperimentSpec spec;
      spec.family = e.at("family").get<std::string>();
      const Family& family = find_family(spec.family);
      if (e.contains("params")) {
        for (const auto& [key, value] : e.at("params").items()) {
          if (!family.defaults.count(key)) {
            throw Error(ErrorCode::kInvalidArgument, "family " + spec.family + " has no parameter '" + key + "'");
          }
          spec.params[key] = value.is_array() ? value.get<std::vector<double>>() : std::vector<double>{value.get<double>()};
        }
      }
      if (e.contains("algorithms")) {
        spec.algorithms = e.at("algorithms").get<std::vector<std::string>>();
        for (const auto& a : spec.algorithms) parse_algorithm(a);
      }
      spec.repetitions = e.value("repetitions", 1);
      if (spec.repetitions < 1) throw Error(ErrorCode::kInvalidArgument, "repetitions must be >= 1");
      if (e.contains("seed")) spec.seed = e.at("seed").get<std::uint64_t>();
      config.experiments.push_back(std::move(spec));
    }
    if (config.jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
  return config_from_json(j);
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : families()) out.push_back(f.name);
  return out;
}

std::vector<std::string> default_algorithms(const std::string& family) { return find_family(family).algorithms; }

Instance generate(const std::string& name, const Params& given, Algorithm algorithm, std::uint64_t seed) {
  const Family& family = find_family(name);
  const Params p = resolve(family, given);
  if (name == "grid-greedy-chase" || name == "grid-greedy-alt") {
    Instance base = name == "grid-greedy-chase" ? gen_grid_greedy_chase(as_int(p, "rows"), as_int(p, "cols"))
                                                : gen_grid_greedy_alt(as_int(p, "rows"), as_int(p, "cols"));
    return replicate_capacity(base, as_int(p, "l"));
  }
  if (name == "grid-optfill-ring") return gen_grid_optfill_ring(as_int(p, "n"), as_int(p, "radius"));
  if (name == "grid-optfill-full") return gen_grid_optfill_full(as_int(p, "rows"), as_int(p, "cols"));
  if (name == "spider") return gen_spider(as_int(p, "k"), as_int(p, "s"));
  if (name == "path-chase") return gen_path_and_cycle(as_int(p, "m")).first;
  if (name == "cycle-chase") return gen_path_and_cycle(as_int(p, "m")).second;
  if (name == "plane-chain") return gen_plane_chain(as_int(p, "n"), p.at("spacing"), p.at("offset"));
  if (name == "line-chase") return gen_line_chase(as_int(p, "m"), algorithm);
  if (name == "line-greedy-trap") return gen_line_greedy_trap(as_int(p, "k"), p.at("gap"), algorithm);
  return random_instance(p, seed);
}

std::optional<double> theoretical_bound(const std::string& family, Algorithm algorithm, const Instance& instance) {
  if (algorithm == Algorithm::kGreedy && is_grid_chase(family)) {
    const auto& g = std::get<Grid>(instance.space);
    return static_cast<double>(g.rows * g.cols + g.rows + g.cols);
  }
  if (algorithm == Algorithm::kOptimalFill && is_graph_chase(family)) {
    return 2.0 * static_cast<double>(instance.facilities.size());
  }
  if (algorithm == Algorithm::kVoronoi && family == "plane-chain") {
    return 2.0 * static_cast<double>(instance.facilities.size()) - 1.0;
  }
  return std::nullopt;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  if (ec != std::errc{}) throw Error(ErrorCode::kInternalInvariant, "number formatting failed");
  return std::string(buf, end);
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + '=' + format_number(value);
  }
  return out;
}

RatioReport measure(const std::string& family, const std::string& params, Algorithm algorithm,
                    const Instance& instance, std::optional<double> bound, VoronoiWeight weight) {
  AssignmentTrace trace = run(algorithm, instance, weight);
  double opt = solve_optimal(instance.space, instance.facilities, instance.customers).total_cost;
  return make_ratio_report(std::string(algorithm_name(algorithm)), family, params, trace.total, opt, bound);
}

std::vector<RatioReport> run_experiment(const ExperimentConfig& config) {
  std::vector<Task> tasks;
  for (size_t e = 0; e < config.experiments.size(); ++e) {
    const ExperimentSpec& spec = config.experiments[e];
    std::vector<Algorithm> algorithms;
    for (const auto& a : spec.algorithms.empty() ? default_algorithms(spec.family) : spec.algorithms) {
      algorithms.push_back(parse_algorithm(a));
    }
    std::vector<Params> grid{{}};
    for (const auto& [key, values] : spec.params) {
      std::vector<Params> next;
      for (const auto& partial : grid) {
        for (double v : values) {
          Params p = partial;
          p[key] = v;
          next.push_back(std::move(p));
        }
      }
      grid = std::move(next);
    }
    const bool uses_seed = spec.family == "random";
    const std::uint64_t base = spec.seed.value_or(config.seed);
    for (size_t k = 0; k < grid.size(); ++k) {
      for (int rep = 0; rep < spec.repetitions; ++rep) {
        std::uint64_t seed = uses_seed ? mix(base, (e << 40) ^ (k << 20) ^ static_cast<std::uint64_t>(rep)) : base;
        tasks.push_back({spec.family, resolve(find_family(spec.family), grid[k]), algorithms, seed, rep, uses_seed});
      }
    }
  }

  std::vector<std::vector<RatioReport>> results(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = run_task(tasks[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<RatioReport> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  std::stable_sort(rows.begin(), rows.end(), [](const RatioReport& a, const RatioReport& b) {
    return std::tie(a.family, a.params, a.algorithm) < std::tie(b.family, b.params, b.algorithm);
  });
  return rows;
}

bool within_bound(const RatioReport& row, double tolerance) {
  if (row.skipped() || !row.ratio || !row.theoretical_bound) return true;
  return *row.ratio <= *row.theoretical_bound + tolerance;
}

bool any_violation(const std::vector<RatioReport>& rows, double tolerance) {
  return std::any_of(rows.begin(), rows.end(), [&](const RatioReport& r) { return !within_bound(r, tolerance); });
}

std::string csv_header() { return "family,params,algorithm,cost_alg,cost_opt,ratio,bound,within_bound"; }

std::string csv_row(const RatioReport& row, double tolerance) {
  std::string out = csv_field(row.family) + ',' + csv_field(row.params) + ',' + csv_field(row.algorithm) + ',';
  if (row.skipped()) return out + ",,skipped,," + csv_field(row.diagnostic);
  out += format_number(row.cost_alg) + ',' + format_number(row.cost_opt) + ',';
  out += (row.ratio ? format_number(*row.ratio) : std::string("undef")) + ',';
  out += (row.theoretical_bound ? format_number(*row.theoretical_bound) : std::string()) + ',';
  if (row.ratio && row.theoretical_bound) out += within_bound(row, tolerance) ? "true" : "false";
  return out;
}

std::string to_csv(const std::vector<RatioReport>& rows, double tolerance) {
  std::string out = csv_header() + '\n';
  for (const auto& r : rows) out += csv_row(r, tolerance) + '\n';
  return out;
}

std::vector<std::string> corollary_evidence(const std::vector<RatioReport>& rows) {
  std::map<std::string, std::pair<double, std::string>> best;
  for (const auto& r : rows) {
    if (r.family.rfind("line-", 0) != 0 || !r.ratio) continue;
    auto& slot = best[r.algorithm];
    if (slot.second.empty() || *r.ratio > slot.first) slot = {*r.ratio, r.family + " " + r.params};
  }
  std::vector<std::string> out;
  for (const auto& [alg, value] : best) {
    out.push_back("evidence only (not a proof): max line ratio for " + alg + " = " + format_number(value.first) +
                  " at " + value.second + (value.first > 9.001 ? " exceeds" : " does not exceed") + " 9.001");
  }
  return out;
}

std::vector<LowerBoundViolation> opt_lower_bound_violations(const Instance& instance, const AssignmentTrace& trace,
                                                            OptScope scope) {
  std::vector<LowerBoundViolation> out;
  IncrementalAssignment opt(instance.space, instance.facilities);
  const double full = solve_optimal(instance.space, instance.facilities, instance.customers).total_cost;
  const double slack = 1e-9;
  for (const auto& rec : trace.records) {
    const Location& c = instance.customers[static_cast<size_t>(rec.customer)];
    opt.add_customer(c);
    const Location& f = instance.facilities[static_cast<size_t>(rec.facility)].location;
    const double x = distance(instance.space, c, f);
    double nearest = x;  // falls back to the assigned facility itself (x' = 0)
    for (const auto& g : instance.facilities) {
      if (g.id == rec.facility) continue;
      double dc = distance(instance.space, c, g.location);
      double df = distance(instance.space, g.location, f);
      if (dc + df <= x + slack * std::max(1.0, x) && dc < nearest) nearest = dc;
    }
    const double x_prime = x - nearest;
    const double total = scope == OptScope::kPrefix ? opt.total_cost() : full;
    if (total + slack * std::max(1.0, total) < x_prime / 2.0) out.push_back({rec.customer, x_prime, total});
  }
  return out;
}

}  // namespace ofa
