#include "ofa/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ofa/error.hpp"

namespace ofa {

using nlohmann::json;

int Instance::total_capacity() const {
  int sum = 0;
  for (const auto& f : facilities) sum += f.capacity;
  return sum;
}

double total_cost(const AssignmentTrace& trace) {
  double sum = 0.0;
  for (const auto& r : trace.records) sum += r.cost;
  return sum;
}

RatioReport make_ratio_report(std::string algorithm, std::string family, std::string params,
                              double cost_alg, double cost_opt, std::optional<double> bound) {
  RatioReport report;
  report.algorithm = std::move(algorithm);
  report.family = std::move(family);
  report.params = std::move(params);
  report.cost_alg = cost_alg;
  report.cost_opt = cost_opt;
  if (cost_opt > 0.0) report.ratio = cost_alg / cost_opt;
  report.theoretical_bound = bound;
  return report;
}

namespace {

std::string describe(const Location& loc) { return location_to_json(loc).dump(); }

bool costs_match(const MetricSpace& space, double recorded, double expected) {
  if (is_exact(space)) return recorded == expected;
  return std::abs(recorded - expected) <= 1e-12 * std::max(1.0, std::abs(expected));
}

// Graph view of grid/graph spaces for the adjacency predicate.
struct VertexView {
  Graph graph;
  std::vector<int> facility_vertex;
  std::vector<int> customer_vertex;
};

VertexView vertex_view(const Instance& instance) {
  auto to_id = [&](const Location& loc) {
    if (const auto* g = std::get_if<GridVertex>(&loc)) return g->row * std::get<Grid>(instance.space).cols + g->col;
    return std::get<GraphVertex>(loc).id;
  };
  VertexView view{std::holds_alternative<Grid>(instance.space)
                      ? make_grid_graph(std::get<Grid>(instance.space).rows, std::get<Grid>(instance.space).cols)
                      : std::get<Graph>(instance.space),
                  {},
                  {}};
  for (const auto& f : instance.facilities) view.facility_vertex.push_back(to_id(f.location));
  for (const auto& c : instance.customers) view.customer_vertex.push_back(to_id(c));
  return view;
}

bool line_well_distributed(const Instance& instance) {
  std::vector<double> sites;
  for (const auto& f : instance.facilities) sites.push_back(std::get<LinePoint>(f.location).x);
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  std::vector<double> customers;
  for (const auto& c : instance.customers) customers.push_back(std::get<LinePoint>(c).x);
  std::sort(customers.begin(), customers.end());
  for (size_t i = 0; i + 1 < sites.size(); ++i) {
    auto it = std::upper_bound(customers.begin(), customers.end(), sites[i]);
    if (it == customers.end() || *it >= sites[i + 1]) return false;
  }
  return true;
}

bool graph_well_distributed(const Instance& instance) {
  VertexView view = vertex_view(instance);
  const int n = view.graph.vertex_count();
  std::vector<char> is_facility(n, 0), has_customer(n, 0);
  for (int v : view.facility_vertex) is_facility[v] = 1;
  for (int v : view.customer_vertex) has_customer[v] = 1;

  // Components of the facility-free subgraph.
  std::vector<int> comp(n, -1);
  int comps = 0;
  const auto& adj = view.graph.adjacency();
  for (int s = 0; s < n; ++s) {
    if (is_facility[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!is_facility[w] && comp[w] < 0) {
          comp[w] = comps;
          stack.push_back(w);
        }
      }
    }
    ++comps;
  }
  std::vector<char> comp_has_customer(comps, 0);
  std::vector<std::set<int>> boundary(comps);
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0 && has_customer[v]) comp_has_customer[comp[v]] = 1;
    if (!is_facility[v]) continue;
    for (int w : adj[v]) {
      if (comp[w] >= 0) boundary[comp[w]].insert(v);
    }
  }
  // A pair adjacent through component K is satisfied if it is edge-joined or
  // shares some component that holds a customer.
  std::set<std::pair<int, int>> covered;
  for (int k = 0; k < comps; ++k) {
    if (!comp_has_customer[k]) continue;
    for (int u : boundary[k]) {
      for (int v : boundary[k]) {
        if (u < v) covered.emplace(u, v);
      }
    }
  }
  for (int k = 0; k < comps; ++k) {
    if (comp_has_customer[k]) continue;
    for (int u : boundary[k]) {
      for (int v : boundary[k]) {
        if (u < v && !view.graph.has_edge(u, v) && !covered.count({u, v})) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> validate(const Instance& instance) {
  std::vector<Diagnostic> out;
  for (size_t i = 0; i < instance.facilities.size(); ++i) {
    const auto& f = instance.facilities[i];
    if (f.id != static_cast<int>(i)) {
      out.push_back({"non-dense-id", "facility at position " + std::to_string(i) + " has id " + std::to_string(f.id)});
    }
    if (f.capacity < 1) {
      out.push_back({"invalid-capacity", "facility " + std::to_string(f.id) + " has capacity " + std::to_string(f.capacity)});
    }
    if (!is_valid_location(instance.space, f.location)) {
      out.push_back({"invalid-location", "facility " + std::to_string(f.id) + " at " + describe(f.location)});
    }
  }
  for (size_t i = 0; i < instance.customers.size(); ++i) {
    if (!is_valid_location(instance.space, instance.customers[i])) {
      out.push_back({"invalid-location", "customer " + std::to_string(i) + " at " + describe(instance.customers[i])});
    }
  }
  if (static_cast<long>(instance.customers.size()) > instance.total_capacity()) {
    out.push_back({"capacity-overflow", std::to_string(instance.customers.size()) + " customers exceed total capacity " +
                                            std::to_string(instance.total_capacity())});
  }
  return out;
}

void require_valid(const Instance& instance) {
  auto diags = validate(instance);
  if (!diags.empty()) throw Error(ErrorCode::kInvalidArgument, diags.front().code + ": " + diags.front().message);
}

std::vector<Diagnostic> validate_trace(const Instance& instance, const AssignmentTrace& trace) {
  std::vector<Diagnostic> out;
  const int facility_count = static_cast<int>(instance.facilities.size());
  std::vector<int> load(facility_count, 0);
  if (trace.records.size() != instance.customers.size()) {
    out.push_back({"unassigned-customer", std::to_string(trace.records.size()) + " records for " +
                                              std::to_string(instance.customers.size()) + " customers"});
  }
  for (size_t i = 0; i < trace.records.size(); ++i) {
    const auto& r = trace.records[i];
    if (r.customer != static_cast<int>(i)) {
      out.push_back({"order", "record " + std::to_string(i) + " names customer " + std::to_string(r.customer)});
      continue;
    }
    if (r.customer >= static_cast<int>(instance.customers.size())) {
      out.push_back({"unknown-customer", "customer " + std::to_string(r.customer)});
      continue;
    }
    if (r.facility < 0 || r.facility >= facility_count) {
      out.push_back({"unknown-facility", "customer " + std::to_string(i) + " -> facility " + std::to_string(r.facility)});
      continue;
    }
    if (++load[r.facility] == instance.facilities[r.facility].capacity + 1) {
      out.push_back({"capacity-exceeded", "facility " + std::to_string(r.facility)});
    }
    double d = distance(instance.space, instance.customers[i], instance.facilities[r.facility].location);
    if (!costs_match(instance.space, r.cost, d)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "customer " << i << " recorded " << r.cost << " but distance is " << d;
      out.push_back({"cost-mismatch", msg.str()});
    }
  }
  double sum = total_cost(trace);
  if (std::abs(trace.total - sum) > 1e-9 * std::max(1.0, sum)) {
    out.push_back({"total-mismatch", "trace total disagrees with record sum"});
  }
  return out;
}

bool is_well_distributed(const Instance& instance) {
  switch (kind_of(instance.space)) {
    case SpaceKind::kLine: return line_well_distributed(instance);
    case SpaceKind::kGrid:
    case SpaceKind::kGraph: return graph_well_distributed(instance);
    case SpaceKind::kPlane: break;
  }
  throw Error(ErrorCode::kUnsupportedPredicate, "well-distributedness is defined on line and graph spaces only");
}

Segment cover_area(const std::vector<Facility>& facilities, const std::vector<int>& remaining, int id) {
  if (id < 0 || id >= static_cast<int>(facilities.size())) {
    throw Error(ErrorCode::kInvalidArgument, "unknown facility " + std::to_string(id));
  }
  const auto* self = std::get_if<LinePoint>(&facilities[id].location);
  if (self == nullptr) throw Error(ErrorCode::kUnsupportedPredicate, "cover area is defined on the line only");
  std::optional<double> left, right;
  for (size_t j = 0; j < facilities.size(); ++j) {
    if (static_cast<int>(j) == id || remaining[j] <= 0) continue;
    double x = std::get<LinePoint>(facilities[j].location).x;
    if (x < self->x && (!left || x > *left)) left = x;
    if (x > self->x && (!right || x < *right)) right = x;
  }
  Segment seg;
  if (left) seg.lo = (self->x + *left) / 2.0;
  if (right) seg.hi = (self->x + *right) / 2.0;
  return seg;
}

json location_to_json(const Location& loc) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinePoint>) {
          return {{"line", p.x}};
        } else if constexpr (std::is_same_v<T, GridVertex>) {
          return {{"grid", {p.row, p.col}}};
        } else if constexpr (std::is_same_v<T, GraphVertex>) {
          return {{"vertex", p.id}};
        } else {
          return {{"plane", {p.x, p.y}}};
        }
      },
      loc);
}

Location location_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw Error(ErrorCode::kParse, "location must be a one-key object: " + j.dump());
  if (j.contains("line")) return LinePoint{j.at("line").get<double>()};
  if (j.contains("grid")) return GridVertex{j.at("grid").at(0).get<int>(), j.at("grid").at(1).get<int>()};
  if (j.contains("vertex")) return GraphVertex{j.at("vertex").get<int>()};
  if (j.contains("plane")) return PlanePoint{j.at("plane").at(0).get<double>(), j.at("plane").at(1).get<double>()};
  throw Error(ErrorCode::kParse, "unknown location kind: " + j.dump());
}

json space_to_json(const MetricSpace& space) {
  switch (kind_of(space)) {
    case SpaceKind::kLine: return {{"kind", "line"}};
    case SpaceKind::kPlane: return {{"kind", "plane"}};
    case SpaceKind::kGrid: {
      const auto& g = std::get<Grid>(space);
      return {{"kind", "grid"}, {"rows", g.rows}, {"cols", g.cols}};
    }
    case SpaceKind::kGraph: {
      const auto& g = std::get<Graph>(space);
      json edges = json::array();
      for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
      return {{"kind", "graph"}, {"vertices", g.vertex_count()}, {"edges", edges}};
    }
  }
  return {};
}

MetricSpace space_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "line") return Line{};
  if (kind == "plane") return Plane{};
  if (kind == "grid") {
    Grid g{j.at("rows").get<int>(), j.at("cols").get<int>()};
    if (g.rows < 1 || g.cols < 1) throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be positive");
    return g;
  }
  if (kind == "graph") {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("vertices").get<int>(), std::move(edges));
  }
  throw Error(ErrorCode::kParse, "unknown space kind '" + kind + "'");
}

json instance_to_json(const Instance& instance) {
  json facilities = json::array();
  for (const auto& f : instance.facilities) {
    facilities.push_back({{"id", f.id}, {"location", location_to_json(f.location)}, {"capacity", f.capacity}});
  }
  json customers = json::array();
  for (const auto& c : instance.customers) customers.push_back(location_to_json(c));
  return {{"space", space_to_json(instance.space)}, {"facilities", facilities}, {"customers", customers}};
}

Instance instance_from_json(const json& j) {
  try {
    Instance instance;
    instance.space = space_from_json(j.at("space"));
    for (const auto& f : j.at("facilities")) {
      instance.facilities.push_back(
          {f.at("id").get<int>(), location_from_json(f.at("location")), f.at("capacity").get<int>()});
    }
    for (const auto& c : j.at("customers")) instance.customers.push_back(location_from_json(c));
    return instance;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("instance schema: ") + e.what());
  }
}

std::string save_instance(const Instance& instance) { return instance_to_json(instance).dump(2) + "\n"; }

Instance load_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return instance_from_json(j);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << save_instance(instance);
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.space.index() != b.space.index()) return false;
  if (const auto* g = std::get_if<Grid>(&a.space)) {
    const auto& h = std::get<Grid>(b.space);
    if (g->rows != h.rows || g->cols != h.cols) return false;
  }
  if (const auto* g = std::get_if<Graph>(&a.space)) {
    const auto& h = std::get<Graph>(b.space);
    if (g->vertex_count() != h.vertex_count() || g->edges() != h.edges()) return false;
  }
  if (a.facilities.size() != b.facilities.size() || a.customers != b.customers) return false;
  for (size_t i = 0; i < a.facilities.size(); ++i) {
    const auto& f = a.facilities[i];
    const auto& h = b.facilities[i];
    if (f.id != h.id || f.capacity != h.capacity || !(f.location == h.location)) return false;
  }
  return true;
}

}  // namespace ofa
