#include "robinasym/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace robinasym {

namespace {

using nlohmann::json;

FourierData parse_series(const json& node, std::uint64_t seed) {
  if (node.is_array()) {
    const auto flat = node.get<std::vector<double>>();
    return FourierData::from_array(flat);
  }
  if (node.is_object() && node.contains("random_modes")) {
    return random_fourier(node.at("random_modes").get<int>(), node.value("amplitude", 1.0), seed);
  }
  if (node.is_number()) return FourierData::constant(node.get<double>());
  throw InvalidInput("boundary data must be a coefficient array, a number or {\"random_modes\": n}");
}

RobinScaling parse_scaling(const std::string& s) {
  if (s == "physical") return RobinScaling::Physical;
  if (s == "unscaled") return RobinScaling::Unscaled;
  throw InvalidInput("solver.scaling must be \"physical\" or \"unscaled\"");
}

}  // namespace

HarnessConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  HarnessConfig cfg;
  auto& sw = cfg.sweep;
  try {
    const json solver = root.value("solver", json::object());
    auto& s = sw.solver;
    s.order = solver.value("N", s.order);
    s.green_order = solver.value("N_green", s.green_order);
    s.collocation = solver.value("M", s.collocation);
    s.tolerance = solver.value("tolerance", s.tolerance);
    s.seed = solver.value("seed", s.seed);
    s.workers = solver.value("workers", s.workers);
    s.scaling = parse_scaling(solver.value("scaling", std::string("physical")));
    s.n_radial = solver.value("n_radial", s.n_radial);
    s.n_angular = solver.value("n_angular", s.n_angular);
    s.boundary_points = solver.value("boundary_points", s.boundary_points);

    const json geometry = root.value("geometry", json::object());
    sw.R = geometry.value("R", sw.R);
    if (geometry.contains("c")) {
      const auto c = geometry.at("c").get<std::vector<double>>();
      if (c.size() != 2) throw InvalidInput("geometry.c must have two components");
      sw.c = {c[0], c[1]};
    }
    cfg.eps = geometry.value("eps", cfg.eps);

    const json data = root.value("data", json::object());
    cfg.kappa = data.value("kappa", cfg.kappa);
    // Each randomised field gets its own stream derived from the seed.
    const char* fields[] = {"f_outer", "g_outer", "f_inclusion", "g_inclusion"};
    FourierData* targets[] = {&sw.data.f_outer, &sw.data.g_outer, &sw.data.f_inclusion,
                              &sw.data.g_inclusion};
    for (int i = 0; i < 4; ++i) {
      if (data.contains(fields[i])) {
        *targets[i] = parse_series(data.at(fields[i]), s.seed + 7919u * (i + 1));
      }
    }

    const json sweep = root.value("sweep", json::object());
    sw.eps_list = sweep.value("eps", std::vector<double>{});
    sw.kappa_list = sweep.value("kappa", std::vector<double>{});
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace robinasym
