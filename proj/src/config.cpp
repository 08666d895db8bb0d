#include "helfer/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace helfer {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  if (!obj.is_object()) {
    throw std::invalid_argument("config: " + where + " must be an object");
  }
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("config: unknown key \"" + item.key() +
                                  "\" in " + where);
    }
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) {
      throw std::invalid_argument("config: missing key \"" + key + "\" in " +
                                  where);
    }
  }
}

GridSpec parse_grid(const json& j, const std::string& name) {
  require_keys(j, {"min", "max", "count", "scale"}, "grids." + name);
  GridSpec g;
  g.min = j.at("min").get<double>();
  g.max = j.at("max").get<double>();
  g.count = j.at("count").get<int>();
  const std::string scale = j.at("scale").get<std::string>();
  if (scale == "linear") {
    g.scale = GridSpec::Scale::linear;
  } else if (scale == "log") {
    g.scale = GridSpec::Scale::log;
  } else {
    throw std::invalid_argument("config: grids." + name +
                                ".scale must be \"linear\" or \"log\"");
  }
  validate(g);
  return g;
}

json grid_to_json(const GridSpec& g) {
  return json{{"min", g.min},
              {"max", g.max},
              {"count", g.count},
              {"scale", g.scale == GridSpec::Scale::linear ? "linear" : "log"}};
}

}  // namespace

HelferParams RunConfig::params() const { return make_params(lambda, p0, q, chi0); }

RunConfig default_config() { return RunConfig{}; }

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: parse error in " + path + ": " +
                                e.what());
  }

  require_keys(j, {"params", "seed", "output_dir", "grids"}, "config");
  const json& jp = j.at("params");
  require_keys(jp, {"lambda", "p0", "q", "chi0"}, "params");

  RunConfig cfg;
  cfg.lambda = jp.at("lambda").get<double>();
  cfg.p0 = jp.at("p0").get<double>();
  cfg.q = jp.at("q").get<double>();
  const json& jchi = jp.at("chi0");
  if (jchi.is_string()) {
    const std::string mode = jchi.get<std::string>();
    if (mode != "paper-default" && mode != "default") {
      throw std::invalid_argument(
          "config: params.chi0 must be a number or \"paper-default\"");
    }
    cfg.chi0 = std::nullopt;
  } else if (jchi.is_number()) {
    cfg.chi0 = jchi.get<double>();
  } else {
    throw std::invalid_argument(
        "config: params.chi0 must be a number or \"paper-default\"");
  }
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.output_dir = j.at("output_dir").get<std::string>();
  for (const auto& item : j.at("grids").items()) {
    cfg.grids.emplace(item.key(), parse_grid(item.value(), item.key()));
  }
  cfg.params();  // validate the physics parameters up front
  return cfg;
}

void save_config(const RunConfig& config, const std::string& path) {
  json jp{{"lambda", config.lambda}, {"p0", config.p0}, {"q", config.q}};
  if (config.chi0) {
    jp["chi0"] = *config.chi0;
  } else {
    jp["chi0"] = "paper-default";
  }
  json grids = json::object();
  for (const auto& [name, grid] : config.grids) {
    grids[name] = grid_to_json(grid);
  }
  const json j{{"params", jp},
               {"seed", config.seed},
               {"output_dir", config.output_dir},
               {"grids", grids}};
  std::ofstream out(path, std::ios::out | std::ios::binary);
  if (!out) {
    throw std::invalid_argument("config: cannot write " + path);
  }
  out << j.dump(2) << "\n";
}

}  // namespace helfer
