#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "urysohn/errors.hpp"
#include "urysohn/experiments.hpp"

namespace urysohn {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

int positive_int(const json& value, const std::string& key) {
  if (!value.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  const auto v = value.get<long long>();
  if (v < 1 || v > 1'000'000) throw ConfigError("'" + key + "' must be a positive integer");
  return static_cast<int>(v);
}

const json& required(const json& object, const std::string& key) {
  if (!object.contains(key)) throw ConfigError("missing required key '" + key + "'");
  return object.at(key);
}

MRule parse_m_rule(const json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "square") return m_rule::Square{};
    throw ConfigError("m_rule string must be \"square\"");
  }
  if (!value.is_object() || value.size() != 1) {
    throw ConfigError("m_rule must be {\"fixed\": m}, {\"multiple\": p} or \"square\"");
  }
  const auto entry = value.begin();
  const std::string kind = entry.key();
  const json& param = entry.value();
  if (kind == "fixed") return m_rule::Fixed{positive_int(param, "m_rule.fixed")};
  if (kind == "multiple") return m_rule::Multiple{positive_int(param, "m_rule.multiple")};
  throw ConfigError("unknown m_rule kind '" + kind + "'");
}

NewtonSettings parse_newton(const json& value) {
  if (!value.is_object()) throw ConfigError("'newton' must be an object");
  reject_unknown_keys(value, {"tol", "max_iters"}, "newton");
  NewtonSettings settings;
  if (value.contains("tol")) {
    if (!value.at("tol").is_number()) throw ConfigError("'newton.tol' must be a number");
    settings.tol = value.at("tol").get<double>();
  }
  if (value.contains("max_iters")) settings.max_iters = positive_int(value.at("max_iters"), "newton.max_iters");
  return settings;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(root,
                      {"problem", "r", "n_values", "quad_rho", "m_rule", "newton", "eval_grid_points",
                       "output_format"},
                      "config");

  ExperimentConfig config;
  const auto& problem = required(root, "problem");
  if (!problem.is_string()) throw ConfigError("'problem' must be a string");
  config.problem_id = problem.get<std::string>();
  config.r = positive_int(required(root, "r"), "r");

  const auto& n_values = required(root, "n_values");
  if (!n_values.is_array()) throw ConfigError("'n_values' must be an array");
  config.n_values.clear();
  for (const auto& n : n_values) config.n_values.push_back(positive_int(n, "n_values"));

  config.quad_rho = positive_int(required(root, "quad_rho"), "quad_rho");
  config.m_rule = parse_m_rule(required(root, "m_rule"));
  if (root.contains("newton")) config.newton = parse_newton(root.at("newton"));
  if (root.contains("eval_grid_points")) {
    config.eval_grid_points = positive_int(root.at("eval_grid_points"), "eval_grid_points");
  }
  if (root.contains("output_format")) {
    const auto& format = root.at("output_format");
    if (format == "csv") {
      config.output_format = OutputFormat::Csv;
    } else if (format == "markdown") {
      config.output_format = OutputFormat::Markdown;
    } else {
      throw ConfigError("'output_format' must be \"csv\" or \"markdown\"");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace urysohn
