#include "swarmtrack/harness/config_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "swarmtrack/harness/csv.hpp"

namespace swarmtrack::harness {

namespace {

void check_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
  if (!node.IsMap()) {
    throw ConfigError(where.empty() ? "<root>" : where, "expected a mapping");
  }
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) {
      throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
    }
  }
}

template <typename T>
void read(const YAML::Node& node, const char* key, const std::string& path, T& out) {
  const auto child = node[key];
  if (!child) {
    return;
  }
  try {
    out = child.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(path, "has the wrong type");
  }
}

double default_speed(const std::string& name, const SimConfig& defaults) {
  for (const auto& cls : defaults.classes) {
    if (cls.name == name) {
      return cls.v_max;
    }
  }
  return -1.0;
}

AgentClass parse_class(const YAML::Node& node, std::size_t index, const SimConfig& defaults) {
  const std::string where = "classes[" + std::to_string(index) + "]";
  check_keys(node, where, {"name", "count", "v_max", "k", "t_mem"});
  AgentClass cls;
  if (!node["name"]) {
    throw ConfigError(where + ".name", "every class needs a name");
  }
  read(node, "name", where + ".name", cls.name);
  const std::string prefix = "classes." + cls.name;
  if (!node["count"]) {
    throw ConfigError(prefix + ".count", "every class needs a count");
  }
  read(node, "count", prefix + ".count", cls.count);
  cls.v_max = default_speed(cls.name, defaults);
  if (!node["v_max"] && cls.v_max < 0.0) {
    throw ConfigError(prefix + ".v_max", "required for classes other than 'slow' and 'fast'");
  }
  read(node, "v_max", prefix + ".v_max", cls.v_max);
  read(node, "k", prefix + ".k", cls.k);
  read(node, "t_mem", prefix + ".t_mem", cls.t_mem);
  return cls;
}

SimConfig parse_sim(const YAML::Node& root) {
  SimConfig config;
  const SimConfig defaults;
  read(root, "seed", "seed", config.seed);
  read(root, "steps", "steps", config.n_steps);
  read(root, "burn_in", "burn_in", config.burn_in);
  read(root, "series_every", "series_every", config.series_every);
  if (root["placement"]) {
    std::string text;
    read(root, "placement", "placement", text);
    config.placement = placement_from_string(text);
  }

  if (const auto arena = root["arena"]) {
    check_keys(arena, "arena", {"side_length"});
    read(arena, "side_length", "arena.side_length", config.arena.side_length);
  }

  if (const auto classes = root["classes"]) {
    if (!classes.IsSequence()) {
      throw ConfigError("classes", "expected a list of agent classes");
    }
    config.classes.clear();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      config.classes.push_back(parse_class(classes[i], i, defaults));
    }
  }

  if (const auto targets = root["targets"]) {
    check_keys(targets, "targets",
               {"count", "v_max", "rho", "a_r", "d", "t_limit", "t_evade", "waypoint_tolerance",
                "redraw_waypoint_on_encounter"});
    auto& tp = config.target;
    read(targets, "count", "targets.count", config.target_count);
    read(targets, "v_max", "targets.v_max", tp.v_max);
    read(targets, "rho", "targets.rho", tp.rho);
    read(targets, "a_r", "targets.a_r", tp.a_r);
    read(targets, "d", "targets.d", tp.d);
    read(targets, "t_limit", "targets.t_limit", tp.t_limit);
    read(targets, "t_evade", "targets.t_evade", tp.t_evade);
    read(targets, "waypoint_tolerance", "targets.waypoint_tolerance", tp.waypoint_tolerance);
    read(targets, "redraw_waypoint_on_encounter", "targets.redraw_waypoint_on_encounter",
         tp.redraw_waypoint_on_encounter);
  }

  if (const auto strategy = root["strategy"]) {
    check_keys(strategy, "strategy", {"omega", "c", "a_r", "d", "gamma_track", "reflect_at_walls"});
    auto& sp = config.strategy;
    read(strategy, "omega", "strategy.omega", sp.omega);
    read(strategy, "c", "strategy.c", sp.c);
    read(strategy, "a_r", "strategy.a_r", sp.a_r);
    read(strategy, "d", "strategy.d", sp.d);
    read(strategy, "gamma_track", "strategy.gamma_track", sp.gamma_track);
    read(strategy, "reflect_at_walls", "strategy.reflect_at_walls", sp.reflect_at_walls);
  }
  return config;
}

Axis parse_axis(const YAML::Node& node, std::size_t index) {
  const std::string where = "sweep.axes[" + std::to_string(index) + "]";
  check_keys(node, where, {"param", "params", "values"});
  Axis axis;
  const bool single = static_cast<bool>(node["param"]);
  if (single == static_cast<bool>(node["params"])) {
    throw ConfigError(where, "give exactly one of 'param' or 'params'");
  }
  try {
    if (single) {
      axis.params.push_back(node["param"].as<std::string>());
    } else {
      axis.params = node["params"].as<std::vector<std::string>>();
    }
    const auto values = node["values"];
    if (!values || !values.IsSequence() || values.size() == 0) {
      throw ConfigError(where + ".values", "expected a non-empty list");
    }
    for (const auto& v : values) {
      if (single) {
        axis.values.push_back({v.as<double>()});
      } else {
        auto tuple = v.as<std::vector<double>>();
        if (tuple.size() != axis.params.size()) {
          throw ConfigError(where + ".values", "each entry needs one value per parameter");
        }
        axis.values.push_back(std::move(tuple));
      }
    }
  } catch (const YAML::Exception&) {
    throw ConfigError(where, "has the wrong type");
  }
  return axis;
}


YAML::Node sim_node(const SimConfig& c) {
  YAML::Node root;
  root["seed"] = c.seed;
  root["steps"] = c.n_steps;
  root["burn_in"] = c.burn_in;
  root["series_every"] = c.series_every;
  root["placement"] = to_string(c.placement);
  root["arena"]["side_length"] = format_number(c.arena.side_length);
  for (const auto& cls : c.classes) {
    YAML::Node n;
    n["name"] = cls.name;
    n["count"] = cls.count;
    n["v_max"] = format_number(cls.v_max);
    n["k"] = cls.k;
    n["t_mem"] = cls.t_mem;
    root["classes"].push_back(n);
  }
  auto targets = root["targets"];
  targets["count"] = c.target_count;
  targets["v_max"] = format_number(c.target.v_max);
  targets["rho"] = format_number(c.target.rho);
  targets["a_r"] = format_number(c.target.a_r);
  targets["d"] = c.target.d;
  targets["t_limit"] = c.target.t_limit;
  targets["t_evade"] = c.target.t_evade;
  targets["waypoint_tolerance"] = format_number(c.target.waypoint_tolerance);
  targets["redraw_waypoint_on_encounter"] = c.target.redraw_waypoint_on_encounter;
  auto strategy = root["strategy"];
  strategy["omega"] = format_number(c.strategy.omega);
  strategy["c"] = format_number(c.strategy.c);
  strategy["a_r"] = format_number(c.strategy.a_r);
  strategy["d"] = c.strategy.d;
  strategy["gamma_track"] = format_number(c.strategy.gamma_track);
  strategy["reflect_at_walls"] = c.strategy.reflect_at_walls;
  return root;
}

std::string emit(const YAML::Node& node) {
  YAML::Emitter out;
  out << node;
  return std::string(out.c_str()) + "\n";
}

const std::set<std::string> kRootKeys = {"name",    "seed",       "steps",   "burn_in",  "series_every",
                                         "placement", "arena",    "classes", "targets",  "strategy",
                                         "sweep"};

int as_int(std::string_view path, double value) {
  if (!std::isfinite(value) || value != std::floor(value)) {
    throw ConfigError(std::string(path), "expects an integer value");
  }
  return static_cast<int>(value);
}

}  // namespace

LoadedConfig parse_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError("<root>", std::string("YAML parse error: ") + e.what());
  }
  if (root.IsNull()) {
    root = YAML::Node(YAML::NodeType::Map);
  }
  check_keys(root, "", kRootKeys);
  SimConfig config = parse_sim(root);

  const auto sweep = root["sweep"];
  if (!sweep) {
    validate(config);
    return config;
  }

  check_keys(sweep, "sweep", {"replicates", "axes"});
  SweepSpec spec;
  read(root, "name", "name", spec.name);
  spec.base = std::move(config);
  read(sweep, "replicates", "sweep.replicates", spec.replicates);
  if (spec.replicates < 1) {
    throw ConfigError("sweep.replicates", "must be >= 1");
  }
  if (const auto axes = sweep["axes"]) {
    if (!axes.IsSequence()) {
      throw ConfigError("sweep.axes", "expected a list");
    }
    for (std::size_t i = 0; i < axes.size(); ++i) {
      spec.axes.push_back(parse_axis(axes[i], i));
    }
  }
  // Every path must resolve and accept each of its values.
  for (const auto& axis : spec.axes) {
    for (const auto& tuple : axis.values) {
      SimConfig probe = spec.base;
      for (std::size_t i = 0; i < axis.params.size(); ++i) {
        set_parameter(probe, axis.params[i], tuple[i]);
      }
    }
  }
  return spec;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("<file>", "cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string dump_config(const SimConfig& config) { return emit(sim_node(config)); }

std::string dump_sweep(const SweepSpec& spec) {
  YAML::Node root = sim_node(spec.base);
  if (!spec.name.empty()) {
    root["name"] = spec.name;
  }
  root["sweep"]["replicates"] = spec.replicates;
  auto axes = root["sweep"]["axes"];
  for (const auto& axis : spec.axes) {
    YAML::Node n;
    if (axis.params.size() == 1) {
      n["param"] = axis.params.front();
      for (const auto& v : axis.values) {
        n["values"].push_back(format_number(v.front()));
      }
    } else {
      for (const auto& p : axis.params) {
        n["params"].push_back(p);
      }
      for (const auto& tuple : axis.values) {
        YAML::Node t;
        t.SetStyle(YAML::EmitterStyle::Flow);
        for (double v : tuple) {
          t.push_back(format_number(v));
        }
        n["values"].push_back(t);
      }
    }
    axes.push_back(n);
  }
  return emit(root);
}

namespace {

struct ClassField {
  std::string cls;  // "*" for every class
  std::string field;
};

std::optional<ClassField> split_class_path(std::string_view path) {
  constexpr std::string_view prefix = "classes.";
  if (!path.starts_with(prefix)) {
    return std::nullopt;
  }
  const auto rest = path.substr(prefix.size());
  const auto dot = rest.rfind('.');
  if (dot == std::string_view::npos) {
    throw ConfigError(std::string(path), "expected classes.<name>.<field>");
  }
  return ClassField{std::string(rest.substr(0, dot)), std::string(rest.substr(dot + 1))};
}

void set_class_field(AgentClass& cls, const std::string& field, std::string_view path, double value) {
  if (field == "count") {
    cls.count = as_int(path, value);
  } else if (field == "v_max") {
    cls.v_max = value;
  } else if (field == "k") {
    cls.k = as_int(path, value);
  } else if (field == "t_mem") {
    cls.t_mem = as_int(path, value);
  } else {
    throw ConfigError(std::string(path), "unknown class field");
  }
}

double get_class_field(const AgentClass& cls, const std::string& field, std::string_view path) {
  if (field == "count") return cls.count;
  if (field == "v_max") return cls.v_max;
  if (field == "k") return cls.k;
  if (field == "t_mem") return cls.t_mem;
  throw ConfigError(std::string(path), "unknown class field");
}

}  // namespace

void set_parameter(SimConfig& c, std::string_view path, double value) {
  if (auto cf = split_class_path(path)) {
    bool found = false;
    for (auto& cls : c.classes) {
      if (cf->cls == "*" || cls.name == cf->cls) {
        if (cf->cls == "*" && cf->field == "count") {
          throw ConfigError(std::string(path), "counts must be set per class");
        }
        set_class_field(cls, cf->field, path, value);
        found = true;
      }
    }
    if (!found) {
      throw ConfigError(std::string(path), "no such agent class");
    }
    return;
  }
  const std::string p(path);
  if (p == "arena.side_length") c.arena.side_length = value;
  else if (p == "targets.count") c.target_count = as_int(path, value);
  else if (p == "targets.v_max") c.target.v_max = value;
  else if (p == "targets.rho") c.target.rho = value;
  else if (p == "targets.a_r") c.target.a_r = value;
  else if (p == "targets.d") c.target.d = as_int(path, value);
  else if (p == "targets.t_limit") c.target.t_limit = as_int(path, value);
  else if (p == "targets.t_evade") c.target.t_evade = as_int(path, value);
  else if (p == "targets.waypoint_tolerance") c.target.waypoint_tolerance = value;
  else if (p == "strategy.omega") c.strategy.omega = value;
  else if (p == "strategy.c") c.strategy.c = value;
  else if (p == "strategy.a_r") c.strategy.a_r = value;
  else if (p == "strategy.d") c.strategy.d = as_int(path, value);
  else if (p == "strategy.gamma_track") c.strategy.gamma_track = value;
  else if (p == "steps") c.n_steps = as_int(path, value);
  else if (p == "burn_in") c.burn_in = as_int(path, value);
  else throw ConfigError(p, "unknown parameter path");
}

double get_parameter(const SimConfig& c, std::string_view path) {
  if (auto cf = split_class_path(path)) {
    for (const auto& cls : c.classes) {
      if (cf->cls == "*" || cls.name == cf->cls) {
        if (cf->cls == "*" && cf->field == "count") {
          throw ConfigError(std::string(path), "counts must be set per class");
        }
        return get_class_field(cls, cf->field, path);
      }
    }
    throw ConfigError(std::string(path), "no such agent class");
  }
  const std::string p(path);
  if (p == "arena.side_length") return c.arena.side_length;
  if (p == "targets.count") return c.target_count;
  if (p == "targets.v_max") return c.target.v_max;
  if (p == "targets.rho") return c.target.rho;
  if (p == "targets.a_r") return c.target.a_r;
  if (p == "targets.d") return c.target.d;
  if (p == "targets.t_limit") return c.target.t_limit;
  if (p == "targets.t_evade") return c.target.t_evade;
  if (p == "targets.waypoint_tolerance") return c.target.waypoint_tolerance;
  if (p == "strategy.omega") return c.strategy.omega;
  if (p == "strategy.c") return c.strategy.c;
  if (p == "strategy.a_r") return c.strategy.a_r;
  if (p == "strategy.d") return c.strategy.d;
  if (p == "strategy.gamma_track") return c.strategy.gamma_track;
  if (p == "steps") return static_cast<double>(c.n_steps);
  if (p == "burn_in") return static_cast<double>(c.burn_in);
  throw ConfigError(p, "unknown parameter path");
}

}  // namespace swarmtrack::harness
