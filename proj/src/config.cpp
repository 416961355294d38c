// kavya/config.cpp

// Copyright 2026  The Kavya Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kavya/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef KAVYA_DEFAULT_DATA_DIR
#define KAVYA_DEFAULT_DATA_DIR "data"
#endif

namespace kavya {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected a number, got '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected an integer, got '" + s + "'");
  }
}

}  // namespace

void PipelineConfig::check_dependencies() const {
  if (enabled("rasa") && !enabled("meter"))
    throw ConfigError("the rasa module consumes meter features; enable meter");
  if (enabled("aucitya"))
    for (const char* dep : {"riti", "alankara", "rasa", "vakrokti", "dhvani"})
      if (!enabled(dep))
        throw ConfigError(std::string("aucitya requires module '") + dep + "'");
}

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig config;
  std::string section;
  std::string line;
  int lineno = 0;
  bool weights_seen = false;
  double w_riti = 0, w_alankara = 0, w_rasa = 0, w_vakrokti = 0, w_dhvani = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    std::string where = "config line " + std::to_string(lineno);
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError(where + ": unterminated section");
      section = trim(t.substr(1, t.size() - 2));
      if (section != "pipeline" && section != "style" && section != "weights" &&
          section != "compatibility.riti_rasa" &&
          section != "compatibility.alankara_rasa")
        throw ConfigError(where + ": unknown section [" + section + "]");
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));

    if (section == "pipeline") {
      if (key == "meter_db") {
        config.meter_db_path = value;
      } else if (key == "budget") {
        config.budget_per_pada = parse_int(value, where);
      } else if (key == "modules") {
        config.modules.clear();
        std::stringstream ss(value);
        std::string m;
        while (std::getline(ss, m, ',')) {
          m = trim(m);
          if (m.empty()) continue;
          if (m != "meter" && m != "riti" && m != "alankara" && m != "rasa" &&
              m != "vakrokti" && m != "dhvani" && m != "aucitya")
            throw ConfigError(where + ": unknown module '" + m + "'");
          config.modules.insert(m);
        }
      } else {
        throw ConfigError(where + ": unknown key '" + key + "' in [pipeline]");
      }
    } else if (section == "style") {
      if (key == "long_compound_len")
        config.style.long_compound_len = parse_int(value, where);
      else if (key == "tau_conj")
        config.style.tau_conj = parse_double(value, where);
      else if (key == "tau_comp")
        config.style.tau_comp = parse_double(value, where);
      else if (key == "oja_compound_blend")
        config.style.oja_compound_blend = parse_double(value, where);
      else
        throw ConfigError(where + ": unknown key '" + key + "' in [style]");
    } else if (section == "weights") {
      weights_seen = true;
      double v = parse_double(value, where);
      if (key == "riti") w_riti = v;
      else if (key == "alankara") w_alankara = v;
      else if (key == "rasa") w_rasa = v;
      else if (key == "vakrokti") w_vakrokti = v;
      else if (key == "dhvani") w_dhvani = v;
      else throw ConfigError(where + ": unknown key '" + key + "' in [weights]");
    } else if (section == "compatibility.riti_rasa" ||
               section == "compatibility.alankara_rasa") {
      auto colon = key.find(':');
      if (colon == std::string::npos)
        throw ConfigError(where + ": expected <row>:<rasa> = value");
      std::string row = trim(key.substr(0, colon));
      std::string col = trim(key.substr(colon + 1));
      std::string table = section.substr(std::string("compatibility.").size());
      try {
        config.matrix.set_cell(table, row, col, parse_double(value, where));
      } catch (const UnknownLabelError& e) {
        throw ConfigError(where + ": " + e.what());
      }
    } else {
      throw ConfigError(where + ": key outside any section");
    }
  }

  if (weights_seen) {
    config.weights = ModuleWeights{w_riti, w_alankara, w_rasa, w_vakrokti,
                                   w_dhvani};
    config.weights.validate();
  }
  config.check_dependencies();
  return config;
}

PipelineConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

std::string default_data_dir() {
  if (const char* env = std::getenv("KAVYA_DATA_DIR")) return env;
  return KAVYA_DEFAULT_DATA_DIR;
}

std::string resolve_meter_db_path(const std::string& explicit_path,
                                  const PipelineConfig& config) {
  if (!explicit_path.empty()) return explicit_path;
  if (!config.meter_db_path.empty()) return config.meter_db_path;
  return default_data_dir() + "/meters.db";
}

}  // namespace kavya
