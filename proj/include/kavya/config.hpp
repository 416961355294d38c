// kavya/config.hpp

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

#pragma once

#include <set>
#include <string>

#include "kavya/aucitya.hpp"
#include "kavya/style.hpp"

namespace kavya {

// INI-style pipeline configuration:
//
//   [pipeline]
//   meter_db = data/meters.db
//   modules = meter,riti,alankara,rasa,vakrokti,dhvani,aucitya
//   budget = 2
//
//   [style]
//   long_compound_len = 3
//   tau_conj = 0.25
//   tau_comp = 0.2
//
//   [weights]
//   riti = 0.2 ... dhvani = 0.2        (must sum to 1)
//
//   [compatibility.riti_rasa]
//   vaidarbhi:srngara = 1.0            (<row>:<rasa> = 0 | 0.5 | 1)
//
//   [compatibility.alankara_rasa]
//   rupaka:vira = 0.5
//
// `#` and `;` start comments. Unknown sections or keys are errors.
struct PipelineConfig {
  std::string meter_db_path;  // empty = resolve via env/default
  std::set<std::string> modules = {"meter",    "riti",   "alankara", "rasa",
                                   "vakrokti", "dhvani", "aucitya"};
  int budget_per_pada = 2;
  StyleConfig style;
  ModuleWeights weights;
  CompatibilityMatrix matrix = CompatibilityMatrix::defaults();

  bool enabled(const std::string& module) const { return modules.count(module) > 0; }

  // Module dependencies: rasa consumes meter features; aucitya needs every
  // upstream module. Throws ConfigError.
  void check_dependencies() const;
};

PipelineConfig parse_config(std::istream& in);
PipelineConfig parse_config_text(const std::string& text);
PipelineConfig load_config_file(const std::string& path);

// Resolution order for data files: explicit path, KAVYA_DATA_DIR, then the
// build-time default directory.
std::string default_data_dir();
std::string resolve_meter_db_path(const std::string& explicit_path,
                                  const PipelineConfig& config);

}  // namespace kavya
