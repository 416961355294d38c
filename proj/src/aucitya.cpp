// kavya/aucitya.cpp

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

#include "kavya/aucitya.hpp"

#include <cmath>
#include <set>

namespace kavya {

namespace {

constexpr double kNeutral = 0.5;

bool valid_cell(double v) { return v == 0.0 || v == 0.5 || v == 1.0; }

}  // namespace

double CompatibilityMatrix::riti_rasa_cell(Riti riti, Rasa rasa) const {
  auto it = riti_rasa.find({riti_to_string(riti), rasa_to_string(rasa)});
  return it == riti_rasa.end() ? kNeutral : it->second;
}

double CompatibilityMatrix::alankara_rasa_cell(const std::string& alankara,
                                               Rasa rasa) const {
  auto it = alankara_rasa.find({alankara, rasa_to_string(rasa)});
  return it == alankara_rasa.end() ? kNeutral : it->second;
}

CompatibilityMatrix CompatibilityMatrix::defaults() {
  CompatibilityMatrix m;
  // The canonically asserted pairs: vaidarbhi suits srngara, gaudi suits
  // vira, and gaudi against srngara produces a rasa-dosha.
  m.riti_rasa[{"vaidarbhi", "srngara"}] = 1.0;
  m.riti_rasa[{"gaudi", "vira"}] = 1.0;
  m.riti_rasa[{"gaudi", "srngara"}] = 0.0;
  return m;
}

void CompatibilityMatrix::set_cell(const std::string& table,
                                   const std::string& row,
                                   const std::string& column, double value) {
  if (!valid_cell(value))
    throw ConfigError("compatibility cells must be 0, 0.5 or 1 (got " +
                      std::to_string(value) + ")");
  if (table == "riti_rasa") {
    rasa_from_string(column);  // validates the rasa label
    if (row != "vaidarbhi" && row != "gaudi" && row != "pancali")
      throw ConfigError("unknown riti in compatibility matrix: " + row);
    riti_rasa[{row, column}] = value;
  } else if (table == "alankara_rasa") {
    rasa_from_string(column);
    alankara_rasa[{row, column}] = value;
  } else {
    throw ConfigError("unknown compatibility table: " + table);
  }
}

void ModuleWeights::validate() const {
  const double values[5] = {riti, alankara, rasa, vakrokti, dhvani};
  double sum = 0.0;
  for (double v : values) {
    if (v < 0.0) throw InvalidWeightsError("module weights must be non-negative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidWeightsError("module weights must sum to 1 (got " +
                              std::to_string(sum) + ")");
}

CompatibilityResult compatibility(const RitiVerdict& riti,
                                  const RasaAnnotation& rasa,
                                  const CompatibilityMatrix& matrix) {
  CompatibilityResult r;
  r.score = matrix.riti_rasa_cell(riti.riti, rasa.rasa);
  if (r.score == 0.0)
    r.warning = RasaDoshaWarning{"riti", riti_to_string(riti.riti),
                                 rasa_to_string(rasa.rasa)};
  return r;
}

AucityaBreakdown aucitya_score(const AucityaInputs& inputs,
                               const CompatibilityMatrix& matrix,
                               const ModuleWeights& weights) {
  weights.validate();
  AucityaBreakdown out;

  // riti: compatibility with the annotated rasa, neutral without one.
  double riti_signal = kNeutral;
  if (inputs.riti && inputs.rasa) {
    CompatibilityResult c = compatibility(*inputs.riti, *inputs.rasa, matrix);
    riti_signal = c.score;
    if (c.warning) out.warnings.push_back(*c.warning);
  }
  out.signals["riti"] = riti_signal;

  // alankara: no ornamentation is no signal; otherwise full marks unless a
  // figure is incompatible with the rasa, in which case the mean of the
  // looked-up cells.
  double alankara_signal = 0.0;
  if (!inputs.alankara.empty()) {
    if (!inputs.rasa) {
      alankara_signal = 1.0;
    } else {
      double sum = 0.0;
      bool contradiction = false;
      for (const AlankaraFinding& f : inputs.alankara) {
        double cell = matrix.alankara_rasa_cell(f.name, inputs.rasa->rasa);
        sum += cell;
        if (cell == 0.0) {
          contradiction = true;
          out.warnings.push_back(RasaDoshaWarning{
              "alankara", f.name, rasa_to_string(inputs.rasa->rasa)});
        }
      }
      alankara_signal =
          contradiction ? sum / static_cast<double>(inputs.alankara.size()) : 1.0;
    }
  }
  out.signals["alankara"] = alankara_signal;

  // rasa: annotated with evidence counts in full, absence stays neutral.
  double rasa_signal = kNeutral;
  if (inputs.rasa && inputs.rasa->has_evidence()) rasa_signal = 1.0;
  out.signals["rasa"] = rasa_signal;

  // vakrokti: richness as the fraction of the six levels attested.
  std::set<int> levels;
  for (const VakroktiAnnotation& v : inputs.vakrokti) levels.insert(v.level);
  out.signals["vakrokti"] = static_cast<double>(levels.size()) / 6.0;

  // dhvani: any suggested meaning at all.
  out.signals["dhvani"] = inputs.dhvani.has_vyangya ? 1.0 : 0.0;

  out.contributions["riti"] = weights.riti * out.signals["riti"];
  out.contributions["alankara"] = weights.alankara * out.signals["alankara"];
  out.contributions["rasa"] = weights.rasa * out.signals["rasa"];
  out.contributions["vakrokti"] = weights.vakrokti * out.signals["vakrokti"];
  out.contributions["dhvani"] = weights.dhvani * out.signals["dhvani"];
  for (const auto& [_, v] : out.contributions) out.score += v;
  return out;
}

std::string grade_to_string(KavyaGrade g) {
  switch (g) {
    case KavyaGrade::Uttama: return "uttama";
    case KavyaGrade::Madhyama: return "madhyama";
    case KavyaGrade::Adhama: return "adhama";
  }
  return "adhama";
}

GradeReport grade(const DhvaniCensus& census, const AucityaBreakdown& aucitya) {
  GradeReport r;
  if (census.has_dominant_vyangya) r.grade = KavyaGrade::Uttama;
  else if (census.has_vyangya) r.grade = KavyaGrade::Madhyama;
  else r.grade = KavyaGrade::Adhama;
  r.aucitya = aucitya.score;
  r.rasa_dosha_warnings = aucitya.warnings;
  r.contributions = aucitya.contributions;
  r.confidence =
      aucitya.warnings.empty() ? Confidence::High : Confidence::Reduced;
  return r;
}

}  // namespace kavya
