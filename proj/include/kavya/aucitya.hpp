// kavya/aucitya.hpp

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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kavya/alankara.hpp"
#include "kavya/annotations.hpp"
#include "kavya/style.hpp"

namespace kavya {

// Mutual-appropriateness lookups. Cells hold 1.0 (compatible), 0.5
// (neutral) or 0.0 (incompatible); missing cells read as neutral. Only
// canonically asserted pairs ship by default; everything else stays neutral
// rather than inventing sastric claims.
struct CompatibilityMatrix {
  std::map<std::pair<std::string, std::string>, double> riti_rasa;
  std::map<std::pair<std::string, std::string>, double> alankara_rasa;

  double riti_rasa_cell(Riti riti, Rasa rasa) const;
  double alankara_rasa_cell(const std::string& alankara, Rasa rasa) const;

  static CompatibilityMatrix defaults();
  void set_cell(const std::string& table, const std::string& row,
                const std::string& column, double value);  // validates value
};

// One weight per upstream module; non-negative, summing to 1 (1e-9 slack).
struct ModuleWeights {
  double riti = 0.2;
  double alankara = 0.2;
  double rasa = 0.2;
  double vakrokti = 0.2;
  double dhvani = 0.2;

  void validate() const;  // throws InvalidWeightsError
};

struct RasaDoshaWarning {
  std::string source;  // "riti" or "alankara"
  std::string element;
  std::string rasa;
};

struct CompatibilityResult {
  double score = 0.5;
  std::optional<RasaDoshaWarning> warning;  // set when score == 0
};

// Looks up the riti-rasa cell; subtyped srngara collapses to its base row.
CompatibilityResult compatibility(const RitiVerdict& riti,
                                  const RasaAnnotation& rasa,
                                  const CompatibilityMatrix& matrix);

// Everything the weighted appropriateness score consumes. Meter output is
// deliberately absent: it informs rasa annotation upstream but joins no sum.
struct AucityaInputs {
  std::optional<RitiVerdict> riti;
  std::vector<AlankaraFinding> alankara;  // detected + annotated
  std::optional<RasaAnnotation> rasa;
  std::vector<VakroktiAnnotation> vakrokti;
  DhvaniCensus dhvani;
};

struct AucityaBreakdown {
  std::map<std::string, double> signals;        // per-module raw signal
  std::map<std::string, double> contributions;  // weight * signal
  double score = 0.0;
  std::vector<RasaDoshaWarning> warnings;
};

// Weighted mean of the per-module appropriateness signals:
//   riti     riti-rasa cell (0.5 without a rasa annotation)
//   alankara 0 without findings; 1 when none contradicts the rasa;
//            otherwise the mean of the looked-up cells
//   rasa     1 when annotated with evidence spans, else 0.5
//   vakrokti fraction of the six levels attested
//   dhvani   1 when any vyangya reading exists
AucityaBreakdown aucitya_score(const AucityaInputs& inputs,
                               const CompatibilityMatrix& matrix,
                               const ModuleWeights& weights);

enum class KavyaGrade { Uttama, Madhyama, Adhama };
enum class Confidence { High, Reduced };

std::string grade_to_string(KavyaGrade g);

struct GradeReport {
  KavyaGrade grade = KavyaGrade::Adhama;
  double aucitya = 0.0;
  std::vector<RasaDoshaWarning> rasa_dosha_warnings;
  std::map<std::string, double> contributions;
  Confidence confidence = Confidence::High;
};

// The grade follows the dhvani census alone: dominant suggestion -> uttama,
// suggestion without dominance -> madhyama, none -> adhama. The
// appropriateness score and warnings never move the grade; any rasa-dosha
// warning lowers confidence.
GradeReport grade(const DhvaniCensus& census, const AucityaBreakdown& aucitya);

}  // namespace kavya
