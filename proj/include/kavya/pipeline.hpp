// kavya/pipeline.hpp

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

#include <optional>
#include <string>
#include <vector>

#include "kavya/alankara.hpp"
#include "kavya/annotations.hpp"
#include "kavya/aucitya.hpp"
#include "kavya/config.hpp"
#include "kavya/meter.hpp"
#include "kavya/style.hpp"

namespace kavya {

// Raised when an annotation set fails structural validation; carries the
// full report so callers can print every issue.
class AnnotationValidationError : public Error {
 public:
  AnnotationValidationError(std::string what, ValidationReport report)
      : Error(std::move(what)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct StanzaAnalysis {
  int index = 1;
  ScanResult scan;
  std::vector<MeterMatch> meter_matches;       // meter module
  std::vector<Suggestion> corrections;         // best fuzzy match, if any
  std::vector<AlankaraFinding> sabda_findings; // alankara module
};

struct AnalysisReport {
  std::string tool_version;
  std::string composition_hash;
  std::string annotations_hash;  // empty when absent
  std::string config_hash;
  std::string meter_db_hash;
  Composition composition;
  std::set<std::string> modules;
  std::vector<StanzaAnalysis> stanzas;

  std::optional<GunaProfile> guna;       // riti module
  std::optional<RitiVerdict> riti;
  std::vector<AlankaraFinding> artha_findings;
  std::optional<RasaAnnotation> rasa;
  std::vector<VakroktiAnnotation> vakrokti;
  std::vector<DhvaniAnnotation> dhvani_entries;
  DhvaniCensus census;
  std::optional<AucityaBreakdown> aucitya;
  std::optional<GradeReport> grade_report;
  bool annotations_present = false;
  ValidationReport annotation_validation;
  std::vector<std::string> flags;  // e.g. "annotations absent"
};

// Runs text-core -> meter -> {riti, alankara} -> annotation ingestion ->
// aucitya -> grade over in-memory inputs. Annotation sets that fail
// validation raise AnnotationValidationError.
AnalysisReport run_pipeline(const Composition& comp,
                            const std::optional<AnnotationSet>& annotations,
                            const MeterDb& db, const PipelineConfig& config);

// File-level driver used by the CLI and bindings: loads the composition,
// optional annotations and config (KAVYA_CONFIG is the config fallback),
// resolves the meter db and records provenance hashes.
AnalysisReport run_pipeline_files(const std::string& composition_path,
                                  const std::string& annotations_path = "",
                                  const std::string& config_path = "",
                                  const std::string& meter_db_path = "");

}  // namespace kavya
