// kavya/pipeline.cpp

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

#include "kavya/pipeline.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kavya/version.hpp"

namespace kavya {

namespace {

std::string hash_bytes(const std::string& bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Words feeding end-rhyme detection: clause-final words when annotated,
// otherwise the last token of each pada.
std::vector<std::string> rhyme_words(const Stanza& stanza,
                                     const std::optional<AnnotationSet>& ann) {
  std::vector<Token> tokens = tokenize(stanza);
  if (ann)
    for (const ClauseEnds& c : ann->clause_ends)
      if (c.stanza == stanza.index && !c.words.empty()) {
        std::vector<std::string> words;
        for (int w : c.words)
          if (w >= 0 && w < static_cast<int>(tokens.size()))
            words.push_back(tokens[static_cast<std::size_t>(w)].text);
        return words;
      }
  std::vector<std::string> words;
  int last_pada = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].pada != last_pada && i > 0)
      words.push_back(tokens[i - 1].text);
    last_pada = tokens[i].pada;
  }
  if (!tokens.empty()) words.push_back(tokens.back().text);
  return words;
}

}  // namespace

AnalysisReport run_pipeline(const Composition& comp,
                            const std::optional<AnnotationSet>& annotations,
                            const MeterDb& db, const PipelineConfig& config) {
  config.check_dependencies();
  config.weights.validate();

  AnalysisReport report;
  report.tool_version = kVersion;
  report.composition = comp;
  report.composition_hash = content_hash(comp);
  report.modules = config.modules;
  report.annotations_present = annotations.has_value();

  if (annotations) {
    report.annotation_validation = validate(*annotations, comp);
    if (!report.annotation_validation.ok())
      throw AnnotationValidationError(
          "annotation set failed validation with " +
              std::to_string(report.annotation_validation.issues.size()) +
              " issue(s)",
          report.annotation_validation);
  } else {
    report.flags.push_back("annotations absent");
  }

  // Stanza-level passes. Each stanza's analysis is independent of the others.
  for (const Stanza& stanza : comp.stanzas) {
    StanzaAnalysis sa;
    sa.index = stanza.index;
    sa.scan = scan(stanza);
    if (config.enabled("meter") && !stanza.padas.empty()) {
      sa.meter_matches = identify(sa.scan, db, config.budget_per_pada);
      if (!sa.meter_matches.empty() &&
          sa.meter_matches.front().kind == MatchKind::Fuzzy)
        sa.corrections = suggest_corrections(stanza, sa.meter_matches.front());
    }
    if (config.enabled("alankara")) {
      sa.sabda_findings = detect_varnanuprasa(stanza);
      auto rhyme = detect_antyanuprasa(rhyme_words(stanza, annotations));
      if (rhyme) {
        rhyme->span.stanza = stanza.index;
        sa.sabda_findings.push_back(std::move(*rhyme));
      }
    }
    report.stanzas.push_back(std::move(sa));
  }

  // Global passes.
  if (config.enabled("riti")) {
    std::vector<CompoundAnnotation> compounds;
    if (annotations) compounds = annotations->compounds;
    report.guna = guna_profile(comp, compounds, config.style);
    report.riti = classify_riti(*report.guna, config.style);
  }

  if (annotations) {
    if (config.enabled("alankara")) {
      ArthaValidation artha =
          validate_artha_annotations(annotations->artha_alankara, comp);
      // Structural validation above already vouched for the spans.
      report.artha_findings = std::move(artha.findings);
    }
    if (config.enabled("rasa") && annotations->primary_rasa())
      report.rasa = *annotations->primary_rasa();
    if (config.enabled("vakrokti")) report.vakrokti = annotations->vakrokti;
    if (config.enabled("dhvani")) {
      report.dhvani_entries = annotations->dhvani;
      report.census = dhvani_census(*annotations);
    }
  }

  if (config.enabled("aucitya")) {
    AucityaInputs inputs;
    inputs.riti = report.riti;
    for (const StanzaAnalysis& sa : report.stanzas)
      inputs.alankara.insert(inputs.alankara.end(), sa.sabda_findings.begin(),
                             sa.sabda_findings.end());
    inputs.alankara.insert(inputs.alankara.end(), report.artha_findings.begin(),
                           report.artha_findings.end());
    inputs.rasa = report.rasa;
    inputs.vakrokti = report.vakrokti;
    inputs.dhvani = report.census;
    report.aucitya = aucitya_score(inputs, config.matrix, config.weights);
    report.grade_report = grade(report.census, *report.aucitya);
  }

  return report;
}

AnalysisReport run_pipeline_files(const std::string& composition_path,
                                  const std::string& annotations_path,
                                  const std::string& config_path,
                                  const std::string& meter_db_path) {
  std::string effective_config = config_path;
  if (effective_config.empty())
    if (const char* env = std::getenv("KAVYA_CONFIG")) effective_config = env;

  PipelineConfig config;
  std::string config_bytes = "defaults";
  if (!effective_config.empty()) {
    config_bytes = read_file(effective_config);
    config = parse_config_text(config_bytes);
  }

  Composition comp = load_composition_file(composition_path);

  std::optional<AnnotationSet> annotations;
  std::string annotations_bytes;
  if (!annotations_path.empty()) {
    annotations_bytes = read_file(annotations_path);
    annotations = parse_annotations_text(annotations_bytes);
  }

  std::string db_path = resolve_meter_db_path(meter_db_path, config);
  std::string db_bytes = read_file(db_path);
  std::istringstream db_in(db_bytes);
  MeterDb db = load_meter_db(db_in);

  AnalysisReport report = run_pipeline(comp, annotations, db, config);
  report.annotations_hash =
      annotations_path.empty() ? "" : hash_bytes(annotations_bytes);
  report.config_hash = hash_bytes(config_bytes);
  report.meter_db_hash = hash_bytes(db_bytes);
  return report;
}

}  // namespace kavya
