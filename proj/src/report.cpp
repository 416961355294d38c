// kavya/report.cpp

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

#include "kavya/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "kavya/version.hpp"

namespace kavya {

using nlohmann::ordered_json;

namespace {

std::string to_iast(const std::string& canonical) {
  return encode_from_canonical(canonical, Scheme::Iast);
}

ordered_json span_json(const Span& s) {
  ordered_json j;
  if (s.whole_composition) {
    j["composition"] = true;
    return j;
  }
  j["stanza"] = s.stanza;
  if (s.padas) j["padas"] = {s.padas->first, s.padas->second};
  if (!s.words.empty()) j["words"] = s.words;
  return j;
}

ordered_json finding_json(const AlankaraFinding& f) {
  ordered_json j;
  j["category"] = f.category == AlankaraCategory::Sabda ? "sabda" : "artha";
  j["name"] = f.name;
  if (!f.label.empty()) j["label"] = f.label;
  j["provenance"] =
      f.provenance == Provenance::Detected ? "detected" : "annotated";
  j["span"] = span_json(f.span);
  if (!f.phoneme_or_suffix.empty()) {
    j["evidence"] = f.phoneme_or_suffix;
    j["evidence_iast"] = to_iast(f.phoneme_or_suffix);
  }
  if (!f.occurrences.empty()) {
    ordered_json occs = ordered_json::array();
    for (const SabdaOccurrence& o : f.occurrences) {
      ordered_json oj;
      oj["pada"] = o.pada;
      oj["syllable"] = o.syllable;
      if (!o.word.empty()) oj["word"] = to_iast(o.word);
      occs.push_back(oj);
    }
    j["occurrences"] = occs;
    j["count"] = f.occurrences.size();
  }
  if (!f.participating_words.empty()) {
    ordered_json words = ordered_json::array();
    for (const std::string& w : f.participating_words) words.push_back(to_iast(w));
    j["participating_words"] = words;
    j["count"] = f.participating_words.size();
  }
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

ordered_json warnings_json(const std::vector<RasaDoshaWarning>& warnings) {
  ordered_json arr = ordered_json::array();
  for (const RasaDoshaWarning& w : warnings) {
    ordered_json j;
    j["source"] = w.source;
    j["element"] = w.element;
    j["rasa"] = w.rasa;
    arr.push_back(j);
  }
  return arr;
}

std::string html_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "html") return ReportFormat::Html;
  if (name == "text") return ReportFormat::Text;
  throw ConfigError("unknown report format: " + name);
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "kavya"}, {"version", report.tool_version}};
  {
    ordered_json prov;
    prov["composition_hash"] = report.composition_hash;
    prov["annotations_hash"] = report.annotations_hash;
    prov["config_hash"] = report.config_hash;
    prov["meter_db_hash"] = report.meter_db_hash;
    j["provenance"] = prov;
  }
  j["title"] = report.composition.title;
  j["scheme"] = scheme_to_string(report.composition.scheme);
  {
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : report.composition.metadata) meta[k] = v;
    j["metadata"] = meta;
  }
  {
    ordered_json mods = ordered_json::array();
    for (const std::string& m : report.modules) mods.push_back(m);
    j["modules"] = mods;
  }

  ordered_json stanzas = ordered_json::array();
  for (std::size_t si = 0; si < report.stanzas.size(); ++si) {
    const StanzaAnalysis& sa = report.stanzas[si];
    const Stanza& stanza = report.composition.stanzas[si];
    ordered_json sj;
    sj["index"] = sa.index;
    ordered_json padas = ordered_json::array();
    for (std::size_t pi = 0; pi < stanza.padas.size(); ++pi) {
      const Pada& p = stanza.padas[pi];
      ordered_json pj;
      pj["position"] = p.position_in_stanza;
      pj["text"] = p.text;
      pj["iast"] = to_iast(p.text);
      pj["weights"] = pi < sa.scan.pada_weights.size()
                          ? sa.scan.pada_weights[pi]
                          : "";
      pj["syllable_count"] =
          pi < sa.scan.syllable_counts.size() ? sa.scan.syllable_counts[pi] : 0;
      ordered_json syl = ordered_json::array();
      for (const Syllable& s : p.syllables) syl.push_back(to_iast(s.phonemes()));
      pj["syllables"] = syl;
      padas.push_back(pj);
    }
    sj["padas"] = padas;

    if (report.modules.count("meter")) {
      ordered_json matches = ordered_json::array();
      for (const MeterMatch& m : sa.meter_matches) {
        ordered_json mj;
        mj["meter"] = m.meter;
        mj["kind"] = m.kind == MatchKind::Exact ? "exact" : "fuzzy";
        mj["distance"] = m.distance;
        if (!m.mismatches.empty()) {
          ordered_json mis = ordered_json::array();
          for (const PadaMismatch& mm : m.mismatches)
            mis.push_back({{"pada", mm.pada},
                           {"syllable", mm.syllable},
                           {"expected", std::string(1, mm.expected)},
                           {"observed", std::string(1, mm.observed)},
                           {"edit", edit_kind_to_string(mm.kind)}});
          mj["mismatches"] = mis;
        }
        matches.push_back(mj);
      }
      ordered_json meter;
      meter["matches"] = matches;
      meter["best"] = sa.meter_matches.empty()
                          ? ordered_json(nullptr)
                          : ordered_json(sa.meter_matches.front().meter);
      ordered_json fixes = ordered_json::array();
      for (const Suggestion& s : sa.corrections) {
        ordered_json fj;
        fj["pada"] = s.pada;
        fj["syllable"] = s.syllable;
        fj["span"] = {s.begin, s.end};
        fj["expected"] = std::string(1, s.expected);
        fj["edit"] = edit_kind_to_string(s.kind);
        fj["note"] = s.note;
        fixes.push_back(fj);
      }
      meter["corrections"] = fixes;
      sj["meter"] = meter;
    } else {
      sj["meter"] = nullptr;
    }

    if (report.modules.count("alankara")) {
      ordered_json findings = ordered_json::array();
      for (const AlankaraFinding& f : sa.sabda_findings)
        findings.push_back(finding_json(f));
      sj["sabda_alankara"] = findings;
    } else {
      sj["sabda_alankara"] = nullptr;
    }
    stanzas.push_back(sj);
  }
  j["stanzas"] = stanzas;

  ordered_json global;
  if (report.guna) {
    ordered_json g;
    g["madhurya_score"] = report.guna->madhurya_score;
    g["oja_score"] = report.guna->oja_score;
    g["conjunct_density"] = report.guna->conjunct_density;
    g["long_compound_fraction"] = report.guna->long_compound_fraction;
    g["syllable_count"] = report.guna->syllable_count;
    g["consonant_count"] = report.guna->consonant_count;
    ordered_json ev = ordered_json::object();
    for (const auto& [rule, count] : report.guna->evidence) ev[rule] = count;
    g["evidence"] = ev;
    global["guna_profile"] = g;
  } else {
    global["guna_profile"] = nullptr;
  }
  if (report.riti) {
    ordered_json rj;
    rj["riti"] = riti_to_string(report.riti->riti);
    rj["dominant_guna"] = guna_to_string(report.riti->dominant_guna);
    ordered_json rules = ordered_json::array();
    for (const TriggeredRule& r : report.riti->rationale)
      rules.push_back({{"rule", r.rule}, {"detail", r.detail}});
    rj["rationale"] = rules;
    global["riti"] = rj;
  } else {
    global["riti"] = nullptr;
  }

  if (report.rasa) {
    ordered_json rj;
    rj["scope"] = report.rasa->stanza ? ordered_json(*report.rasa->stanza)
                                      : ordered_json("composition");
    rj["rasa"] = rasa_to_string(report.rasa->rasa);
    if (report.rasa->subtype)
      rj["subtype"] = srngara_subtype_to_string(*report.rasa->subtype);
    rj["evidence_counts"] = {{"vibhava", report.rasa->vibhava.size()},
                             {"anubhava", report.rasa->anubhava.size()},
                             {"vyabhicari", report.rasa->vyabhicari.size()}};
    global["rasa"] = rj;
  } else {
    global["rasa"] = nullptr;
  }

  if (report.modules.count("alankara")) {
    ordered_json arr = ordered_json::array();
    ordered_json counts = ordered_json::object();
    for (const AlankaraFinding& f : report.artha_findings) {
      arr.push_back(finding_json(f));
      std::string key = f.name == "other" ? "other:" + f.label : f.name;
      counts[key] = counts.contains(key) ? counts[key].get<int>() + 1 : 1;
    }
    global["artha_alankara"] = arr;
    global["artha_counts"] = counts;
  } else {
    global["artha_alankara"] = nullptr;
    global["artha_counts"] = nullptr;
  }

  if (report.modules.count("vakrokti")) {
    ordered_json vj;
    std::set<int> levels;
    ordered_json entries = ordered_json::array();
    for (const VakroktiAnnotation& v : report.vakrokti) {
      levels.insert(v.level);
      ordered_json e;
      e["level"] = v.level;
      e["level_name"] = kVakroktiLevelNames[v.level - 1];
      e["span"] = span_json(v.span);
      if (!v.note.empty()) e["note"] = v.note;
      entries.push_back(e);
    }
    ordered_json lv = ordered_json::array();
    for (int l : levels) lv.push_back(l);
    vj["levels_attested"] = lv;
    vj["richness"] = static_cast<double>(levels.size()) / 6.0;
    vj["entries"] = entries;
    global["vakrokti"] = vj;
  } else {
    global["vakrokti"] = nullptr;
  }

  if (report.modules.count("dhvani")) {
    ordered_json dj;
    ordered_json census;
    census["has_vyangya"] = report.census.has_vyangya;
    census["has_dominant_vyangya"] = report.census.has_dominant_vyangya;
    ordered_json types = ordered_json::array();
    for (const std::string& t : report.census.types_present) types.push_back(t);
    census["types_present"] = types;
    dj["census"] = census;
    ordered_json entries = ordered_json::array();
    for (const DhvaniAnnotation& d : report.dhvani_entries) {
      ordered_json e;
      e["meaning_level"] = meaning_level_to_string(d.meaning_level);
      if (d.type) e["type"] = dhvani_type_to_string(*d.type);
      e["dominance"] = dominance_to_string(d.dominance);
      if (!d.description.empty()) e["description"] = d.description;
      entries.push_back(e);
    }
    dj["entries"] = entries;
    global["dhvani"] = dj;
  } else {
    global["dhvani"] = nullptr;
  }

  if (report.aucitya) {
    ordered_json aj;
    ordered_json signals = ordered_json::object();
    for (const auto& [k, v] : report.aucitya->signals) signals[k] = v;
    ordered_json contrib = ordered_json::object();
    for (const auto& [k, v] : report.aucitya->contributions) contrib[k] = v;
    aj["signals"] = signals;
    aj["contributions"] = contrib;
    aj["score"] = report.aucitya->score;
    aj["warnings"] = warnings_json(report.aucitya->warnings);
    global["aucitya"] = aj;
  } else {
    global["aucitya"] = nullptr;
  }

  if (report.grade_report) {
    ordered_json gj;
    gj["grade"] = grade_to_string(report.grade_report->grade);
    gj["aucitya_score"] = report.grade_report->aucitya;
    gj["confidence"] = report.grade_report->confidence == Confidence::High
                           ? "high"
                           : "reduced";
    gj["rasa_dosha_warnings"] =
        warnings_json(report.grade_report->rasa_dosha_warnings);
    global["grade"] = gj;
  } else {
    global["grade"] = nullptr;
  }

  {
    ordered_json ann;
    ann["present"] = report.annotations_present;
    ordered_json issues = ordered_json::array();
    for (const ValidationIssue& i : report.annotation_validation.issues)
      issues.push_back({{"kind", issue_kind_to_string(i.kind)},
                        {"where", i.where},
                        {"message", i.message}});
    ann["validation_issues"] = issues;
    ann["refs_checked"] = report.annotation_validation.refs_checked;
    global["annotations"] = ann;
  }
  {
    ordered_json flags = ordered_json::array();
    for (const std::string& f : report.flags) flags.push_back(f);
    global["flags"] = flags;
  }
  j["global"] = global;
  return j;
}

namespace {

std::string emit_html(const AnalysisReport& report) {
  std::ostringstream h;
  const std::string title =
      report.composition.title.empty() ? "composition" : report.composition.title;
  h << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
    << "<title>" << html_escape(title) << " — kavya analysis</title>\n"
    << "<style>\n"
       "body{font-family:Georgia,serif;margin:2rem auto;max-width:60rem;"
       "color:#222;line-height:1.5}\n"
       "h1{border-bottom:2px solid #8a4baf}\n"
       "section{border:1px solid #ddd;border-radius:6px;padding:1rem;"
       "margin:1rem 0}\n"
       "section.stanza h2{color:#1f5673;margin-top:0}\n"
       "section.global h2{color:#8a4baf;margin-top:0}\n"
       "table{border-collapse:collapse;margin:.5rem 0}\n"
       "td,th{border:1px solid #ccc;padding:.2rem .6rem;text-align:left}\n"
       ".weights{font-family:monospace;letter-spacing:.15em}\n"
       ".exact{color:#176a1b;font-weight:bold}\n"
       ".fuzzy{color:#a05a00}\n"
       ".grade{font-size:1.3rem;font-weight:bold}\n"
       ".warn{color:#a00}\n"
       "footer{color:#777;font-size:.8rem;margin-top:2rem}\n"
       "</style>\n</head>\n<body>\n";
  h << "<h1>" << html_escape(title) << "</h1>\n";

  for (std::size_t si = 0; si < report.stanzas.size(); ++si) {
    const StanzaAnalysis& sa = report.stanzas[si];
    const Stanza& stanza = report.composition.stanzas[si];
    h << "<section class=\"stanza\" id=\"stanza-" << sa.index << "\">\n"
      << "<h2>Stanza " << sa.index << "</h2>\n<table>\n"
      << "<tr><th>pada</th><th>text</th><th>weights</th><th>syllables</th></tr>\n";
    for (std::size_t pi = 0; pi < stanza.padas.size(); ++pi) {
      const Pada& p = stanza.padas[pi];
      h << "<tr><td>" << p.position_in_stanza << "</td><td>"
        << html_escape(to_iast(p.text)) << "</td><td class=\"weights\">"
        << (pi < sa.scan.pada_weights.size() ? sa.scan.pada_weights[pi] : "")
        << "</td><td>"
        << (pi < sa.scan.syllable_counts.size() ? sa.scan.syllable_counts[pi] : 0)
        << "</td></tr>\n";
    }
    h << "</table>\n";
    if (report.modules.count("meter")) {
      if (!sa.meter_matches.empty()) {
        const MeterMatch& best = sa.meter_matches.front();
        h << "<p>Meter: <span class=\""
          << (best.kind == MatchKind::Exact ? "exact" : "fuzzy") << "\">"
          << html_escape(best.meter) << "</span>"
          << (best.kind == MatchKind::Exact
                  ? " (exact)"
                  : " (fuzzy, distance " + std::to_string(best.distance) + ")")
          << "</p>\n";
      } else {
        h << "<p>Meter: no match within budget</p>\n";
      }
      for (const Suggestion& s : sa.corrections)
        h << "<p class=\"warn\">Correction hint: pada " << s.pada
          << ", syllable " << s.syllable + 1 << " — " << html_escape(s.note)
          << "</p>\n";
    }
    if (report.modules.count("alankara") && !sa.sabda_findings.empty()) {
      h << "<p>Sound figures:</p>\n<ul>\n";
      for (const AlankaraFinding& f : sa.sabda_findings) {
        h << "<li>" << html_escape(f.name) << " — "
          << html_escape(to_iast(f.phoneme_or_suffix));
        if (!f.occurrences.empty())
          h << " (" << f.occurrences.size() << " occurrences)";
        if (!f.participating_words.empty())
          h << " (" << f.participating_words.size() << " words)";
        h << "</li>\n";
      }
      h << "</ul>\n";
    }
    h << "</section>\n";
  }

  h << "<section class=\"global\" id=\"global\">\n<h2>Global analysis</h2>\n";
  if (report.riti && report.guna) {
    h << "<p>Riti: <b>" << riti_to_string(report.riti->riti)
      << "</b> (dominant guna: " << guna_to_string(report.riti->dominant_guna)
      << ")</p>\n"
      << "<table><tr><th>madhurya</th><th>oja</th><th>conjunct density</th>"
         "<th>long compounds</th></tr><tr><td>"
      << fmt3(report.guna->madhurya_score) << "</td><td>"
      << fmt3(report.guna->oja_score) << "</td><td>"
      << fmt3(report.guna->conjunct_density) << "</td><td>"
      << fmt3(report.guna->long_compound_fraction) << "</td></tr></table>\n";
  }
  if (report.rasa) {
    h << "<p>Rasa: <b>";
    if (report.rasa->subtype)
      h << srngara_subtype_to_string(*report.rasa->subtype) << "-";
    h << rasa_to_string(report.rasa->rasa) << "</b></p>\n";
  }
  if (report.modules.count("alankara") && !report.artha_findings.empty()) {
    h << "<p>Meaning figures (annotated):</p>\n<ul>\n";
    for (const AlankaraFinding& f : report.artha_findings) {
      h << "<li>" << html_escape(f.name == "other" ? f.label : f.name);
      if (!f.span.whole_composition) h << " — stanza " << f.span.stanza;
      h << "</li>\n";
    }
    h << "</ul>\n";
  }
  if (report.modules.count("vakrokti") && !report.vakrokti.empty()) {
    std::set<int> levels;
    for (const VakroktiAnnotation& v : report.vakrokti) levels.insert(v.level);
    h << "<p>Vakrokti: " << levels.size() << "/6 levels attested</p>\n";
  }
  if (report.modules.count("dhvani")) {
    h << "<p>Dhvani: " << (report.census.has_vyangya ? "suggested meaning present"
                                                     : "no suggested meaning");
    if (report.census.has_dominant_vyangya) h << ", dominant";
    h << "</p>\n";
  }
  if (report.aucitya)
    h << "<p>Aucitya score: " << fmt3(report.aucitya->score) << "</p>\n";
  if (report.grade_report) {
    h << "<p class=\"grade\">Grade: "
      << grade_to_string(report.grade_report->grade) << "</p>\n";
    for (const RasaDoshaWarning& w : report.grade_report->rasa_dosha_warnings)
      h << "<p class=\"warn\">rasa-dosha: " << html_escape(w.element) << " vs "
        << html_escape(w.rasa) << "</p>\n";
  }
  for (const std::string& f : report.flags)
    h << "<p class=\"warn\">" << html_escape(f) << "</p>\n";
  h << "</section>\n";

  h << "<footer>kavya " << report.tool_version << " — "
    << html_escape(report.composition_hash) << "</footer>\n</body>\n</html>\n";
  return h.str();
}

std::string emit_text(const AnalysisReport& report) {
  std::ostringstream t;
  t << "composition: "
    << (report.composition.title.empty() ? "(untitled)"
                                         : report.composition.title)
    << "\nstanzas: " << report.stanzas.size() << "\n";
  for (std::size_t si = 0; si < report.stanzas.size(); ++si) {
    const StanzaAnalysis& sa = report.stanzas[si];
    t << "\nstanza " << sa.index << "\n";
    const Stanza& stanza = report.composition.stanzas[si];
    for (std::size_t pi = 0; pi < stanza.padas.size(); ++pi)
      t << "  " << to_iast(stanza.padas[pi].text) << "\n    "
        << (pi < sa.scan.pada_weights.size() ? sa.scan.pada_weights[pi] : "")
        << "\n";
    if (!sa.meter_matches.empty()) {
      const MeterMatch& best = sa.meter_matches.front();
      t << "  meter: " << best.meter
        << (best.kind == MatchKind::Exact
                ? " (exact)"
                : " (fuzzy, distance " + std::to_string(best.distance) + ")")
        << "\n";
      for (const Suggestion& s : sa.corrections)
        t << "  correction: pada " << s.pada << " syllable " << s.syllable + 1
          << " — " << s.note << "\n";
    }
    for (const AlankaraFinding& f : sa.sabda_findings)
      t << "  " << f.name << ": " << to_iast(f.phoneme_or_suffix) << "\n";
  }
  t << "\nglobal\n";
  if (report.riti)
    t << "  riti: " << riti_to_string(report.riti->riti) << " (dominant guna "
      << guna_to_string(report.riti->dominant_guna) << ")\n";
  if (report.rasa) {
    t << "  rasa: ";
    if (report.rasa->subtype)
      t << srngara_subtype_to_string(*report.rasa->subtype) << "-";
    t << rasa_to_string(report.rasa->rasa) << "\n";
  }
  if (!report.artha_findings.empty())
    t << "  artha alankaras: " << report.artha_findings.size() << " annotated\n";
  if (!report.vakrokti.empty()) {
    std::set<int> levels;
    for (const VakroktiAnnotation& v : report.vakrokti) levels.insert(v.level);
    t << "  vakrokti: " << levels.size() << "/6 levels\n";
  }
  t << "  dhvani: " << (report.census.has_vyangya ? "present" : "absent")
    << (report.census.has_dominant_vyangya ? " (dominant)" : "") << "\n";
  if (report.aucitya) t << "  aucitya: " << fmt3(report.aucitya->score) << "\n";
  if (report.grade_report)
    t << "  grade: " << grade_to_string(report.grade_report->grade) << "\n";
  for (const std::string& f : report.flags) t << "  flag: " << f << "\n";
  return t.str();
}

}  // namespace

std::string emit(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report_to_json(report).dump(2) + "\n";
    case ReportFormat::Html: return emit_html(report);
    case ReportFormat::Text: return emit_text(report);
  }
  return "";
}

}  // namespace kavya
