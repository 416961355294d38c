// kavya/annotations.cpp

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

#include "kavya/annotations.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace kavya {

using nlohmann::json;

const std::set<std::string> kArthaVocabulary = {
    "rupaka",          "upama",     "malopama",
    "vyatireka",       "tulyayogita", "visesokti_ukta",
    "visesokti_anukta", "other"};

const char* const kVakroktiLevelNames[6] = {
    "phonetic", "lexical-root", "suffix", "sentential", "sectional",
    "compositional"};

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path, path + ": " + msg);
}

[[noreturn]] void label_fail(const std::string& path, const std::string& msg) {
  throw UnknownLabelError(path, path + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) schema_fail(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) schema_fail(path + "/" + key, "expected integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) schema_fail(path + "/" + key, "expected string");
  return v.get<std::string>();
}

std::string opt_string(const json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j.at(key).is_string())
    return j.at(key).get<std::string>();
  return "";
}

WordRef parse_word_ref(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected object with stanza/word");
  WordRef r;
  r.stanza = int_field(j, "stanza", path);
  r.word = int_field(j, "word", path);
  return r;
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      schema_fail(path + "/" + std::to_string(i), "expected integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

Span parse_span(const json& j, const std::string& path) {
  Span s;
  if (!j.is_object()) schema_fail(path, "expected span object");
  if (j.contains("composition")) {
    if (!j.at("composition").is_boolean() || !j.at("composition").get<bool>())
      schema_fail(path + "/composition", "expected true");
    s.whole_composition = true;
    return s;
  }
  s.stanza = int_field(j, "stanza", path);
  if (j.contains("padas")) {
    std::vector<int> p = int_list(j.at("padas"), path + "/padas");
    if (p.size() != 2) schema_fail(path + "/padas", "expected [from, to]");
    s.padas = {p[0], p[1]};
  }
  if (j.contains("words")) s.words = int_list(j.at("words"), path + "/words");
  return s;
}

std::vector<Span> parse_span_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected array of spans");
  std::vector<Span> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_span(j[i], path + "/" + std::to_string(i)));
  return out;
}

json span_to_json(const Span& s) {
  nlohmann::ordered_json j;
  if (s.whole_composition) {
    j["composition"] = true;
    return j;
  }
  j["stanza"] = s.stanza;
  if (s.padas) j["padas"] = {s.padas->first, s.padas->second};
  if (!s.words.empty()) j["words"] = s.words;
  return j;
}

}  // namespace

std::string karaka_to_string(Karaka k) {
  switch (k) {
    case Karaka::Karta: return "karta";
    case Karaka::Karma: return "karma";
    case Karaka::Karana: return "karana";
    case Karaka::Sampradana: return "sampradana";
    case Karaka::Apadana: return "apadana";
    case Karaka::Adhikarana: return "adhikarana";
    case Karaka::SasthiSambandha: return "sasthi-sambandha";
    case Karaka::Other: return "other";
  }
  return "other";
}

Karaka karaka_from_string(const std::string& s) {
  if (s == "karta") return Karaka::Karta;
  if (s == "karma") return Karaka::Karma;
  if (s == "karana") return Karaka::Karana;
  if (s == "sampradana") return Karaka::Sampradana;
  if (s == "apadana") return Karaka::Apadana;
  if (s == "adhikarana") return Karaka::Adhikarana;
  if (s == "sasthi-sambandha") return Karaka::SasthiSambandha;
  if (s == "other") return Karaka::Other;
  label_fail("relation", "unknown karaka label: " + s);
}

std::string rasa_to_string(Rasa r) {
  switch (r) {
    case Rasa::Srngara: return "srngara";
    case Rasa::Hasya: return "hasya";
    case Rasa::Karuna: return "karuna";
    case Rasa::Raudra: return "raudra";
    case Rasa::Vira: return "vira";
    case Rasa::Bhayanaka: return "bhayanaka";
    case Rasa::Bibhatsa: return "bibhatsa";
    case Rasa::Adbhuta: return "adbhuta";
    case Rasa::Santa: return "santa";
  }
  return "srngara";
}

Rasa rasa_from_string(const std::string& s) {
  if (s == "srngara") return Rasa::Srngara;
  if (s == "hasya") return Rasa::Hasya;
  if (s == "karuna") return Rasa::Karuna;
  if (s == "raudra") return Rasa::Raudra;
  if (s == "vira") return Rasa::Vira;
  if (s == "bhayanaka") return Rasa::Bhayanaka;
  if (s == "bibhatsa") return Rasa::Bibhatsa;
  if (s == "adbhuta") return Rasa::Adbhuta;
  if (s == "santa") return Rasa::Santa;
  label_fail("rasa", "unknown rasa label: " + s);
}

std::string srngara_subtype_to_string(SrngaraSubtype s) {
  return s == SrngaraSubtype::Sambhoga ? "sambhoga" : "vipralambha";
}

std::string meaning_level_to_string(MeaningLevel m) {
  switch (m) {
    case MeaningLevel::Vacya: return "vacya";
    case MeaningLevel::Laksana: return "laksana";
    case MeaningLevel::Vyangya: return "vyangya";
  }
  return "vacya";
}

std::string dhvani_type_to_string(DhvaniType t) {
  switch (t) {
    case DhvaniType::Vastu: return "vastu";
    case DhvaniType::Alankara: return "alankara";
    case DhvaniType::Rasa: return "rasa";
  }
  return "vastu";
}

std::string dominance_to_string(Dominance d) {
  return d == Dominance::Dominant ? "dominant" : "subordinate";
}

const RasaAnnotation* AnnotationSet::primary_rasa() const {
  for (const RasaAnnotation& r : rasa)
    if (!r.stanza) return &r;
  return rasa.empty() ? nullptr : &rasa.front();
}

AnnotationSet parse_annotations(const json& doc) {
  AnnotationSet set;
  if (doc.is_null()) return set;
  if (!doc.is_object()) schema_fail("/", "annotation file must be a JSON object");

  if (doc.contains("schema_version")) {
    if (!doc.at("schema_version").is_number_integer())
      schema_fail("/schema_version", "expected integer");
    set.schema_version = doc.at("schema_version").get<int>();
    if (set.schema_version != 1)
      schema_fail("/schema_version", "unsupported schema version");
  }
  set.composition_hash = opt_string(doc, "composition_hash");

  if (doc.contains("compounds")) {
    const json& arr = doc.at("compounds");
    if (!arr.is_array()) schema_fail("/compounds", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/compounds/" + std::to_string(i);
      CompoundAnnotation c;
      c.word = parse_word_ref(arr[i], path);
      const json& cons = field(arr[i], "constituents", path);
      if (!cons.is_array() || cons.size() < 2)
        schema_fail(path + "/constituents", "compound needs >= 2 constituents");
      for (const auto& s : cons) {
        if (!s.is_string()) schema_fail(path + "/constituents", "expected strings");
        c.constituents.push_back(s.get<std::string>());
      }
      c.samasa_type = opt_string(arr[i], "samasa_type");
      set.compounds.push_back(std::move(c));
    }
  }

  if (doc.contains("dependencies")) {
    const json& arr = doc.at("dependencies");
    if (!arr.is_array()) schema_fail("/dependencies", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/dependencies/" + std::to_string(i);
      DependencyAnnotation d;
      d.head = parse_word_ref(field(arr[i], "head", path), path + "/head");
      d.dependent =
          parse_word_ref(field(arr[i], "dependent", path), path + "/dependent");
      try {
        d.relation = karaka_from_string(string_field(arr[i], "relation", path));
      } catch (const UnknownLabelError& e) {
        label_fail(path + "/relation", e.what());
      }
      if (d.head == d.dependent)
        schema_fail(path, "head and dependent must differ");
      set.dependencies.push_back(d);
    }
  }

  if (doc.contains("anvaya")) {
    const json& arr = doc.at("anvaya");
    if (!arr.is_array()) schema_fail("/anvaya", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/anvaya/" + std::to_string(i);
      AnvayaAnnotation a;
      a.stanza = int_field(arr[i], "stanza", path);
      a.order = int_list(field(arr[i], "order", path), path + "/order");
      set.anvaya.push_back(std::move(a));
    }
  }

  if (doc.contains("morph")) {
    const json& arr = doc.at("morph");
    if (!arr.is_array()) schema_fail("/morph", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/morph/" + std::to_string(i);
      MorphAnnotation m;
      m.word = parse_word_ref(arr[i], path);
      const json& tags = field(arr[i], "tags", path);
      if (!tags.is_array()) schema_fail(path + "/tags", "expected array");
      for (const auto& t : tags) {
        if (!t.is_string()) schema_fail(path + "/tags", "expected strings");
        m.tags.push_back(t.get<std::string>());
      }
      set.morph.push_back(std::move(m));
    }
  }

  if (doc.contains("rasa")) {
    const json& arr = doc.at("rasa");
    if (!arr.is_array()) schema_fail("/rasa", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/rasa/" + std::to_string(i);
      RasaAnnotation r;
      const json& scope = field(arr[i], "scope", path);
      if (scope.is_string() && scope.get<std::string>() == "composition") {
        r.stanza.reset();
      } else if (scope.is_number_integer()) {
        r.stanza = scope.get<int>();
      } else {
        schema_fail(path + "/scope", "expected \"composition\" or stanza number");
      }
      try {
        r.rasa = rasa_from_string(string_field(arr[i], "rasa", path));
      } catch (const UnknownLabelError& e) {
        label_fail(path + "/rasa", e.what());
      }
      if (arr[i].contains("subtype")) {
        std::string sub = string_field(arr[i], "subtype", path);
        if (r.rasa != Rasa::Srngara)
          schema_fail(path + "/subtype", "subtype applies to srngara only");
        if (sub == "sambhoga") r.subtype = SrngaraSubtype::Sambhoga;
        else if (sub == "vipralambha") r.subtype = SrngaraSubtype::Vipralambha;
        else label_fail(path + "/subtype", "unknown srngara subtype: " + sub);
      }
      if (arr[i].contains("vibhava"))
        r.vibhava = parse_span_list(arr[i].at("vibhava"), path + "/vibhava");
      if (arr[i].contains("anubhava"))
        r.anubhava = parse_span_list(arr[i].at("anubhava"), path + "/anubhava");
      if (arr[i].contains("vyabhicari"))
        r.vyabhicari =
            parse_span_list(arr[i].at("vyabhicari"), path + "/vyabhicari");
      set.rasa.push_back(std::move(r));
    }
  }

  if (doc.contains("artha_alankara")) {
    const json& arr = doc.at("artha_alankara");
    if (!arr.is_array()) schema_fail("/artha_alankara", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/artha_alankara/" + std::to_string(i);
      ArthaEntry e;
      e.name = string_field(arr[i], "name", path);
      if (!kArthaVocabulary.count(e.name))
        label_fail(path + "/name", "unknown alankara: " + e.name);
      e.label = opt_string(arr[i], "label");
      if (e.name == "other" && e.label.empty())
        schema_fail(path, "entries named 'other' need a label");
      e.span = parse_span(field(arr[i], "span", path), path + "/span");
      e.note = opt_string(arr[i], "note");
      set.artha_alankara.push_back(std::move(e));
    }
  }

  if (doc.contains("vakrokti")) {
    const json& arr = doc.at("vakrokti");
    if (!arr.is_array()) schema_fail("/vakrokti", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/vakrokti/" + std::to_string(i);
      VakroktiAnnotation v;
      v.level = int_field(arr[i], "level", path);
      if (v.level < 1 || v.level > 6)
        label_fail(path + "/level", "vakrokti level must be 1..6");
      v.span = parse_span(field(arr[i], "span", path), path + "/span");
      v.note = opt_string(arr[i], "note");
      set.vakrokti.push_back(std::move(v));
    }
  }

  if (doc.contains("dhvani")) {
    const json& arr = doc.at("dhvani");
    if (!arr.is_array()) schema_fail("/dhvani", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/dhvani/" + std::to_string(i);
      DhvaniAnnotation d;
      std::string level = string_field(arr[i], "meaning_level", path);
      if (level == "vacya") d.meaning_level = MeaningLevel::Vacya;
      else if (level == "laksana") d.meaning_level = MeaningLevel::Laksana;
      else if (level == "vyangya") d.meaning_level = MeaningLevel::Vyangya;
      else label_fail(path + "/meaning_level", "unknown meaning level: " + level);
      if (arr[i].contains("type")) {
        std::string t = string_field(arr[i], "type", path);
        if (t == "vastu") d.type = DhvaniType::Vastu;
        else if (t == "alankara") d.type = DhvaniType::Alankara;
        else if (t == "rasa") d.type = DhvaniType::Rasa;
        else label_fail(path + "/type", "unknown dhvani type: " + t);
      }
      if ((d.meaning_level == MeaningLevel::Vyangya) != d.type.has_value())
        schema_fail(path, "dhvani type must be present exactly for vyangya");
      std::string dom = opt_string(arr[i], "dominance");
      if (dom.empty() || dom == "subordinate") d.dominance = Dominance::Subordinate;
      else if (dom == "dominant") d.dominance = Dominance::Dominant;
      else label_fail(path + "/dominance", "unknown dominance: " + dom);
      d.description = opt_string(arr[i], "description");
      if (arr[i].contains("span"))
        d.span = parse_span(arr[i].at("span"), path + "/span");
      set.dhvani.push_back(std::move(d));
    }
  }

  if (doc.contains("clause_ends")) {
    const json& arr = doc.at("clause_ends");
    if (!arr.is_array()) schema_fail("/clause_ends", "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = "/clause_ends/" + std::to_string(i);
      ClauseEnds c;
      c.stanza = int_field(arr[i], "stanza", path);
      c.words = int_list(field(arr[i], "words", path), path + "/words");
      set.clause_ends.push_back(std::move(c));
    }
  }

  return set;
}

AnnotationSet parse_annotations_text(const std::string& text) {
  std::string t = text;
  if (t.find_first_not_of(" \t\r\n") == std::string::npos)
    return AnnotationSet{};
  json doc;
  try {
    doc = json::parse(t);
  } catch (const json::exception& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
  return parse_annotations(doc);
}

AnnotationSet parse_annotations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open annotation file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_annotations_text(ss.str());
}

nlohmann::ordered_json serialize_annotations(const AnnotationSet& set) {
  nlohmann::ordered_json j;
  j["schema_version"] = set.schema_version;
  if (!set.composition_hash.empty())
    j["composition_hash"] = set.composition_hash;
  if (!set.compounds.empty()) {
    auto& arr = j["compounds"] = json::array();
    for (const auto& c : set.compounds) {
      nlohmann::ordered_json e;
      e["stanza"] = c.word.stanza;
      e["word"] = c.word.word;
      e["constituents"] = c.constituents;
      if (!c.samasa_type.empty()) e["samasa_type"] = c.samasa_type;
      arr.push_back(e);
    }
  }
  if (!set.dependencies.empty()) {
    auto& arr = j["dependencies"] = json::array();
    for (const auto& d : set.dependencies) {
      nlohmann::ordered_json e;
      e["head"] = {{"stanza", d.head.stanza}, {"word", d.head.word}};
      e["dependent"] = {{"stanza", d.dependent.stanza},
                        {"word", d.dependent.word}};
      e["relation"] = karaka_to_string(d.relation);
      arr.push_back(e);
    }
  }
  if (!set.anvaya.empty()) {
    auto& arr = j["anvaya"] = json::array();
    for (const auto& a : set.anvaya)
      arr.push_back({{"stanza", a.stanza}, {"order", a.order}});
  }
  if (!set.morph.empty()) {
    auto& arr = j["morph"] = json::array();
    for (const auto& m : set.morph)
      arr.push_back({{"stanza", m.word.stanza},
                     {"word", m.word.word},
                     {"tags", m.tags}});
  }
  if (!set.rasa.empty()) {
    auto& arr = j["rasa"] = json::array();
    for (const auto& r : set.rasa) {
      nlohmann::ordered_json e;
      if (r.stanza) e["scope"] = *r.stanza;
      else e["scope"] = "composition";
      e["rasa"] = rasa_to_string(r.rasa);
      if (r.subtype) e["subtype"] = srngara_subtype_to_string(*r.subtype);
      auto spans = [](const std::vector<Span>& v) {
        nlohmann::ordered_json a = json::array();
        for (const Span& s : v) a.push_back(span_to_json(s));
        return a;
      };
      if (!r.vibhava.empty()) e["vibhava"] = spans(r.vibhava);
      if (!r.anubhava.empty()) e["anubhava"] = spans(r.anubhava);
      if (!r.vyabhicari.empty()) e["vyabhicari"] = spans(r.vyabhicari);
      arr.push_back(e);
    }
  }
  if (!set.artha_alankara.empty()) {
    auto& arr = j["artha_alankara"] = json::array();
    for (const auto& a : set.artha_alankara) {
      nlohmann::ordered_json e;
      e["name"] = a.name;
      if (!a.label.empty()) e["label"] = a.label;
      e["span"] = span_to_json(a.span);
      if (!a.note.empty()) e["note"] = a.note;
      arr.push_back(e);
    }
  }
  if (!set.vakrokti.empty()) {
    auto& arr = j["vakrokti"] = json::array();
    for (const auto& v : set.vakrokti) {
      nlohmann::ordered_json e;
      e["level"] = v.level;
      e["level_name"] = kVakroktiLevelNames[v.level - 1];
      e["span"] = span_to_json(v.span);
      if (!v.note.empty()) e["note"] = v.note;
      arr.push_back(e);
    }
  }
  if (!set.dhvani.empty()) {
    auto& arr = j["dhvani"] = json::array();
    for (const auto& d : set.dhvani) {
      nlohmann::ordered_json e;
      e["meaning_level"] = meaning_level_to_string(d.meaning_level);
      if (d.type) e["type"] = dhvani_type_to_string(*d.type);
      e["dominance"] = dominance_to_string(d.dominance);
      if (!d.description.empty()) e["description"] = d.description;
      if (d.span) e["span"] = span_to_json(*d.span);
      arr.push_back(e);
    }
  }
  if (!set.clause_ends.empty()) {
    auto& arr = j["clause_ends"] = json::array();
    for (const auto& c : set.clause_ends)
      arr.push_back({{"stanza", c.stanza}, {"words", c.words}});
  }
  return j;
}

std::string issue_kind_to_string(ValidationIssue::Kind k) {
  switch (k) {
    case ValidationIssue::Kind::HashMismatch: return "HashMismatch";
    case ValidationIssue::Kind::DanglingRef: return "DanglingRef";
    case ValidationIssue::Kind::AcyclicityViolation: return "AcyclicityViolation";
    case ValidationIssue::Kind::BijectionViolation: return "BijectionViolation";
    case ValidationIssue::Kind::DhvaniInvariantViolation:
      return "DhvaniInvariantViolation";
    case ValidationIssue::Kind::DuplicateEntry: return "DuplicateEntry";
  }
  return "DanglingRef";
}

namespace {

struct Resolver {
  const Composition& comp;
  std::vector<int> token_counts;  // by stanza index - 1

  explicit Resolver(const Composition& c) : comp(c) {
    for (const Stanza& st : c.stanzas)
      token_counts.push_back(static_cast<int>(tokenize(st).size()));
  }

  bool stanza_ok(int stanza) const {
    return stanza >= 1 && stanza <= static_cast<int>(comp.stanzas.size());
  }
  bool word_ok(int stanza, int word) const {
    return stanza_ok(stanza) && word >= 0 && word < token_counts[stanza - 1];
  }
  bool pada_ok(int stanza, int pada) const {
    return stanza_ok(stanza) && pada >= 1 &&
           pada <= static_cast<int>(comp.stanzas[stanza - 1].padas.size());
  }
};

void check_ref(const Resolver& r, const WordRef& ref, const std::string& where,
               ValidationReport& report) {
  ++report.refs_checked;
  if (!r.word_ok(ref.stanza, ref.word)) {
    report.issues.push_back({ValidationIssue::Kind::DanglingRef, where,
                             "no word " + std::to_string(ref.word) +
                                 " in stanza " + std::to_string(ref.stanza)});
  }
}

void check_span(const Resolver& r, const Span& s, const std::string& where,
                ValidationReport& report) {
  ++report.refs_checked;
  if (s.whole_composition) return;
  if (!r.stanza_ok(s.stanza)) {
    report.issues.push_back({ValidationIssue::Kind::DanglingRef, where,
                             "no stanza " + std::to_string(s.stanza)});
    return;
  }
  if (s.padas &&
      (!r.pada_ok(s.stanza, s.padas->first) ||
       !r.pada_ok(s.stanza, s.padas->second) ||
       s.padas->first > s.padas->second)) {
    report.issues.push_back({ValidationIssue::Kind::DanglingRef, where,
                             "bad pada range in stanza " +
                                 std::to_string(s.stanza)});
  }
  for (int w : s.words)
    if (!r.word_ok(s.stanza, w))
      report.issues.push_back({ValidationIssue::Kind::DanglingRef, where,
                               "no word " + std::to_string(w) + " in stanza " +
                                   std::to_string(s.stanza)});
}

}  // namespace

ValidationReport validate(const AnnotationSet& set, const Composition& comp) {
  ValidationReport report;
  Resolver r(comp);

  if (!set.composition_hash.empty() &&
      set.composition_hash != content_hash(comp)) {
    report.issues.push_back(
        {ValidationIssue::Kind::HashMismatch, "/composition_hash",
         "annotations were made against a different text (expected " +
             content_hash(comp) + ")"});
  }

  for (std::size_t i = 0; i < set.compounds.size(); ++i)
    check_ref(r, set.compounds[i].word, "/compounds/" + std::to_string(i),
              report);

  // Dependencies: refs resolve, same stanza, graph acyclic per stanza.
  std::map<int, std::map<int, std::vector<int>>> adjacency;
  for (std::size_t i = 0; i < set.dependencies.size(); ++i) {
    const auto& d = set.dependencies[i];
    std::string where = "/dependencies/" + std::to_string(i);
    check_ref(r, d.head, where + "/head", report);
    check_ref(r, d.dependent, where + "/dependent", report);
    if (d.head.stanza != d.dependent.stanza) {
      report.issues.push_back({ValidationIssue::Kind::DanglingRef, where,
                               "head and dependent lie in different stanzas"});
      continue;
    }
    adjacency[d.head.stanza][d.head.word].push_back(d.dependent.word);
  }
  for (const auto& [stanza, edges] : adjacency) {
    // Iterative DFS, colors: 0 unseen, 1 active, 2 done.
    std::map<int, int> color;
    bool cyclic = false;
    std::function<void(int)> dfs = [&](int u) {
      color[u] = 1;
      auto it = edges.find(u);
      if (it != edges.end())
        for (int v : it->second) {
          if (color[v] == 1) cyclic = true;
          else if (color[v] == 0) dfs(v);
          if (cyclic) return;
        }
      color[u] = 2;
    };
    for (const auto& [u, _] : edges) {
      if (color[u] == 0) dfs(u);
      if (cyclic) break;
    }
    if (cyclic)
      report.issues.push_back({ValidationIssue::Kind::AcyclicityViolation,
                               "/dependencies",
                               "dependency cycle in stanza " +
                                   std::to_string(stanza)});
  }

  for (std::size_t i = 0; i < set.anvaya.size(); ++i) {
    const auto& a = set.anvaya[i];
    std::string where = "/anvaya/" + std::to_string(i);
    ++report.refs_checked;
    if (!r.stanza_ok(a.stanza)) {
      report.issues.push_back({ValidationIssue::Kind::DanglingRef, where,
                               "no stanza " + std::to_string(a.stanza)});
      continue;
    }
    int n = r.token_counts[a.stanza - 1];
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    bool ok = static_cast<int>(a.order.size()) == n;
    if (ok)
      for (int idx : a.order) {
        if (idx < 0 || idx >= n || seen[static_cast<std::size_t>(idx)]) {
          ok = false;
          break;
        }
        seen[static_cast<std::size_t>(idx)] = true;
      }
    if (!ok)
      report.issues.push_back(
          {ValidationIssue::Kind::BijectionViolation, where,
           "order is not a permutation of the stanza's " + std::to_string(n) +
               " words"});
  }

  for (std::size_t i = 0; i < set.morph.size(); ++i)
    check_ref(r, set.morph[i].word, "/morph/" + std::to_string(i), report);

  for (std::size_t i = 0; i < set.rasa.size(); ++i) {
    const auto& ra = set.rasa[i];
    std::string where = "/rasa/" + std::to_string(i);
    if (ra.stanza && !r.stanza_ok(*ra.stanza))
      report.issues.push_back({ValidationIssue::Kind::DanglingRef,
                               where + "/scope",
                               "no stanza " + std::to_string(*ra.stanza)});
    for (std::size_t k = 0; k < ra.vibhava.size(); ++k)
      check_span(r, ra.vibhava[k], where + "/vibhava/" + std::to_string(k),
                 report);
    for (std::size_t k = 0; k < ra.anubhava.size(); ++k)
      check_span(r, ra.anubhava[k], where + "/anubhava/" + std::to_string(k),
                 report);
    for (std::size_t k = 0; k < ra.vyabhicari.size(); ++k)
      check_span(r, ra.vyabhicari[k], where + "/vyabhicari/" + std::to_string(k),
                 report);
  }

  for (std::size_t i = 0; i < set.artha_alankara.size(); ++i)
    check_span(r, set.artha_alankara[i].span,
               "/artha_alankara/" + std::to_string(i) + "/span", report);

  for (std::size_t i = 0; i < set.vakrokti.size(); ++i)
    check_span(r, set.vakrokti[i].span,
               "/vakrokti/" + std::to_string(i) + "/span", report);

  for (std::size_t i = 0; i < set.dhvani.size(); ++i) {
    const auto& d = set.dhvani[i];
    std::string where = "/dhvani/" + std::to_string(i);
    if ((d.meaning_level == MeaningLevel::Vyangya) != d.type.has_value())
      report.issues.push_back({ValidationIssue::Kind::DhvaniInvariantViolation,
                               where,
                               "dhvani type must be present exactly for vyangya"});
    if (d.span) check_span(r, *d.span, where + "/span", report);
  }

  for (std::size_t i = 0; i < set.clause_ends.size(); ++i) {
    const auto& c = set.clause_ends[i];
    std::string where = "/clause_ends/" + std::to_string(i);
    for (int w : c.words)
      check_ref(r, WordRef{c.stanza, w}, where, report);
  }

  return report;
}

DhvaniCensus dhvani_census(const AnnotationSet& set) {
  DhvaniCensus census;
  for (const DhvaniAnnotation& d : set.dhvani) {
    if (d.meaning_level != MeaningLevel::Vyangya) continue;
    census.has_vyangya = true;
    if (d.dominance == Dominance::Dominant) census.has_dominant_vyangya = true;
    if (d.type) census.types_present.insert(dhvani_type_to_string(*d.type));
  }
  return census;
}

}  // namespace kavya
