// kavya/annotations.hpp

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
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kavya/errors.hpp"
#include "kavya/text.hpp"

namespace kavya {

// Validated human annotations for one composition: the layers that call for
// semantic judgement (compounds, karaka relations, prose order, rasa, artha
// alankaras, vakrokti, dhvani) arrive as data rather than being detected.
//
// Word ids are (stanza, 0-based token index) over whitespace/hyphen
// tokenization of the normalized text; see tokenize().

struct WordRef {
  int stanza = 1;
  int word = 0;
  bool operator==(const WordRef&) const = default;
};

// Either the whole composition or a (stanza, optional pada range, optional
// word list) region.
struct Span {
  bool whole_composition = false;
  int stanza = 0;
  std::optional<std::pair<int, int>> padas;  // 1-based inclusive range
  std::vector<int> words;                    // 0-based token indices
};

struct CompoundAnnotation {
  WordRef word;                       // first token of the compound
  std::vector<std::string> constituents;  // >= 2 component stems
  std::string samasa_type;            // optional label
};

enum class Karaka {
  Karta, Karma, Karana, Sampradana, Apadana, Adhikarana, SasthiSambandha, Other
};

std::string karaka_to_string(Karaka k);
Karaka karaka_from_string(const std::string& s);  // UnknownLabelError

struct DependencyAnnotation {
  WordRef head;
  WordRef dependent;
  Karaka relation = Karaka::Other;
};

struct AnvayaAnnotation {
  int stanza = 1;
  std::vector<int> order;  // permutation of the stanza's token indices
};

struct MorphAnnotation {
  WordRef word;
  std::vector<std::string> tags;  // opaque labels, stored and displayed only
};

enum class Rasa {
  Srngara, Hasya, Karuna, Raudra, Vira, Bhayanaka, Bibhatsa, Adbhuta, Santa
};
enum class SrngaraSubtype { Sambhoga, Vipralambha };

std::string rasa_to_string(Rasa r);
Rasa rasa_from_string(const std::string& s);
std::string srngara_subtype_to_string(SrngaraSubtype s);

struct RasaAnnotation {
  std::optional<int> stanza;  // nullopt = whole composition
  Rasa rasa = Rasa::Srngara;
  std::optional<SrngaraSubtype> subtype;  // srngara only
  std::vector<Span> vibhava;     // stimulants
  std::vector<Span> anubhava;    // bodily responses
  std::vector<Span> vyabhicari;  // transitory emotions

  bool has_evidence() const {
    return !vibhava.empty() || !anubhava.empty() || !vyabhicari.empty();
  }
};

// The artha-alankara controlled vocabulary; `other` carries a free label so
// the full Kavyaprakasa inventory stays annotatable.
extern const std::set<std::string> kArthaVocabulary;

struct ArthaEntry {
  std::string name;   // vocabulary item, or "other"
  std::string label;  // free name when name == "other"
  Span span;
  std::string note;
};

// Six levels of oblique expression, phonetic through compositional.
extern const char* const kVakroktiLevelNames[6];

struct VakroktiAnnotation {
  int level = 1;  // 1..6
  Span span;
  std::string note;
};

enum class MeaningLevel { Vacya, Laksana, Vyangya };
enum class DhvaniType { Vastu, Alankara, Rasa };
enum class Dominance { Dominant, Subordinate };

std::string meaning_level_to_string(MeaningLevel m);
std::string dhvani_type_to_string(DhvaniType t);
std::string dominance_to_string(Dominance d);

struct DhvaniAnnotation {
  MeaningLevel meaning_level = MeaningLevel::Vacya;
  std::optional<DhvaniType> type;  // present iff meaning_level == vyangya
  Dominance dominance = Dominance::Subordinate;
  std::string description;
  std::optional<Span> span;
};

// Clause-final word markers; rhyme detection prefers these over pada-final
// words when present.
struct ClauseEnds {
  int stanza = 1;
  std::vector<int> words;
};

struct AnnotationSet {
  int schema_version = 1;
  std::string composition_hash;  // empty = unchecked
  std::vector<CompoundAnnotation> compounds;
  std::vector<DependencyAnnotation> dependencies;
  std::vector<AnvayaAnnotation> anvaya;
  std::vector<MorphAnnotation> morph;
  std::vector<RasaAnnotation> rasa;
  std::vector<ArthaEntry> artha_alankara;
  std::vector<VakroktiAnnotation> vakrokti;
  std::vector<DhvaniAnnotation> dhvani;
  std::vector<ClauseEnds> clause_ends;

  bool empty() const {
    return compounds.empty() && dependencies.empty() && anvaya.empty() &&
           morph.empty() && rasa.empty() && artha_alankara.empty() &&
           vakrokti.empty() && dhvani.empty() && clause_ends.empty();
  }

  // Composition-scoped rasa if present, else the first stanza-scoped one.
  const RasaAnnotation* primary_rasa() const;
};

// Throws SchemaError / UnknownLabelError with a JSON-pointer-ish path.
AnnotationSet parse_annotations(const nlohmann::json& doc);
AnnotationSet parse_annotations_text(const std::string& text);
AnnotationSet parse_annotations_file(const std::string& path);

// parse(serialize(s)) == s for every valid set.
nlohmann::ordered_json serialize_annotations(const AnnotationSet& set);

struct ValidationIssue {
  enum class Kind {
    HashMismatch,
    DanglingRef,
    AcyclicityViolation,
    BijectionViolation,
    DhvaniInvariantViolation,
    DuplicateEntry
  };
  Kind kind;
  std::string where;    // section/index locator
  std::string message;
};

std::string issue_kind_to_string(ValidationIssue::Kind k);

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  int refs_checked = 0;
  bool ok() const { return issues.empty(); }
};

// Pure structural cross-check of a set against its composition: hash, ref
// resolution, per-stanza dependency acyclicity, anvaya bijectivity and the
// dhvani type invariant. Failures are reported, never thrown.
ValidationReport validate(const AnnotationSet& set, const Composition& comp);

struct DhvaniCensus {
  bool has_vyangya = false;
  bool has_dominant_vyangya = false;
  std::set<std::string> types_present;  // "vastu", "alankara", "rasa"
};

DhvaniCensus dhvani_census(const AnnotationSet& set);

}  // namespace kavya
